//! Square-tiled surfaces as pairs of permutations, canonical forms, and the
//! action of the standard SL(2,Z) generators.
//!
//! A surface tiled by `n` unit squares is encoded by two permutations of the
//! squares: `sigma_h` sends each square to its right neighbor, `sigma_v` to
//! the square above. Two pairs describe the same surface exactly when they
//! are simultaneous conjugates (a relabeling of the squares).
//!
//! Frozen conventions (everything downstream depends on these):
//! - vertices of the tiling correspond to orbits of the commutator
//!   `c = sigma_v ∘ sigma_h ∘ sigma_v⁻¹ ∘ sigma_h⁻¹`, labeling each vertex
//!   by the squares whose bottom-left corner sits on it; a `c`-cycle of
//!   length k is a cone point of angle 2πk;
//! - `U` is the parabolic fixing the horizontal direction and acts as
//!   `(sigma_h, sigma_v) ↦ (sigma_h, sigma_v ∘ sigma_h)`;
//! - `V` is the quarter turn `(sigma_h, sigma_v) ↦ (sigma_v⁻¹, sigma_h)`,
//!   so `V∘V` is `-Id = (sigma_h⁻¹, sigma_v⁻¹)` and `V⁴` is the identity.
//!
//! The `U` convention is pinned by the requirement that its induced action
//! on cylinder coordinates shifts every twist by the cylinder height
//! (checked by round-trip tests in the cylinder module).

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A square-tiled surface: square count plus the two gluing permutations.
#[derive(Debug, Clone)]
pub struct Origami {
    n: usize,
    sigma_h: Permutation,
    sigma_v: Permutation,
}

/// Cone-point data of a translation surface: the orders of the zeros of the
/// 1-form and the genus they force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSignature {
    /// Zero orders k_i >= 1, sorted descending. Empty for a torus.
    pub cone_orders: Vec<usize>,
    pub genus: usize,
}

impl StratumSignature {
    pub fn is_h2(&self) -> bool {
        self.cone_orders == [2]
    }
}

/// The standard SL(2,Z) generators acted on surfaces, plus -Id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    U,
    UInv,
    V,
    MinusId,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::U => write!(f, "U"),
            Generator::UInv => write!(f, "U^-1"),
            Generator::V => write!(f, "V"),
            Generator::MinusId => write!(f, "-Id"),
        }
    }
}

/// Canonical form of a surface: a byte encoding of the lexicographically
/// minimal simultaneous conjugate of `(sigma_h, sigma_v)`.
///
/// Keys are equal iff the surfaces are relabelings of each other, and they
/// decode back to an `Origami`, so orbit searches can store keys alone.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    bytes: Box<[u8]>,
}

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn n(&self) -> usize {
        self.bytes.len() / 4
    }

    /// Reconstructs the canonical-form surface this key encodes.
    pub fn to_origami(&self) -> Origami {
        let n = self.n();
        let read = |off: usize, i: usize| {
            let b = &self.bytes[2 * (off + i)..];
            u16::from_be_bytes([b[0], b[1]]) as usize
        };
        let sigma_h = Permutation::from_images((0..n).map(|i| read(0, i)).collect())
            .expect("key encodes a permutation");
        let sigma_v = Permutation::from_images((0..n).map(|i| read(n, i)).collect())
            .expect("key encodes a permutation");
        Origami { n, sigma_h, sigma_v }
    }

    /// Short hex fingerprint for node names in DOT output.
    pub fn fingerprint(&self) -> String {
        // FNV-1a, enough to label nodes readably; identity is the full key.
        let mut h: u64 = 0xcbf29ce484222325;
        for &b in self.bytes.iter() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("{h:016x}")
    }
}

impl Origami {
    /// Builds a surface from its two gluing permutations. Requires matching
    /// degrees, n >= 1 and connectedness.
    pub fn new(sigma_h: Permutation, sigma_v: Permutation) -> Result<Self> {
        if sigma_h.degree() != sigma_v.degree() {
            return Err(Error::Parse("permutation degrees differ".into()));
        }
        let n = sigma_h.degree();
        if n == 0 {
            return Err(Error::BadN("need at least one square".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::BadN(format!("square count {n} exceeds {}", u16::MAX)));
        }
        let o = Origami { n, sigma_h, sigma_v };
        if !o.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(o)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma_h(&self) -> &Permutation {
        &self.sigma_h
    }

    pub fn sigma_v(&self) -> &Permutation {
        &self.sigma_v
    }

    fn is_connected(&self) -> bool {
        // BFS over the action of the two permutations and their inverses.
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let hi = self.sigma_h.inverse();
        let vi = self.sigma_v.inverse();
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in [
                self.sigma_h.apply(x),
                self.sigma_v.apply(x),
                hi.apply(x),
                vi.apply(x),
            ] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// The vertex permutation `sigma_v ∘ sigma_h ∘ sigma_v⁻¹ ∘ sigma_h⁻¹`.
    ///
    /// Its orbits are the vertex classes of the tiling: square `i` belongs
    /// to the orbit of the vertex under its bottom-left corner.
    pub fn vertex_permutation(&self) -> Permutation {
        let hi = self.sigma_h.inverse();
        let vi = self.sigma_v.inverse();
        self.sigma_v.compose(&self.sigma_h).compose(&vi).compose(&hi)
    }

    /// Cone data of the surface. Fails only on a disconnected pair.
    pub fn stratum_signature(&self) -> Result<StratumSignature> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let cone_orders: Vec<usize> = self
            .vertex_permutation()
            .cycle_type()
            .into_iter()
            .map(|l| l - 1)
            .collect();
        let total: usize = cone_orders.iter().sum();
        debug_assert!(total % 2 == 0, "zero orders of an abelian differential sum to 2g-2");
        Ok(StratumSignature { cone_orders, genus: total / 2 + 1 })
    }

    /// Checks connectedness and that the surface lies in H(2) (a single
    /// cone point of angle 6π), returning the signature.
    pub fn validate_h2(&self) -> Result<StratumSignature> {
        let sig = self.stratum_signature()?;
        if !sig.is_h2() {
            return Err(Error::WrongStratum { found: sig.cone_orders });
        }
        Ok(sig)
    }

    /// Applies one of the SL(2,Z) generators (or -Id) to the surface.
    pub fn act(&self, g: Generator) -> Origami {
        let (sigma_h, sigma_v) = match g {
            Generator::U => (self.sigma_h.clone(), self.sigma_v.compose(&self.sigma_h)),
            Generator::UInv => (
                self.sigma_h.clone(),
                self.sigma_v.compose(&self.sigma_h.inverse()),
            ),
            Generator::V => (self.sigma_v.inverse(), self.sigma_h.clone()),
            Generator::MinusId => (self.sigma_h.inverse(), self.sigma_v.inverse()),
        };
        Origami { n: self.n, sigma_h, sigma_v }
    }

    /// Applies a word of generators, leftmost letter first.
    pub fn act_word(&self, word: &[Generator]) -> Origami {
        word.iter().fold(self.clone(), |o, &g| o.act(g))
    }

    /// Canonical key: minimum over all BFS relabelings (one per start
    /// square, edges explored right-then-up) of the byte encoding of the
    /// relabeled pair. O(n²).
    pub fn canonical_key(&self) -> CanonicalKey {
        let n = self.n;
        let mut best: Option<Vec<u8>> = None;
        let mut relabel = vec![usize::MAX; n];
        let mut order = vec![0usize; n];
        for start in 0..n {
            relabel.fill(usize::MAX);
            relabel[start] = 0;
            order[0] = start;
            let mut next = 1;
            let mut head = 0;
            while head < next {
                let sq = order[head];
                head += 1;
                for nb in [self.sigma_h.apply(sq), self.sigma_v.apply(sq)] {
                    if relabel[nb] == usize::MAX {
                        relabel[nb] = next;
                        order[next] = nb;
                        next += 1;
                    }
                }
            }
            debug_assert_eq!(next, n, "surface must be connected");
            let mut bytes = Vec::with_capacity(4 * n);
            for perm in [&self.sigma_h, &self.sigma_v] {
                for new in 0..n {
                    let img = relabel[perm.apply(order[new])] as u16;
                    bytes.extend_from_slice(&img.to_be_bytes());
                }
            }
            if best.as_ref().is_none_or(|b| bytes < *b) {
                best = Some(bytes);
            }
        }
        CanonicalKey { bytes: best.expect("n >= 1").into_boxed_slice() }
    }

    /// Key equality: are the two surfaces simultaneous conjugates?
    pub fn same_surface(&self, other: &Origami) -> bool {
        self.n == other.n && self.canonical_key() == other.canonical_key()
    }

    /// Relabels the squares by `rho`, yielding the conjugated pair.
    pub fn relabel(&self, rho: &Permutation) -> Origami {
        Origami {
            n: self.n,
            sigma_h: self.sigma_h.conjugate_by(rho),
            sigma_v: self.sigma_v.conjugate_by(rho),
        }
    }
}
