//! Permutations of `0..n` in one-line notation.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..n`, stored as its image vector: `images[i]` is the
/// image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!(
                    "not a bijection on 0..{n}: images {images:?}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `0..n` from disjoint cycles. Entries absent
    /// from every cycle are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let a = cycle[window];
                let b = cycle[(window + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::Parse(format!("cycle entry out of range 0..{n}")));
                }
                if touched[a] {
                    return Err(Error::Parse(format!("cycles are not disjoint at {a}")));
                }
                touched[a] = true;
                images[a] = b;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Function composition `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&x| self.images[x]).collect();
        Permutation { images }
    }

    /// Conjugate `rho ∘ self ∘ rho⁻¹` — the permutation seen through the
    /// relabeling `rho`.
    pub fn conjugate_by(&self, rho: &Self) -> Self {
        debug_assert_eq!(self.degree(), rho.degree());
        let mut images = vec![0; self.images.len()];
        for i in 0..self.images.len() {
            images[rho.apply(i)] = rho.apply(self.images[i]);
        }
        Permutation { images }
    }

    /// Cycle decomposition, each cycle starting at its smallest element,
    /// cycles ordered by that element. Fixed points are included as
    /// singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of the nontrivial cycles, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self
            .cycles()
            .iter()
            .map(|c| c.len())
            .filter(|&l| l > 1)
            .collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Parses cycle notation over `0..n`, e.g. `"(0 1 2)(3 4)"`; `"()"` is
    /// the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::Parse(format!("expected '(' in {s:?}")));
            };
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("unexpected text before '(' in {s:?}")));
            }
            let Some(close) = rest.find(')') else {
                return Err(Error::Parse(format!("unbalanced '(' in {s:?}")));
            };
            let inner = &rest[open + 1..close];
            let entries: Vec<usize> = inner
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))
                })
                .collect::<Result<_>>()?;
            if !entries.is_empty() {
                cycles.push(entries);
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let b = Permutation::from_images(vec![0, 2, 1]).unwrap();
        // (a ∘ b)(1) = a(b(1)) = a(2) = 0
        assert_eq!(a.compose(&b).apply(1), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn conjugation_relabels() {
        let p = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let rho = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let q = p.conjugate_by(&rho);
        assert_eq!(q, Permutation::from_cycles(4, &[vec![2, 3]]).unwrap());
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        let s = p.to_string();
        assert_eq!(s, "(0 1 2)(3 4)");
        assert_eq!(Permutation::parse_cycles(&s, 5).unwrap(), p);
        assert_eq!(Permutation::parse_cycles("()", 3).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }
}
