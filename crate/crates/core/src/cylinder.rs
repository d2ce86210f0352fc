//! Cylinder coordinates for surfaces in H(2): horizontal decompositions,
//! builders back to permutation pairs, cusp widths and representatives.
//!
//! Every H(2) surface decomposes horizontally into one or two maximal
//! cylinders. The two shapes and their coordinates:
//!
//! - one cylinder (return angles 3π,3π,3π): height `h`, three saddle
//!   connections of lengths `a,b,c` on the bottom boundary in cyclic order
//!   (the top carries them in reversed cyclic order), and a twist
//!   `t ∈ [0, a+b+c)`;
//! - two cylinders (return angles π,3π,5π): heights `h1,h2`, widths
//!   `w1 < w2` (cylinder 1 is the narrow one), twists `t_i ∈ [0, w_i)`.
//!
//! Frozen twist conventions, used by both the builders and the measurement
//! in `decompose`:
//!
//! - two cylinders: columns are anchored at the left end of the narrow
//!   cylinder's bottom connection (the length-w1 connection it shares with
//!   the wide cylinder's top boundary). `t2` is the column, on the wide
//!   cylinder's bottom boundary, of the left end of the connection shared
//!   with the narrow cylinder's top; `t1` positions the narrow cylinder's
//!   top gluing against the same mark.
//! - one cylinder: with bottom arcs `a,b,c` anchored at a singular corner,
//!   the top boundary glues by the pattern `b,a,c` slid right by `t`.
//!
//! Under these conventions the generator `U` shifts every twist by the
//! cylinder height, `t_i ↦ (t_i + h_i) mod w_i`, which is what pins the
//! permutation-level formula for `U` (see tests).

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{gcd, lcm, LatticeBasis};
use crate::origami::Origami;
use crate::perm::Permutation;

/// The two separatrix diagrams that occur in H(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeparatrixDiagram {
    /// Return angles (3π, 3π, 3π).
    OneCylinder,
    /// Return angles (π, 3π, 5π).
    TwoCylinder,
}

impl SeparatrixDiagram {
    /// Return angles of the three horizontal separatrices, in units of π.
    pub fn return_angles(&self) -> [u8; 3] {
        match self {
            SeparatrixDiagram::OneCylinder => [3, 3, 3],
            SeparatrixDiagram::TwoCylinder => [1, 3, 5],
        }
    }
}

/// One-cylinder coordinates. Canonical form: `(a,b,c)` is the
/// lexicographically smallest of its three rotations, and when several
/// rotations realize it (a=b=c) the twist is the smallest equivalent one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OneCylCoords {
    height: usize,
    a: usize,
    b: usize,
    c: usize,
    twist: usize,
}

/// Two-cylinder coordinates. `w1 < w2` strictly; the derived connection
/// lengths are `l1 = w1` and `l2 = w2 - w1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoCylCoords {
    h1: usize,
    h2: usize,
    w1: usize,
    w2: usize,
    t1: usize,
    t2: usize,
}

/// A surface presented in its horizontal cylinder coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CylinderDecomposition {
    OneCylinder(OneCylCoords),
    TwoCylinder(TwoCylCoords),
}

impl OneCylCoords {
    /// Height-1 constructor (the primitive case).
    pub fn new(a: usize, b: usize, c: usize, twist: usize) -> Result<Self> {
        Self::with_height(1, a, b, c, twist)
    }

    /// General constructor; canonicalizes the rotation of `(a,b,c)` and the
    /// twist by building the surface and measuring it back.
    pub fn with_height(height: usize, a: usize, b: usize, c: usize, twist: usize) -> Result<Self> {
        if height == 0 || a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidCoords(
                "height and connection lengths must be positive".into(),
            ));
        }
        let w = a + b + c;
        if twist >= w {
            return Err(Error::InvalidCoords(format!("twist {twist} not in [0, {w})")));
        }
        let raw = OneCylCoords { height, a, b, c, twist };
        match decompose(&raw.build())? {
            CylinderDecomposition::OneCylinder(canon) => Ok(canon),
            CylinderDecomposition::TwoCylinder(_) => unreachable!("builder output is one-cylinder"),
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// The three connection lengths in cyclic order.
    pub fn lengths(&self) -> (usize, usize, usize) {
        (self.a, self.b, self.c)
    }

    pub fn twist(&self) -> usize {
        self.twist
    }

    /// Cylinder width `a + b + c`.
    pub fn width(&self) -> usize {
        self.a + self.b + self.c
    }

    pub fn n(&self) -> usize {
        self.height * self.width()
    }

    /// The gluing pattern of the top boundary onto the bottom boundary at
    /// zero twist: arcs (b)(a)(c) on top onto (a)(b)(c) on the bottom.
    fn pattern(&self, x: usize) -> usize {
        let (a, b) = (self.a, self.b);
        if x < b {
            x + a
        } else if x < a + b {
            x - b
        } else {
            x
        }
    }

    fn build(&self) -> Origami {
        let (w, h, n) = (self.width(), self.height, self.n());
        let id = |x: usize, j: usize| j * w + x;
        let mut sh = vec![0usize; n];
        let mut sv = vec![0usize; n];
        for j in 0..h {
            for x in 0..w {
                sh[id(x, j)] = id((x + 1) % w, j);
                sv[id(x, j)] = if j + 1 < h {
                    id(x, j + 1)
                } else {
                    id(self.pattern((x + self.twist) % w), 0)
                };
            }
        }
        Origami::new(
            Permutation::from_images(sh).expect("builder emits a bijection"),
            Permutation::from_images(sv).expect("builder emits a bijection"),
        )
        .expect("builder output is connected")
    }
}

impl TwoCylCoords {
    pub fn new(h1: usize, h2: usize, w1: usize, w2: usize, t1: usize, t2: usize) -> Result<Self> {
        if h1 == 0 || h2 == 0 || w1 == 0 {
            return Err(Error::InvalidCoords("heights and widths must be positive".into()));
        }
        if w1 >= w2 {
            return Err(Error::InvalidCoords(format!("need w1 < w2, got w1={w1}, w2={w2}")));
        }
        if t1 >= w1 || t2 >= w2 {
            return Err(Error::InvalidCoords(format!(
                "twists ({t1},{t2}) not in [0,{w1})x[0,{w2})"
            )));
        }
        Ok(TwoCylCoords { h1, h2, w1, w2, t1, t2 })
    }

    pub fn heights(&self) -> (usize, usize) {
        (self.h1, self.h2)
    }

    pub fn widths(&self) -> (usize, usize) {
        (self.w1, self.w2)
    }

    pub fn twists(&self) -> (usize, usize) {
        (self.t1, self.t2)
    }

    /// Connection lengths `(l1, l2) = (w1, w2 - w1)`.
    pub fn connection_lengths(&self) -> (usize, usize) {
        (self.w1, self.w2 - self.w1)
    }

    pub fn n(&self) -> usize {
        self.h1 * self.w1 + self.h2 * self.w2
    }

    fn build(&self) -> Origami {
        let (h1, h2, w1, w2) = (self.h1, self.h2, self.w1, self.w2);
        let n = self.n();
        // Wide cylinder squares first, then the narrow cylinder's.
        let wide = |x: usize, j: usize| j * w2 + x;
        let narrow = |x: usize, j: usize| h2 * w2 + j * w1 + x;
        let mut sh = vec![0usize; n];
        let mut sv = vec![0usize; n];
        for j in 0..h2 {
            for x in 0..w2 {
                sh[wide(x, j)] = wide((x + 1) % w2, j);
                sv[wide(x, j)] = if j + 1 < h2 {
                    wide(x, j + 1)
                } else if x < w1 {
                    narrow(x, 0)
                } else {
                    wide((x + self.t2) % w2, 0)
                };
            }
        }
        for j in 0..h1 {
            for x in 0..w1 {
                sh[narrow(x, j)] = narrow((x + 1) % w1, j);
                sv[narrow(x, j)] = if j + 1 < h1 {
                    narrow(x, j + 1)
                } else {
                    wide((self.t2 + (x + self.t1) % w1) % w2, 0)
                };
            }
        }
        Origami::new(
            Permutation::from_images(sh).expect("builder emits a bijection"),
            Permutation::from_images(sv).expect("builder emits a bijection"),
        )
        .expect("builder output is connected")
    }
}

impl CylinderDecomposition {
    pub fn diagram(&self) -> SeparatrixDiagram {
        match self {
            CylinderDecomposition::OneCylinder(_) => SeparatrixDiagram::OneCylinder,
            CylinderDecomposition::TwoCylinder(_) => SeparatrixDiagram::TwoCylinder,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CylinderDecomposition::OneCylinder(c) => c.n(),
            CylinderDecomposition::TwoCylinder(c) => c.n(),
        }
    }

    /// Rebuilds the permutation pair realizing these coordinates.
    pub fn to_origami(&self) -> Origami {
        match self {
            CylinderDecomposition::OneCylinder(c) => c.build(),
            CylinderDecomposition::TwoCylinder(c) => c.build(),
        }
    }

    /// Period lattice spanned by the saddle-connection holonomy vectors.
    pub fn period_lattice(&self) -> LatticeBasis {
        match self {
            CylinderDecomposition::OneCylinder(c) => LatticeBasis::from_generators(&[
                (c.a as i64, 0),
                (c.b as i64, 0),
                (c.c as i64, 0),
                (c.twist as i64, c.height as i64),
            ]),
            CylinderDecomposition::TwoCylinder(c) => {
                let (l1, l2) = c.connection_lengths();
                LatticeBasis::from_generators(&[
                    (l1 as i64, 0),
                    (l2 as i64, 0),
                    (c.t1 as i64, c.h1 as i64),
                    (c.t2 as i64, c.h2 as i64),
                ])
            }
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.period_lattice().is_primitive()
    }

    /// Shifts each twist by `k` times the cylinder height (the action of
    /// U^k on coordinates). Heights and widths are untouched.
    pub fn apply_u(&self, k: i64) -> CylinderDecomposition {
        let shift = |t: usize, h: usize, w: usize| {
            ((t as i64 + k * h as i64).rem_euclid(w as i64)) as usize
        };
        match *self {
            CylinderDecomposition::OneCylinder(c) => {
                let w = c.width();
                // Re-canonicalize: for symmetric (a,a,a) triples twists are
                // identified modulo a, so shifting can leave the canonical
                // range.
                let raw = OneCylCoords { twist: shift(c.twist, c.height, w), ..c };
                match decompose(&raw.build()).expect("stays a valid surface") {
                    d @ CylinderDecomposition::OneCylinder(_) => d,
                    CylinderDecomposition::TwoCylinder(_) => unreachable!(),
                }
            }
            CylinderDecomposition::TwoCylinder(c) => {
                CylinderDecomposition::TwoCylinder(TwoCylCoords {
                    t1: shift(c.t1, c.h1, c.w1),
                    t2: shift(c.t2, c.h2, c.w2),
                    ..c
                })
            }
        }
    }

    /// Size of the U-orbit of a primitive surface:
    /// lcm over cylinders of `w_i / gcd(w_i, h_i)`.
    ///
    /// For one-cylinder surfaces this counts the orbit of the coordinate
    /// tuple; it equals the surface orbit size whenever the triple `(a,b,c)`
    /// has no rotational symmetry, in particular for all prime n > 3.
    pub fn cusp_width(&self) -> Result<usize> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let part = |w: usize, h: usize| w / gcd(w as i64, h as i64) as usize;
        Ok(match self {
            CylinderDecomposition::OneCylinder(c) => part(c.width(), c.height),
            CylinderDecomposition::TwoCylinder(c) => {
                lcm(part(c.w1, c.h1) as u64, part(c.w2, c.h2) as u64) as usize
            }
        })
    }

    /// Reduces each twist modulo `gcd(w_i, h_i)`, the canonical cusp
    /// representative of the U-orbit. Idempotent.
    pub fn cusp_canonical(&self) -> CylinderDecomposition {
        match *self {
            CylinderDecomposition::OneCylinder(c) => {
                let g = gcd(c.width() as i64, c.height as i64) as usize;
                let raw = OneCylCoords { twist: c.twist % g, ..c };
                match decompose(&raw.build()).expect("stays a valid surface") {
                    d @ CylinderDecomposition::OneCylinder(_) => d,
                    CylinderDecomposition::TwoCylinder(_) => unreachable!(),
                }
            }
            CylinderDecomposition::TwoCylinder(c) => {
                CylinderDecomposition::TwoCylinder(canonical_cusp_representative(&c))
            }
        }
    }
}

/// Canonical representative of the U-orbit of a two-cylinder surface:
/// same heights and widths, twists reduced to `t_i mod gcd(w_i, h_i)`.
pub fn canonical_cusp_representative(c: &TwoCylCoords) -> TwoCylCoords {
    let g1 = gcd(c.w1 as i64, c.h1 as i64) as usize;
    let g2 = gcd(c.w2 as i64, c.h2 as i64) as usize;
    TwoCylCoords { t1: c.t1 % g1, t2: c.t2 % g2, ..*c }
}

/// The two L-shaped zero-twist surfaces of prime area n > 3. `S1` lies in
/// orbit A, `S2` in orbit B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LShaped {
    S1,
    S2,
}

pub fn l_shaped(n: usize, which: LShaped) -> Result<TwoCylCoords> {
    if n <= 3 || !crate::formulas::is_prime(n as u64) {
        return Err(Error::BadN(format!("L-shaped representatives need a prime n > 3, got {n}")));
    }
    match which {
        LShaped::S1 => TwoCylCoords::new(1, 1, 1, n - 1, 0, 0),
        LShaped::S2 => TwoCylCoords::new(2, 1, 1, n - 2, 0, 0),
    }
}

/// Decomposes a valid H(2) surface into its horizontal cylinders, measuring
/// canonical coordinates under the frozen twist conventions.
pub fn decompose(o: &Origami) -> Result<CylinderDecomposition> {
    o.validate_h2()?;
    let n = o.n();
    let sh = o.sigma_h();
    let sv = o.sigma_v();

    // Rows of squares: the cycles of sigma_h.
    let rows: Vec<Vec<usize>> = sh.cycles();
    let mut row_of = vec![0usize; n];
    for (r, row) in rows.iter().enumerate() {
        for &i in row {
            row_of[i] = r;
        }
    }

    // A row boundary is free of the saddle exactly when the vertical gluing
    // commutes with sigma_h along the whole row.
    let rigid_above: Vec<bool> = rows
        .iter()
        .map(|row| row.iter().all(|&i| sv.apply(sh.apply(i)) == sh.apply(sv.apply(i))))
        .collect();
    let above = |r: usize| row_of[sv.apply(rows[r][0])];

    // Group rows into cylinders across rigid boundaries.
    let mut cyl_of: Vec<usize> = (0..rows.len()).collect();
    fn find(cyl_of: &mut Vec<usize>, r: usize) -> usize {
        if cyl_of[r] != r {
            let root = find(cyl_of, cyl_of[r]);
            cyl_of[r] = root;
        }
        cyl_of[r]
    }
    for r in 0..rows.len() {
        if rigid_above[r] {
            let (x, y) = (find(&mut cyl_of, r), find(&mut cyl_of, above(r)));
            cyl_of[x] = y;
        }
    }
    let mut cylinders: Vec<Vec<usize>> = Vec::new();
    let mut cyl_index = vec![usize::MAX; rows.len()];
    for r in 0..rows.len() {
        let root = find(&mut cyl_of, r);
        if cyl_index[root] == usize::MAX {
            cyl_index[root] = cylinders.len();
            cylinders.push(Vec::new());
        }
        cyl_index[r] = cyl_index[root];
        cylinders[cyl_index[r]].push(r);
    }

    // Order each cylinder's rows bottom to top. The bottom row is the one
    // whose lower boundary carries the saddle, i.e. not the rigid image of
    // any row of the cylinder.
    let ordered: Vec<Vec<usize>> = cylinders
        .iter()
        .map(|rows_in| {
            let bottom = rows_in
                .iter()
                .copied()
                .find(|&r| !rows_in.iter().any(|&q| rigid_above[q] && above(q) == r))
                .expect("every cylinder has a singular lower boundary");
            let mut order = vec![bottom];
            let mut cur = bottom;
            while rigid_above[cur] {
                cur = above(cur);
                order.push(cur);
            }
            debug_assert_eq!(order.len(), rows_in.len());
            order
        })
        .collect();

    match ordered.len() {
        1 => Ok(CylinderDecomposition::OneCylinder(measure_one_cylinder(
            o, &rows, &ordered[0],
        ))),
        2 => Ok(CylinderDecomposition::TwoCylinder(measure_two_cylinders(
            o, &rows, &ordered,
        ))),
        k => unreachable!("H(2) surfaces have 1 or 2 horizontal cylinders, found {k}"),
    }
}

fn measure_one_cylinder(o: &Origami, rows: &[Vec<usize>], order: &[usize]) -> OneCylCoords {
    let sh = o.sigma_h();
    let sv = o.sigma_v();
    let w = rows[order[0]].len();
    let h = order.len();
    let bottom = &rows[order[0]];

    // Saddle marks on the bottom boundary: squares in the vertex 3-cycle.
    let vperm = o.vertex_permutation();
    let marks: Vec<usize> = bottom
        .iter()
        .copied()
        .filter(|&i| vperm.apply(i) != i)
        .collect();
    debug_assert_eq!(marks.len(), 3, "one-cylinder H(2) bottom carries three saddle marks");

    // Positions along the bottom row, anchored at bottom[0].
    let mut pos = vec![0usize; o.n()];
    {
        let mut x = bottom[0];
        for p in 0..w {
            pos[x] = p;
            x = sh.apply(x);
        }
    }

    let mut best: Option<(usize, usize, usize, usize)> = None;
    for &m in &marks {
        // Arc lengths walking in the sigma_h direction from this mark.
        let mut dists: Vec<usize> = marks
            .iter()
            .map(|&m2| (pos[m2] + w - pos[m]) % w)
            .filter(|&d| d != 0)
            .collect();
        dists.sort_unstable();
        let (a, b) = (dists[0], dists[1] - dists[0]);
        let c = w - dists[1];

        // Columns relative to this anchor, pushed up to the top row.
        let col_bottom = |i: usize| (pos[i] + w - pos[m]) % w;
        let mut col = vec![0usize; o.n()];
        for &i in bottom {
            col[i] = col_bottom(i);
        }
        for &r in &order[..h - 1] {
            for &i in &rows[r] {
                col[sv.apply(i)] = col[i];
            }
        }
        // The top square gluing onto the start of the c-arc pins the twist.
        let q_ab = *bottom
            .iter()
            .find(|&&i| col_bottom(i) == (a + b) % w)
            .expect("bottom row covers all columns");
        let m_c = sv.inverse().apply(q_ab);
        debug_assert!(row_index(rows, order[h - 1], m_c));
        let t = (a + b + w - col[m_c]) % w;
        let cand = (a, b, c, t);
        if best.is_none_or(|cur| cand < cur) {
            best = Some(cand);
        }
    }
    let (a, b, c, t) = best.unwrap();
    OneCylCoords { height: h, a, b, c, twist: t }
}

fn row_index(rows: &[Vec<usize>], r: usize, i: usize) -> bool {
    rows[r].contains(&i)
}

fn measure_two_cylinders(
    o: &Origami,
    rows: &[Vec<usize>],
    ordered: &[Vec<usize>],
) -> TwoCylCoords {
    let sh = o.sigma_h();
    let sv = o.sigma_v();
    let svi = sv.inverse();

    let width = |cyl: &[usize]| rows[cyl[0]].len();
    // Cylinder 1 is the narrow one.
    let (narrow, wide) = if width(&ordered[0]) < width(&ordered[1]) {
        (&ordered[0], &ordered[1])
    } else {
        (&ordered[1], &ordered[0])
    };
    let (w1, w2) = (width(narrow), width(wide));
    assert!(w1 < w2, "H(2) two-cylinder surfaces have distinct widths");
    let (h1, h2) = (narrow.len(), wide.len());

    let in_cyl = |cyl: &[usize], i: usize| cyl.iter().any(|&r| row_index(rows, r, i));

    // The arc of the wide cylinder's top row glued to the narrow cylinder.
    let wide_top = &rows[*wide.last().unwrap()];
    let arc: Vec<usize> = wide_top
        .iter()
        .copied()
        .filter(|&s| in_cyl(narrow, sv.apply(s)))
        .collect();
    debug_assert_eq!(arc.len(), w1);
    let s0 = *arc
        .iter()
        .find(|&&s| !arc.contains(&{
            let p = sh.inverse().apply(s);
            p
        }))
        .expect("gluing arc is a strict sub-arc of the wide top boundary");

    // Columns on the wide cylinder, anchored at s0, pushed down to row 0.
    let n = o.n();
    let mut col = vec![usize::MAX; n];
    {
        let mut x = s0;
        for p in 0..w2 {
            col[x] = p;
            x = sh.apply(x);
        }
    }
    for &r in wide[..h2 - 1].iter().rev() {
        for &i in &rows[r] {
            col[i] = col[sv.apply(i)];
        }
    }
    // Columns on the narrow cylinder, anchored by the gluing from s0.
    {
        let mut x = sv.apply(s0);
        for p in 0..w1 {
            col[x] = p;
            x = sh.apply(x);
        }
    }
    for &r in &narrow[..h1 - 1] {
        for &i in &rows[r] {
            col[sv.apply(i)] = col[i];
        }
    }

    // Left end of the connection the narrow top glues onto, on the wide
    // cylinder's bottom boundary.
    let narrow_top = &rows[*narrow.last().unwrap()];
    let image: Vec<usize> = narrow_top.iter().map(|&q| sv.apply(q)).collect();
    let s5 = *image
        .iter()
        .find(|&&s| !image.contains(&sh.inverse().apply(s)))
        .expect("narrow top glues onto a strict sub-arc");
    let t2 = col[s5];
    let t1 = (w1 - col[svi.apply(s5)]) % w1;

    if cfg!(debug_assertions) {
        // The remaining top-boundary arc of the wide cylinder must glue to
        // its own bottom with the same offset t2.
        for &s in wide_top {
            if col[s] >= w1 {
                debug_assert_eq!(col[sv.apply(s)], (col[s] + t2) % w2);
            }
        }
    }

    TwoCylCoords { h1, h2, w1, w2, t1, t2 }
}

impl fmt::Display for OneCylCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "onecyl:{},{},{}:{}", self.a, self.b, self.c, self.twist)?;
        if self.height != 1 {
            write!(f, ":{}", self.height)?;
        }
        Ok(())
    }
}

impl fmt::Display for TwoCylCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "twocyl:{},{},{},{},{},{}",
            self.h1, self.h2, self.w1, self.w2, self.t1, self.t2
        )
    }
}

impl fmt::Display for CylinderDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CylinderDecomposition::OneCylinder(c) => c.fmt(f),
            CylinderDecomposition::TwoCylinder(c) => c.fmt(f),
        }
    }
}

/// Parses the seed grammar:
/// `onecyl:a,b,c:t[:h]` or `twocyl:h1,h2,w1,w2,t1,t2`.
pub fn parse_surface(s: &str) -> Result<CylinderDecomposition> {
    let s = s.trim();
    let nums = |part: &str| -> Result<Vec<usize>> {
        part.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer {tok:?} in {s:?}")))
            })
            .collect()
    };
    if let Some(rest) = s.strip_prefix("onecyl:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(Error::Parse(format!("expected onecyl:a,b,c:t[:h], got {s:?}")));
        }
        let lens = nums(parts[0])?;
        if lens.len() != 3 {
            return Err(Error::Parse(format!("expected three lengths in {s:?}")));
        }
        let t = nums(parts[1])?;
        if t.len() != 1 {
            return Err(Error::Parse(format!("expected one twist in {s:?}")));
        }
        let h = if parts.len() == 3 {
            let h = nums(parts[2])?;
            if h.len() != 1 {
                return Err(Error::Parse(format!("expected one height in {s:?}")));
            }
            h[0]
        } else {
            1
        };
        Ok(CylinderDecomposition::OneCylinder(OneCylCoords::with_height(
            h, lens[0], lens[1], lens[2], t[0],
        )?))
    } else if let Some(rest) = s.strip_prefix("twocyl:") {
        let v = nums(rest)?;
        if v.len() != 6 {
            return Err(Error::Parse(format!(
                "expected twocyl:h1,h2,w1,w2,t1,t2, got {s:?}"
            )));
        }
        Ok(CylinderDecomposition::TwoCylinder(TwoCylCoords::new(
            v[0], v[1], v[2], v[3], v[4], v[5],
        )?))
    } else {
        Err(Error::Parse(format!("seed must start with onecyl: or twocyl:, got {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::origami::Generator;

    fn two(h1: usize, h2: usize, w1: usize, w2: usize, t1: usize, t2: usize) -> TwoCylCoords {
        TwoCylCoords::new(h1, h2, w1, w2, t1, t2).unwrap()
    }

    #[test]
    fn roundtrip_simple_two_cylinder() {
        let c = two(1, 1, 1, 4, 0, 2);
        let d = decompose(&c.build()).unwrap();
        assert_eq!(d, CylinderDecomposition::TwoCylinder(c));
    }

    #[test]
    fn one_cylinder_n3_is_h2() {
        let c = OneCylCoords::new(1, 1, 1, 0).unwrap();
        let sig = c.build().validate_h2().unwrap();
        assert_eq!(sig.genus, 2);
    }

    #[test]
    fn two_cylinder_n3_is_h2() {
        let c = two(1, 1, 1, 2, 0, 0);
        c.build().validate_h2().unwrap();
    }

    #[test]
    fn rejects_bad_widths() {
        assert_eq!(
            TwoCylCoords::new(1, 1, 3, 2, 0, 0).unwrap_err(),
            Error::InvalidCoords("need w1 < w2, got w1=3, w2=2".into())
        );
    }

    #[test]
    fn v_turns_the_n3_one_cylinder_into_two() {
        let s1 = OneCylCoords::new(1, 1, 1, 0).unwrap().build();
        let d = decompose(&s1.act(Generator::V)).unwrap();
        match d {
            CylinderDecomposition::TwoCylinder(c) => {
                assert_eq!(c.heights(), (1, 1));
                assert_eq!(c.widths(), (1, 2));
            }
            _ => panic!("expected a two-cylinder decomposition, got {d}"),
        }
    }

    #[test]
    fn u_shifts_twists_by_heights_everywhere() {
        // The convention-pinning test: for every two-cylinder tuple of area
        // <= 12 the permutation-level U action realizes
        // t_i -> (t_i + h_i) mod w_i, and likewise for one-cylinder tuples.
        for n in 3..=12usize {
            for c in all_two_cyl_tuples(n) {
                let via_perms = decompose(&c.build().act(Generator::U)).unwrap();
                let via_coords = CylinderDecomposition::TwoCylinder(c).apply_u(1);
                assert_eq!(via_perms, via_coords, "U twist rule at {c}");
            }
            for c in all_one_cyl_tuples(n) {
                let via_perms = decompose(&c.build().act(Generator::U)).unwrap();
                let via_coords = CylinderDecomposition::OneCylinder(c).apply_u(1);
                assert_eq!(via_perms, via_coords, "U twist rule at {c}");
            }
        }
    }

    #[test]
    fn decompose_inverts_to_origami_on_all_small_tuples() {
        for n in 3..=12usize {
            for c in all_two_cyl_tuples(n) {
                let d = CylinderDecomposition::TwoCylinder(c);
                assert_eq!(decompose(&d.to_origami()).unwrap(), d);
            }
            for c in all_one_cyl_tuples(n) {
                let d = CylinderDecomposition::OneCylinder(c);
                assert_eq!(decompose(&d.to_origami()).unwrap(), d);
            }
        }
    }

    #[test]
    fn minus_id_fixes_every_small_surface() {
        for n in 3..=10usize {
            for c in all_two_cyl_tuples(n) {
                let o = c.build();
                assert_eq!(o.act(Generator::MinusId).canonical_key(), o.canonical_key());
            }
            for c in all_one_cyl_tuples(n) {
                let o = c.build();
                assert_eq!(o.act(Generator::MinusId).canonical_key(), o.canonical_key());
            }
        }
    }

    pub(crate) fn all_two_cyl_tuples(n: usize) -> Vec<TwoCylCoords> {
        let mut out = Vec::new();
        for h1 in 1..=n {
            for w1 in 1..=n {
                if h1 * w1 >= n {
                    continue;
                }
                let rest = n - h1 * w1;
                for h2 in 1..=rest {
                    if rest % h2 != 0 {
                        continue;
                    }
                    let w2 = rest / h2;
                    if w2 <= w1 {
                        continue;
                    }
                    for t1 in 0..w1 {
                        for t2 in 0..w2 {
                            out.push(two(h1, h2, w1, w2, t1, t2));
                        }
                    }
                }
            }
        }
        out
    }

    pub(crate) fn all_one_cyl_tuples(n: usize) -> Vec<OneCylCoords> {
        let mut out = Vec::new();
        for h in 1..=n {
            if n % h != 0 {
                continue;
            }
            let w = n / h;
            if w < 3 {
                continue;
            }
            for a in 1..=w - 2 {
                for b in 1..=w - a - 1 {
                    let c = w - a - b;
                    for t in 0..w {
                        out.push(OneCylCoords::with_height(h, a, b, c, t).unwrap());
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn cusp_widths_match_lemma_values() {
        assert_eq!(
            CylinderDecomposition::TwoCylinder(two(1, 1, 1, 4, 0, 0)).cusp_width().unwrap(),
            4
        );
        assert_eq!(
            CylinderDecomposition::TwoCylinder(two(1, 2, 1, 2, 0, 0)).cusp_width().unwrap(),
            1
        );
        let one = OneCylCoords::new(1, 1, 3, 0).unwrap();
        assert_eq!(CylinderDecomposition::OneCylinder(one).cusp_width().unwrap(), 5);
        // Imprimitive surfaces have no cusp width.
        let c = CylinderDecomposition::TwoCylinder(two(1, 1, 2, 4, 0, 0));
        assert_eq!(c.cusp_width(), Err(Error::NotPrimitive));
    }

    #[test]
    fn cusp_representative_reduces_twists() {
        let c = canonical_cusp_representative(&two(1, 1, 1, 4, 0, 3));
        assert_eq!(c.twists(), (0, 0));
        let c = canonical_cusp_representative(&two(1, 2, 1, 2, 0, 1));
        assert_eq!(c.twists(), (0, 1));
        assert_eq!(canonical_cusp_representative(&c), c);
    }

    #[test]
    fn apply_u_examples() {
        let c = CylinderDecomposition::TwoCylinder(two(1, 1, 1, 4, 0, 0));
        assert_eq!(c.apply_u(0), c);
        match c.apply_u(2) {
            CylinderDecomposition::TwoCylinder(c2) => assert_eq!(c2.twists(), (0, 2)),
            _ => unreachable!(),
        }
        // Applying the full cusp width returns to the same cusp point.
        let w = c.cusp_width().unwrap();
        assert_eq!(c.apply_u(w as i64), c);
    }

    #[test]
    fn l_shaped_representatives() {
        let s1 = l_shaped(13, LShaped::S1).unwrap();
        assert_eq!((s1.heights(), s1.widths()), ((1, 1), (1, 12)));
        let s2 = l_shaped(13, LShaped::S2).unwrap();
        assert_eq!((s2.heights(), s2.widths()), ((2, 1), (1, 11)));
        assert!(matches!(l_shaped(3, LShaped::S1), Err(Error::BadN(_))));
        assert!(matches!(l_shaped(9, LShaped::S2), Err(Error::BadN(_))));
    }

    #[test]
    fn grammar_roundtrip() {
        for s in ["onecyl:1,1,3:2", "twocyl:1,2,1,2,0,1", "onecyl:1,1,1:0:2"] {
            let d = parse_surface(s).unwrap();
            assert_eq!(parse_surface(&d.to_string()).unwrap(), d);
        }
        assert!(parse_surface("onecyl:1,1:0").is_err());
        assert!(parse_surface("twocyl:1,1,3,2,0,0").is_err());
        assert!(parse_surface("hexcyl:1").is_err());
    }

    #[test]
    fn period_lattice_examples() {
        // Analogue of the 2Z x Z example: heights (1,1), widths (2,4).
        let c = CylinderDecomposition::TwoCylinder(two(1, 1, 2, 4, 0, 0));
        let basis = c.period_lattice();
        assert_eq!(basis.index(), 2);
        assert!(!basis.is_primitive());
        let one = CylinderDecomposition::OneCylinder(OneCylCoords::new(1, 1, 1, 0).unwrap());
        assert!(one.period_lattice().is_primitive());
    }
}
