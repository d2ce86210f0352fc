//! Closed-form counts and exact sums for the H(2) census; all arithmetic is
//! exact in i128.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::gcd;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Jordan totient J_2(n) = n² · Π_{p|n} (1 − 1/p²), always an integer.
pub fn jordan_totient_2(n: u64) -> i128 {
    let mut j: i128 = (n as i128) * (n as i128);
    for p in prime_factors(n) {
        let p2 = (p as i128) * (p as i128);
        debug_assert_eq!(j % p2, 0);
        j = j / p2 * (p2 - 1);
    }
    j
}

fn exact_div(num: i128, den: i128) -> i128 {
    assert_eq!(num % den, 0, "expected {num} divisible by {den}");
    num / den
}

/// Total number of primitive n-square-tiled surfaces in H(2):
/// (3/8)(n−2) n² Π_{p|n}(1 − 1/p²).
pub fn ems_total(n: u64) -> i128 {
    exact_div(3 * (n as i128 - 2) * jordan_totient_2(n), 8)
}

/// Row/column labels for the count tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitClass {
    A,
    B,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CylClass {
    One,
    Two,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CountKind {
    Surfaces,
    Cusps,
}

/// An entry of the count table: an exact value, or a marker for quantities
/// the source only controls asymptotically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountValue {
    Exact(i128),
    AsymptoticOnly,
}

/// Exact counts per (orbit, cylinder class, kind), for prime n > 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: u64,
    pub rows: BTreeMap<(OrbitClass, CylClass, CountKind), CountValue>,
}

/// One-cylinder surface and cusp counts for prime n > 3.
///
/// Surfaces: A = n(n−1)(n+1)/24, B = n(n−1)(n−3)/8, all = n(n−1)(n−2)/6;
/// cusps are the same values without the factor n (every one-cylinder cusp
/// has width n).
pub fn one_cyl_counts(n: u64) -> Result<[(i128, i128); 3]> {
    if !is_prime(n) || n <= 3 {
        return Err(Error::BadN(format!("one-cylinder formulas need a prime n > 3, got {n}")));
    }
    let m = n as i128;
    let cusps_a = exact_div((m - 1) * (m + 1), 24);
    let cusps_b = exact_div((m - 1) * (m - 3), 8);
    let cusps_all = exact_div((m - 1) * (m - 2), 6);
    Ok([
        (m * cusps_a, cusps_a),
        (m * cusps_b, cusps_b),
        (m * cusps_all, cusps_all),
    ])
}

/// Exact two-cylinder sums for odd n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoCylSums {
    /// S(n) = Σ k·ℓ over a,b,k,ℓ ≥ 1 with ak + bℓ = n and k < ℓ.
    pub total: i128,
    /// Restriction of S to odd a, b (odd heights).
    pub odd_heights: i128,
    /// Restriction of S to odd k, ℓ (odd widths).
    pub odd_widths: i128,
    /// The mixed-parity remainder S − S_oh − S_ow.
    pub even_odd: i128,
    /// Two-cylinder surfaces in orbit A: S_oh + S_eo/2.
    pub orbit_a: i128,
    /// Two-cylinder surfaces in orbit B: S_ow + S_eo/2.
    pub orbit_b: i128,
}

/// Direct summation of S(n) and its parity splits; surfaces with both
/// heights odd are in orbit A, both widths odd in orbit B, and the
/// mixed-parity classes split in half (the deciding twist ranges over an
/// even width).
pub fn two_cyl_exact_sums(n: u64) -> Result<TwoCylSums> {
    if n % 2 == 0 {
        return Err(Error::BadN(format!("two-cylinder parity splits need odd n, got {n}")));
    }
    let n = n as i128;
    let (mut total, mut odd_heights, mut odd_widths) = (0i128, 0i128, 0i128);
    for k in 1..n {
        for l in k + 1..=n {
            // a k + b l = n with a, b >= 1.
            for b in 1..=(n - k) / l {
                let rest = n - b * l;
                if rest % k != 0 {
                    continue;
                }
                let a = rest / k;
                if a < 1 {
                    continue;
                }
                let term = k * l;
                total += term;
                if a % 2 == 1 && b % 2 == 1 {
                    odd_heights += term;
                }
                if k % 2 == 1 && l % 2 == 1 {
                    odd_widths += term;
                }
            }
        }
    }
    let even_odd = total - odd_heights - odd_widths;
    let half = exact_div(even_odd, 2);
    Ok(TwoCylSums {
        total,
        odd_heights,
        odd_widths,
        even_odd,
        orbit_a: odd_heights + half,
        orbit_b: odd_widths + half,
    })
}

/// Σ gcd(a,k)·gcd(b,ℓ) over ak + bℓ = n, k < ℓ: the exact two-cylinder cusp
/// count for prime n, an upper bound otherwise.
pub fn two_cyl_cusp_bound(n: u64) -> i128 {
    let n = n as i128;
    let mut sum = 0i128;
    for k in 1..n {
        for l in k + 1..=n {
            for b in 1..=(n - k) / l {
                let rest = n - b * l;
                if rest % k != 0 {
                    continue;
                }
                let a = rest / k;
                if a < 1 {
                    continue;
                }
                sum += (gcd(a as i64, k as i64) as i128) * (gcd(b as i64, l as i64) as i128);
            }
        }
    }
    sum
}

/// Conjectured orbit cardinalities for odd n ≥ 5:
/// A = (3/16)(n−1) n² Π(1−1/p²), B = (3/16)(n−3) n² Π(1−1/p²).
pub fn conjecture_orbit_totals(n: u64) -> Result<(i128, i128)> {
    if n % 2 == 0 || n < 5 {
        return Err(Error::BadN(format!("orbit-split conjecture needs odd n >= 5, got {n}")));
    }
    let j = jordan_totient_2(n);
    Ok((
        exact_div(3 * (n as i128 - 1) * j, 16),
        exact_div(3 * (n as i128 - 3) * j, 16),
    ))
}

/// Conjectured number of elliptic points for prime n: ⌊(n+1)/4⌋.
pub fn elliptic_conjecture(n: u64) -> Result<i128> {
    if !is_prime(n) {
        return Err(Error::BadN(format!("elliptic-point conjecture stated for prime n, got {n}")));
    }
    Ok(((n + 1) / 4) as i128)
}

/// The nine per-class counting polynomials for prime n, indexed
/// [orbit A/B/all][one-cyl / two-cyl / all].
///
/// The "all orbits, one cylinder" entry is n(n−1)(n−2)/6, the sum of the A
/// and B rows.
pub fn table_polynomials(n: u64) -> Result<[[i128; 3]; 3]> {
    if !is_prime(n) || n <= 3 {
        return Err(Error::BadN(format!("table polynomials need a prime n > 3, got {n}")));
    }
    let m = n as i128;
    let (m2, m3) = (m * m, m * m * m);
    Ok([
        [
            exact_div(m3 - m, 24),
            exact_div(7 * m3 - 9 * m2 - 7 * m + 9, 48),
            exact_div(3 * (m3 - m2 - m + 1), 16),
        ],
        [
            exact_div(m3 - 4 * m2 + 3 * m, 8),
            exact_div(m3 - m2 - 9 * m + 9, 16),
            exact_div(3 * (m3 - 3 * m2 - m + 3), 16),
        ],
        [
            exact_div(m3 - 3 * m2 + 2 * m, 6),
            exact_div(5 * m3 - 6 * m2 - 17 * m + 18, 24),
            exact_div(3 * (m3 - 2 * m2 - m + 2), 8),
        ],
    ])
}

/// Assembles the exact count table for prime n > 3. Two-cylinder cusp
/// counts per orbit have no closed form and carry the asymptotic marker;
/// the two-cylinder cusp total is the gcd sum.
pub fn build_count_table(n: u64) -> Result<CountTable> {
    let one = one_cyl_counts(n)?;
    let sums = two_cyl_exact_sums(n)?;
    let poly = table_polynomials(n)?;
    use CountKind::*;
    use CylClass as Cy;
    use OrbitClass as Or;
    let mut rows = BTreeMap::new();
    for (i, orbit) in [Or::A, Or::B, Or::All].into_iter().enumerate() {
        rows.insert((orbit, Cy::One, Surfaces), CountValue::Exact(one[i].0));
        rows.insert((orbit, Cy::One, Cusps), CountValue::Exact(one[i].1));
        rows.insert((orbit, Cy::All, Surfaces), CountValue::Exact(poly[i][2]));
        rows.insert((orbit, Cy::All, Cusps), CountValue::AsymptoticOnly);
    }
    rows.insert((Or::A, Cy::Two, Surfaces), CountValue::Exact(sums.orbit_a));
    rows.insert((Or::B, Cy::Two, Surfaces), CountValue::Exact(sums.orbit_b));
    rows.insert((Or::All, Cy::Two, Surfaces), CountValue::Exact(sums.total));
    rows.insert((Or::A, Cy::Two, Cusps), CountValue::AsymptoticOnly);
    rows.insert((Or::B, Cy::Two, Cusps), CountValue::AsymptoticOnly);
    rows.insert((Or::All, Cy::Two, Cusps), CountValue::Exact(two_cyl_cusp_bound(n)));
    Ok(CountTable { n, rows })
}

/// Leading coefficients of the asymptotic statements, kept as exact
/// rationals with a symbolic factor. Reference values only; the census
/// never asserts them at finite n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolicFactor {
    One,
    Pi,
    /// 1/ζ(4) = 90/π⁴.
    InvZeta4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsymptoticCoeff {
    pub num: i64,
    pub den: i64,
    pub factor: SymbolicFactor,
}

impl AsymptoticCoeff {
    pub fn approx(&self) -> f64 {
        let base = self.num as f64 / self.den as f64;
        match self.factor {
            SymbolicFactor::One => base,
            SymbolicFactor::Pi => base * std::f64::consts::PI,
            SymbolicFactor::InvZeta4 => {
                base * 90.0 / std::f64::consts::PI.powi(4)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsymptoticConstants {
    /// Genus of each disc ~ (3/16)(1/12) n³.
    pub genus_coeff: AsymptoticCoeff,
    /// Hyperbolic area of each disc ~ (3/16)(π/3) n³.
    pub area_coeff: AsymptoticCoeff,
    /// Cusps ~ c n² with c = 1/24 for orbit A and 1/8 for orbit B.
    pub cusp_coeff_a: AsymptoticCoeff,
    pub cusp_coeff_b: AsymptoticCoeff,
    /// Two-cylinder surfaces ~ (5/4)(1/6) n³ over both orbits.
    pub two_cyl_surface_coeff: AsymptoticCoeff,
    /// Per-orbit split of the two-cylinder count: (7/8, 3/8) · (1/6) n³.
    pub two_cyl_split_a: AsymptoticCoeff,
    pub two_cyl_split_b: AsymptoticCoeff,
    /// Surface counts at prime n are 1/ζ(4) times the mean order.
    pub mean_order_deviation: AsymptoticCoeff,
    /// Surfaces per orbit ~ (9/8)(1/6) n³ = (3/16) n³.
    pub surfaces_per_orbit_coeff: AsymptoticCoeff,
}

pub const ASYMPTOTIC_CONSTANTS: AsymptoticConstants = AsymptoticConstants {
    genus_coeff: AsymptoticCoeff { num: 1, den: 64, factor: SymbolicFactor::One },
    area_coeff: AsymptoticCoeff { num: 1, den: 16, factor: SymbolicFactor::Pi },
    cusp_coeff_a: AsymptoticCoeff { num: 1, den: 24, factor: SymbolicFactor::One },
    cusp_coeff_b: AsymptoticCoeff { num: 1, den: 8, factor: SymbolicFactor::One },
    two_cyl_surface_coeff: AsymptoticCoeff { num: 5, den: 24, factor: SymbolicFactor::One },
    two_cyl_split_a: AsymptoticCoeff { num: 7, den: 48, factor: SymbolicFactor::One },
    two_cyl_split_b: AsymptoticCoeff { num: 1, den: 16, factor: SymbolicFactor::One },
    mean_order_deviation: AsymptoticCoeff { num: 1, den: 1, factor: SymbolicFactor::InvZeta4 },
    surfaces_per_orbit_coeff: AsymptoticCoeff { num: 3, den: 16, factor: SymbolicFactor::One },
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ems_totals_at_small_n() {
        assert_eq!(ems_total(3), 3);
        assert_eq!(ems_total(4), 9);
        assert_eq!(ems_total(5), 27);
        assert_eq!(ems_total(31), 10_440);
    }

    #[test]
    fn one_cyl_counts_at_5_and_7() {
        let t = one_cyl_counts(5).unwrap();
        assert_eq!(t, [(5, 1), (5, 1), (10, 2)]);
        let t = one_cyl_counts(7).unwrap();
        assert_eq!(t, [(14, 2), (21, 3), (35, 5)]);
        assert!(one_cyl_counts(9).is_err());
        assert!(one_cyl_counts(3).is_err());
    }

    #[test]
    fn one_cyl_split_sums_to_total_for_primes() {
        for n in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101] {
            let [(sa, ca), (sb, cb), (sall, call)] = one_cyl_counts(n).unwrap();
            assert_eq!(sa + sb, sall);
            assert_eq!(ca + cb, call);
        }
    }

    #[test]
    fn two_cyl_sums_at_small_n() {
        assert_eq!(two_cyl_exact_sums(3).unwrap().total, 2);
        let s = two_cyl_exact_sums(5).unwrap();
        assert_eq!(
            (s.total, s.odd_heights, s.odd_widths, s.even_odd, s.orbit_a, s.orbit_b),
            (17, 12, 3, 2, 13, 4)
        );
        assert!(two_cyl_exact_sums(4).is_err());
    }

    #[test]
    fn no_tuple_has_all_four_odd_when_n_is_odd() {
        // parity: ak + bl with a,b,k,l all odd is even.
        for n in [5u64, 7, 9, 11, 15] {
            let s = two_cyl_exact_sums(n).unwrap();
            // oh and ow ranges are disjoint, so their sum never exceeds S.
            assert!(s.odd_heights + s.odd_widths <= s.total);
        }
    }

    #[test]
    fn cusp_bound_small_values() {
        assert_eq!(two_cyl_cusp_bound(3), 1);
        assert_eq!(two_cyl_cusp_bound(5), 6);
    }

    #[test]
    fn conjecture_totals() {
        assert_eq!(conjecture_orbit_totals(5).unwrap(), (18, 9));
        assert_eq!(conjecture_orbit_totals(7).unwrap(), (54, 36));
        for n in (5..=99u64).step_by(2) {
            let (a, b) = conjecture_orbit_totals(n).unwrap();
            assert_eq!(a + b, ems_total(n), "A+B = EMS total at n={n}");
        }
    }

    #[test]
    fn elliptic_conjecture_values() {
        assert_eq!(elliptic_conjecture(3).unwrap(), 1);
        assert_eq!(elliptic_conjecture(5).unwrap(), 1);
        assert_eq!(elliptic_conjecture(13).unwrap(), 3);
        assert!(elliptic_conjecture(9).is_err());
    }

    #[test]
    fn table_polynomials_are_consistent_with_exact_sums() {
        for n in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
            let poly = table_polynomials(n).unwrap();
            let one = one_cyl_counts(n).unwrap();
            let sums = two_cyl_exact_sums(n).unwrap();
            for i in 0..3 {
                assert_eq!(poly[i][0], one[i].0, "one-cyl column at n={n}");
                assert_eq!(poly[i][0] + poly[i][1], poly[i][2], "row sums at n={n}");
            }
            assert_eq!(poly[0][1], sums.orbit_a, "A two-cyl at n={n}");
            assert_eq!(poly[1][1], sums.orbit_b, "B two-cyl at n={n}");
            assert_eq!(poly[2][1], sums.total, "two-cyl total at n={n}");
            assert_eq!(poly[0][2] + poly[1][2], poly[2][2]);
            assert_eq!(poly[2][2], ems_total(n));
        }
    }

    #[test]
    fn count_table_rows_add_up() {
        let table = build_count_table(7).unwrap();
        use CountKind::*;
        use CylClass as Cy;
        use OrbitClass as Or;
        for cy in [Cy::One, Cy::Two, Cy::All] {
            for kind in [Surfaces, Cusps] {
                let get = |o| table.rows.get(&(o, cy, kind)).copied().unwrap();
                if let (CountValue::Exact(a), CountValue::Exact(b), CountValue::Exact(all)) =
                    (get(Or::A), get(Or::B), get(Or::All))
                {
                    assert_eq!(a + b, all);
                }
            }
        }
    }

    #[test]
    fn asymptotic_constants_evaluate() {
        let c = ASYMPTOTIC_CONSTANTS;
        assert!((c.genus_coeff.approx() - 1.0 / 64.0).abs() < 1e-12);
        assert!((c.mean_order_deviation.approx() - 0.9239).abs() < 1e-3);
    }
}
