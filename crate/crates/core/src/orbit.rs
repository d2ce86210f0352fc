//! Enumeration of H(2) square-tiled surfaces, SL(2,Z)-orbit search, cusp
//! partitions, elliptic points, and census assembly.
//!
//! Identity of surfaces is the canonical key throughout; no floating point
//! appears anywhere. Since -Id fixes every H(2) surface, breadth-first
//! search under {U, U⁻¹, V} already covers the full SL(2,Z) action.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::cylinder::{decompose, CylinderDecomposition, OneCylCoords, TwoCylCoords};
use crate::error::{Error, Result};
use crate::formulas::{self, is_prime};
use crate::origami::{CanonicalKey, Generator, Origami};
use crate::perm::Permutation;
use crate::pool::par_map;
use crate::weierstrass::invariant_from_coords;

/// One SL(2,Z)-orbit with its geometric data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub n: usize,
    /// Orbit cardinality = index of the Veech group in SL(2,Z).
    pub size_d: usize,
    /// Integer Weierstrass points (constant along the orbit).
    pub invariant: u8,
    /// Cusp representatives with their widths, in deterministic order.
    pub cusps: Vec<(CylinderDecomposition, usize)>,
    pub e2: usize,
    pub e3: usize,
    pub genus: usize,
    pub has_one_cylinder: bool,
    pub label: OrbitLabel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitLabel {
    A,
    B,
    Single,
    Other,
}

impl OrbitRecord {
    pub fn num_cusps(&self) -> usize {
        self.cusps.len()
    }

    pub fn cusp_widths(&self) -> Vec<usize> {
        let mut widths: Vec<usize> = self.cusps.iter().map(|&(_, w)| w).collect();
        widths.sort_unstable();
        widths
    }
}

/// Status of one formula cross-check attached to a census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub name: String,
    /// Proved statements fail the census; conjecture mismatches only warn.
    pub conjecture: bool,
    pub passed: bool,
    pub details: String,
}

/// All orbits of primitive n-square surfaces plus formula cross-checks.
#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub n: usize,
    pub orbits: Vec<OrbitRecord>,
    pub total_primitive: usize,
    pub one_cylinder_surfaces: usize,
    pub two_cylinder_surfaces: usize,
    pub one_cylinder_cusps: usize,
    pub two_cylinder_cusps: usize,
    pub checks: Vec<FormulaCheck>,
}

impl CensusRecord {
    pub fn proved_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.conjecture || c.passed)
    }
}

/// Enumerates all n-square H(2) surfaces (or only the primitive ones) from
/// the cylinder parametrization, deduplicated by canonical key. Output is
/// sorted by key.
pub fn enumerate_surfaces(n: usize, primitive_only: bool) -> Result<Vec<CylinderDecomposition>> {
    enumerate_surfaces_keyed(n, primitive_only, 1).map(|m| m.into_values().collect())
}

/// Enumeration keyed by canonical key; `workers` fans out the key
/// computations.
pub fn enumerate_surfaces_keyed(
    n: usize,
    primitive_only: bool,
    workers: usize,
) -> Result<BTreeMap<CanonicalKey, CylinderDecomposition>> {
    if n < 3 {
        return Err(Error::BadN(format!("H(2) needs at least 3 squares, got {n}")));
    }
    let mut tuples: Vec<CylinderDecomposition> = Vec::new();
    // One-cylinder tuples: height h dividing n, cyclic triples a+b+c = n/h,
    // twists in [0, n/h).
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
                // Cyclic rotations produce the same surface; keep lex-least.
                if (a, b, c) > (b, c, a) || (a, b, c) > (c, a, b) {
                    continue;
                }
                for t in 0..w {
                    tuples.push(CylinderDecomposition::OneCylinder(
                        OneCylCoords::with_height(h, a, b, c, t)?,
                    ));
                }
            }
        }
    }
    // Two-cylinder tuples: h1 w1 + h2 w2 = n with w1 < w2.
    for h1 in 1..n {
        for w1 in 1..n {
            if h1 * w1 >= n {
                break;
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
                        tuples.push(CylinderDecomposition::TwoCylinder(TwoCylCoords::new(
                            h1, h2, w1, w2, t1, t2,
                        )?));
                    }
                }
            }
        }
    }
    if primitive_only {
        tuples.retain(|d| d.is_primitive());
    }
    let keyed = par_map(tuples, workers, |d| (d.to_origami().canonical_key(), *d));
    Ok(keyed.into_iter().collect())
}

/// Independent oracle: scans permutation pairs directly, keeping transitive
/// pairs whose vertex permutation is a single 3-cycle.
///
/// Every pair is simultaneously conjugate to one whose `sigma_h` is the
/// canonical permutation of its cycle type, so it suffices to scan cycle
/// types for `sigma_h` against all n! choices of `sigma_v`.
pub fn brute_force_enumerate(n: usize) -> Result<BTreeSet<CanonicalKey>> {
    if !(3..=8).contains(&n) {
        return Err(Error::BadN(format!("brute force is capped at 3 <= n <= 8, got {n}")));
    }
    let mut keys = BTreeSet::new();
    for cycle_type in partitions(n) {
        let sigma_h = canonical_perm_of_cycle_type(n, &cycle_type);
        let mut images: Vec<usize> = (0..n).collect();
        heap_permutations(&mut images, &mut |perm| {
            let sigma_v = Permutation::from_images(perm.to_vec()).expect("permutation by construction");
            let Ok(o) = Origami::new(sigma_h.clone(), sigma_v) else {
                return; // not connected
            };
            let vtype = o.vertex_permutation().cycle_type();
            if vtype == [3] {
                keys.insert(o.canonical_key());
            }
        });
    }
    Ok(keys)
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            acc.push(part);
            rec(n - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn canonical_perm_of_cycle_type(n: usize, cycle_type: &[usize]) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 0;
    for &len in cycle_type {
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    debug_assert_eq!(next, n);
    Permutation::from_cycles(n, &cycles).expect("disjoint by construction")
}

fn heap_permutations(items: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Closure of a primitive seed under {U, U⁻¹, V}, as a sorted key set.
pub fn orbit_bfs(seed: &Origami) -> Result<BTreeSet<CanonicalKey>> {
    seed.validate_h2()?;
    if !decompose(seed)?.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.canonical_key());
    queue.push_back(seed.clone());
    while let Some(o) = queue.pop_front() {
        for g in [Generator::U, Generator::UInv, Generator::V] {
            let img = o.act(g);
            if seen.insert(img.canonical_key()) {
                queue.push_back(img);
            }
        }
    }
    Ok(seen)
}

/// Partitions an orbit (a key set closed under U) into U-orbits. Each cusp
/// reports the cusp-canonical coordinates of its smallest key and its
/// width. Cusps are ordered by that smallest key.
pub fn cusp_partition(orbit: &BTreeSet<CanonicalKey>) -> Vec<(CylinderDecomposition, usize)> {
    let mut visited: BTreeSet<&CanonicalKey> = BTreeSet::new();
    let mut cusps = Vec::new();
    for key in orbit {
        if visited.contains(key) {
            continue;
        }
        let mut width = 0;
        let mut cur = key.clone();
        loop {
            let owned = orbit.get(&cur).expect("orbit is closed under U");
            if !visited.insert(owned) {
                break;
            }
            width += 1;
            cur = owned.to_origami().act(Generator::U).canonical_key();
        }
        let rep = decompose(&key.to_origami()).expect("orbit members are valid").cusp_canonical();
        cusps.push((rep, width));
    }
    cusps
}

/// Counts elliptic fixed points on an orbit closed under U and V:
/// `e2` from V-fixed keys, `e3` from keys fixed by either order-3 word
/// (UV or VU). H(2) admits no order-3 elements, so e3 = 0 is expected.
pub fn elliptic_counts(orbit: &BTreeSet<CanonicalKey>) -> (usize, usize) {
    let mut e2 = 0;
    let mut e3 = 0;
    for key in orbit {
        let o = key.to_origami();
        if o.act(Generator::V).canonical_key() == *key {
            e2 += 1;
        }
        let uv = o.act(Generator::U).act(Generator::V).canonical_key();
        let vu = o.act(Generator::V).act(Generator::U).canonical_key();
        if uv == *key || vu == *key {
            e3 += 1;
        }
    }
    (e2, e3)
}

/// Genus of the quotient of the upper half plane by the Veech group, from
/// the index and elliptic/cusp counts: g = 1 + d/12 − e2/4 − e3/3 − e∞/2.
pub fn genus_gauss_bonnet(d: usize, e2: usize, e3: usize, e_inf: usize) -> Result<usize> {
    let twelve_g = 12 + d as i64 - 3 * e2 as i64 - 4 * e3 as i64 - 6 * e_inf as i64;
    if twelve_g < 0 || twelve_g % 12 != 0 {
        return Err(Error::NonIntegralGenus { twelve_g });
    }
    Ok((twelve_g / 12) as usize)
}

/// Searches the orbit of a primitive seed for a one-cylinder surface,
/// returning the generator word that reaches it and its coordinates.
///
/// `budget` caps the number of explored surfaces; `None` explores the whole
/// orbit, which always suffices for prime n.
pub fn find_one_cylinder_rep(
    seed: &Origami,
    budget: Option<usize>,
) -> Result<(Vec<Generator>, OneCylCoords)> {
    seed.validate_h2()?;
    if !decompose(seed)?.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let budget = budget.unwrap_or(usize::MAX);
    let mut seen: BTreeMap<CanonicalKey, (Option<CanonicalKey>, Option<Generator>)> =
        BTreeMap::new();
    let mut queue = VecDeque::new();
    let seed_key = seed.canonical_key();
    seen.insert(seed_key.clone(), (None, None));
    queue.push_back(seed.clone());
    let mut explored = 0usize;
    while let Some(o) = queue.pop_front() {
        explored += 1;
        if explored > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let key = o.canonical_key();
        if let CylinderDecomposition::OneCylinder(c) = decompose(&o)? {
            // Reconstruct the generator word back to the seed.
            let mut word = Vec::new();
            let mut cur = key;
            while let Some((Some(parent), Some(gen))) = seen.get(&cur).cloned() {
                word.push(gen);
                cur = parent;
            }
            word.reverse();
            return Ok((word, c));
        }
        for g in [Generator::U, Generator::UInv, Generator::V] {
            let img = o.act(g);
            let img_key = img.canonical_key();
            if !seen.contains_key(&img_key) {
                seen.insert(img_key, (Some(key.clone()), Some(g)));
                queue.push_back(img);
            }
        }
    }
    Err(Error::BudgetExceeded(explored))
}

/// Full census of the primitive n-square surfaces: orbits, cusps, elliptic
/// points, genus, invariant, and the formula cross-checks.
pub fn classify_census(n: usize, workers: usize) -> Result<CensusRecord> {
    let keyed = enumerate_surfaces_keyed(n, true, workers)?;
    let total_primitive = keyed.len();

    // Partition into orbits by BFS from each unvisited key.
    let mut orbit_of: BTreeMap<&CanonicalKey, usize> = BTreeMap::new();
    let mut orbit_keys: Vec<BTreeSet<CanonicalKey>> = Vec::new();
    for key in keyed.keys() {
        if orbit_of.contains_key(key) {
            continue;
        }
        let orbit = orbit_bfs(&key.to_origami())?;
        let idx = orbit_keys.len();
        for k in &orbit {
            let owned = keyed
                .get_key_value(k)
                .unwrap_or_else(|| panic!("orbit reached a key missing from the enumeration"))
                .0;
            orbit_of.insert(owned, idx);
        }
        orbit_keys.push(orbit);
    }

    let records: Vec<OrbitRecord> = par_map(orbit_keys, workers.min(4).max(1), |orbit| {
        orbit_record(n, orbit, &keyed)
    })
    .into_iter()
    .collect::<Result<_>>()?;

    let one_cylinder_surfaces = keyed
        .values()
        .filter(|d| matches!(d, CylinderDecomposition::OneCylinder(_)))
        .count();
    let two_cylinder_surfaces = total_primitive - one_cylinder_surfaces;
    let one_cylinder_cusps = records
        .iter()
        .flat_map(|r| &r.cusps)
        .filter(|(rep, _)| matches!(rep, CylinderDecomposition::OneCylinder(_)))
        .count();
    let two_cylinder_cusps =
        records.iter().map(|r| r.num_cusps()).sum::<usize>() - one_cylinder_cusps;

    let mut census = CensusRecord {
        n,
        orbits: records,
        total_primitive,
        one_cylinder_surfaces,
        two_cylinder_surfaces,
        one_cylinder_cusps,
        two_cylinder_cusps,
        checks: Vec::new(),
    };
    census.checks = census_checks(&census);
    Ok(census)
}

fn orbit_record(
    n: usize,
    orbit: &BTreeSet<CanonicalKey>,
    keyed: &BTreeMap<CanonicalKey, CylinderDecomposition>,
) -> Result<OrbitRecord> {
    let cusps = cusp_partition(orbit);
    let (e2, e3) = elliptic_counts(orbit);
    let genus = genus_gauss_bonnet(orbit.len(), e2, e3, cusps.len())?;
    let min_key = orbit.iter().next().expect("orbits are nonempty");
    let invariant = invariant_from_coords(&keyed[min_key])?;
    let has_one_cylinder = orbit
        .iter()
        .any(|k| matches!(keyed[k], CylinderDecomposition::OneCylinder(_)));
    let label = if n % 2 == 0 {
        OrbitLabel::Single
    } else {
        match invariant {
            1 => OrbitLabel::A,
            3 => OrbitLabel::B,
            _ => OrbitLabel::Other,
        }
    };
    debug_assert_eq!(
        cusps.iter().map(|&(_, w)| w).sum::<usize>(),
        orbit.len(),
        "cusp widths partition the orbit"
    );
    Ok(OrbitRecord {
        n,
        size_d: orbit.len(),
        invariant,
        cusps,
        e2,
        e3,
        genus,
        has_one_cylinder,
        label,
    })
}

/// The cross-checks attached to a census. Proved statements are hard
/// failures; statements the source only conjectures are warnings.
fn census_checks(census: &CensusRecord) -> Vec<FormulaCheck> {
    let n = census.n;
    let mut checks = Vec::new();
    let mut push = |name: &str, conjecture: bool, passed: bool, details: String| {
        checks.push(FormulaCheck { name: name.into(), conjecture, passed, details });
    };

    let ems = formulas::ems_total(n as u64);
    push(
        "total_primitive_vs_ems_formula",
        false,
        census.total_primitive as i128 == ems,
        format!("enumerated {} vs formula {}", census.total_primitive, ems),
    );

    let sizes_sum: usize = census.orbits.iter().map(|o| o.size_d).sum();
    push(
        "orbit_sizes_partition_enumeration",
        false,
        sizes_sum == census.total_primitive,
        format!("sum of orbit sizes {} vs {}", sizes_sum, census.total_primitive),
    );

    for orbit in &census.orbits {
        let widths: usize = orbit.cusps.iter().map(|&(_, w)| w).sum();
        push(
            "cusp_widths_sum_to_orbit_size",
            false,
            widths == orbit.size_d,
            format!("orbit {:?}: widths {} vs size {}", orbit.label, widths, orbit.size_d),
        );
        push(
            "no_order_three_elliptic_points",
            false,
            orbit.e3 == 0,
            format!("orbit {:?}: e3 = {}", orbit.label, orbit.e3),
        );
    }

    if n % 2 == 0 {
        push(
            "even_n_single_orbit",
            false,
            census.orbits.len() == 1,
            format!("{} orbits", census.orbits.len()),
        );
        push(
            "even_n_invariant_two",
            false,
            census.orbits.iter().all(|o| o.invariant == 2),
            format!(
                "invariants {:?}",
                census.orbits.iter().map(|o| o.invariant).collect::<Vec<_>>()
            ),
        );
    }

    if is_prime(n as u64) && n > 3 {
        push(
            "prime_two_orbits",
            false,
            census.orbits.len() == 2,
            format!("{} orbits", census.orbits.len()),
        );
        push(
            "prime_invariants_one_and_three",
            false,
            {
                let mut inv: Vec<u8> = census.orbits.iter().map(|o| o.invariant).collect();
                inv.sort_unstable();
                inv == [1, 3]
            },
            format!(
                "invariants {:?}",
                census.orbits.iter().map(|o| o.invariant).collect::<Vec<_>>()
            ),
        );
        push(
            "every_orbit_has_one_cylinder_surface",
            false,
            census.orbits.iter().all(|o| o.has_one_cylinder),
            String::new(),
        );
        // Elliptic points sit in A iff n = 3 mod 4.
        let expect_a = n % 4 == 3;
        let elliptic_ok = census.orbits.iter().all(|o| {
            o.e2 == 0
                || (o.label == OrbitLabel::A) == expect_a
        });
        push(
            "elliptic_points_in_expected_orbit",
            false,
            elliptic_ok,
            format!("n mod 4 = {}, e2 by orbit: {:?}", n % 4, census
                .orbits
                .iter()
                .map(|o| (o.label, o.e2))
                .collect::<Vec<_>>()),
        );

        if let (Ok(one), Ok(sums), Ok(poly)) = (
            formulas::one_cyl_counts(n as u64),
            formulas::two_cyl_exact_sums(n as u64),
            formulas::table_polynomials(n as u64),
        ) {
            let by_label = |label: OrbitLabel| census.orbits.iter().find(|o| o.label == label);
            if let (Some(a), Some(b)) = (by_label(OrbitLabel::A), by_label(OrbitLabel::B)) {
                let (a1, a2) = orbit_cylinder_split(a);
                let (b1, b2) = orbit_cylinder_split(b);
                let (ac1, _) = orbit_cusp_split(a);
                let (bc1, _) = orbit_cusp_split(b);

                push(
                    "one_cyl_surface_counts",
                    false,
                    a1 as i128 == one[0].0 && b1 as i128 == one[1].0
                        && (a1 + b1) as i128 == one[2].0,
                    format!("A {} vs {}, B {} vs {}", a1, one[0].0, b1, one[1].0),
                );
                push(
                    "one_cyl_cusp_counts",
                    false,
                    ac1 as i128 == one[0].1 && bc1 as i128 == one[1].1,
                    format!("A {} vs {}, B {} vs {}", ac1, one[0].1, bc1, one[1].1),
                );
                push(
                    "two_cyl_surface_counts_from_exact_sums",
                    false,
                    a2 as i128 == sums.orbit_a && b2 as i128 == sums.orbit_b
                        && (a2 + b2) as i128 == sums.total,
                    format!("A {} vs {}, B {} vs {}", a2, sums.orbit_a, b2, sums.orbit_b),
                );
                push(
                    "orbit_totals_match_table_polynomials",
                    false,
                    a.size_d as i128 == poly[0][2] && b.size_d as i128 == poly[1][2],
                    format!("A {} vs {}, B {} vs {}", a.size_d, poly[0][2], b.size_d, poly[1][2]),
                );
            }
        }

        let bound = formulas::two_cyl_cusp_bound(n as u64);
        push(
            "two_cyl_cusp_count_vs_gcd_sum",
            false,
            census.two_cylinder_cusps as i128 <= bound
                && (!is_prime(n as u64) || census.two_cylinder_cusps as i128 == bound),
            format!("enumerated {} vs bound {}", census.two_cylinder_cusps, bound),
        );

        if let Ok(expected) = formulas::elliptic_conjecture(n as u64) {
            let e2_total: usize = census.orbits.iter().map(|o| o.e2).sum();
            push(
                "elliptic_count_conjecture",
                true,
                e2_total as i128 == expected,
                format!("e2 total {} vs floor((n+1)/4) = {}", e2_total, expected),
            );
        }
    }

    if n % 2 == 1 && n >= 5 {
        if let Ok((a_total, b_total)) = formulas::conjecture_orbit_totals(n as u64) {
            let sum_by = |label: OrbitLabel| -> i128 {
                census
                    .orbits
                    .iter()
                    .filter(|o| o.label == label)
                    .map(|o| o.size_d as i128)
                    .sum()
            };
            push(
                "orbit_total_conjecture",
                true,
                sum_by(OrbitLabel::A) == a_total && sum_by(OrbitLabel::B) == b_total,
                format!(
                    "A {} vs {}, B {} vs {}",
                    sum_by(OrbitLabel::A),
                    a_total,
                    sum_by(OrbitLabel::B),
                    b_total
                ),
            );
        }
    }

    checks
}

/// Surfaces of an orbit by cylinder count, recovered from the cusp list:
/// U preserves the horizontal decomposition, so every surface of a cusp
/// shares its representative's cylinder count.
fn orbit_cylinder_split(orbit: &OrbitRecord) -> (usize, usize) {
    let mut one = 0;
    let mut two = 0;
    for (rep, width) in &orbit.cusps {
        match rep {
            CylinderDecomposition::OneCylinder(_) => one += width,
            CylinderDecomposition::TwoCylinder(_) => two += width,
        }
    }
    (one, two)
}

fn orbit_cusp_split(orbit: &OrbitRecord) -> (usize, usize) {
    let one = orbit
        .cusps
        .iter()
        .filter(|(rep, _)| matches!(rep, CylinderDecomposition::OneCylinder(_)))
        .count();
    (one, orbit.num_cusps() - one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylinder::parse_surface;

    #[test]
    fn enumeration_counts_at_tiny_n() {
        assert_eq!(enumerate_surfaces(3, false).unwrap().len(), 3);
        assert_eq!(enumerate_surfaces(5, false).unwrap().len(), 27);
        assert_eq!(enumerate_surfaces(4, true).unwrap().len(), 9);
        assert!(enumerate_surfaces(2, false).is_err());
    }

    #[test]
    fn n5_has_10_one_cylinder_and_17_two_cylinder_surfaces() {
        let all = enumerate_surfaces(5, false).unwrap();
        let one = all
            .iter()
            .filter(|d| matches!(d, CylinderDecomposition::OneCylinder(_)))
            .count();
        assert_eq!(one, 10);
        assert_eq!(all.len() - one, 17);
    }

    #[test]
    fn brute_force_matches_enumeration() {
        for n in 3..=6 {
            let brute = brute_force_enumerate(n).unwrap();
            let fast: BTreeSet<CanonicalKey> =
                enumerate_surfaces_keyed(n, false, 1).unwrap().into_keys().collect();
            assert_eq!(brute, fast, "n = {n}");
        }
        assert!(brute_force_enumerate(9).is_err());
    }

    #[test]
    fn orbit_sizes_at_n3_and_n5() {
        let seed = parse_surface("onecyl:1,1,1:0").unwrap().to_origami();
        assert_eq!(orbit_bfs(&seed).unwrap().len(), 3);
        let a = parse_surface("onecyl:1,1,3:0").unwrap().to_origami();
        assert_eq!(orbit_bfs(&a).unwrap().len(), 18);
        let b = parse_surface("onecyl:1,2,2:0").unwrap().to_origami();
        assert_eq!(orbit_bfs(&b).unwrap().len(), 9);
    }

    #[test]
    fn orbit_bfs_rejects_imprimitive_seeds() {
        let seed = parse_surface("twocyl:1,1,2,4,0,0").unwrap().to_origami();
        assert_eq!(orbit_bfs(&seed).unwrap_err(), Error::NotPrimitive);
    }

    #[test]
    fn n3_cusps_and_elliptic_points() {
        let seed = parse_surface("onecyl:1,1,1:0").unwrap().to_origami();
        let orbit = orbit_bfs(&seed).unwrap();
        let cusps = cusp_partition(&orbit);
        let mut widths: Vec<usize> = cusps.iter().map(|&(_, w)| w).collect();
        widths.sort_unstable();
        assert_eq!(widths, vec![1, 2]);
        assert_eq!(elliptic_counts(&orbit), (1, 0));
        assert_eq!(genus_gauss_bonnet(3, 1, 0, 2).unwrap(), 0);
    }

    #[test]
    fn gauss_bonnet_values() {
        assert_eq!(genus_gauss_bonnet(18, 0, 0, 5).unwrap(), 0);
        assert_eq!(genus_gauss_bonnet(9, 1, 0, 3).unwrap(), 0);
        assert_eq!(
            genus_gauss_bonnet(12, 0, 0, 1),
            Err(Error::NonIntegralGenus { twelve_g: 18 })
        );
    }

    #[test]
    fn one_cylinder_search() {
        let seed = parse_surface("onecyl:1,1,3:0").unwrap().to_origami();
        let (word, _) = find_one_cylinder_rep(&seed, None).unwrap();
        assert!(word.is_empty());

        let seed = parse_surface("twocyl:1,1,1,4,0,0").unwrap().to_origami();
        let (word, coords) = find_one_cylinder_rep(&seed, None).unwrap();
        let reached = seed.act_word(&word);
        assert_eq!(
            decompose(&reached).unwrap(),
            CylinderDecomposition::OneCylinder(coords)
        );
        let lens = coords.lengths();
        assert!(lens == (1, 1, 3) || lens == (1, 2, 2) || lens == (1, 3, 1) || lens == (2, 1, 2));
    }

    #[test]
    fn census_n5_matches_appendix() {
        let census = classify_census(5, 1).unwrap();
        assert_eq!(census.total_primitive, 27);
        assert_eq!(census.orbits.len(), 2);
        let a = census.orbits.iter().find(|o| o.label == OrbitLabel::A).unwrap();
        let b = census.orbits.iter().find(|o| o.label == OrbitLabel::B).unwrap();
        assert_eq!((a.size_d, a.num_cusps(), a.e2, a.genus, a.invariant), (18, 5, 0, 0, 1));
        assert_eq!((b.size_d, b.num_cusps(), b.e2, b.genus, b.invariant), (9, 3, 1, 0, 3));
        let mut widths: Vec<usize> = census.orbits.iter().flat_map(|o| o.cusp_widths()).collect();
        widths.sort_unstable();
        assert_eq!(widths, vec![1, 1, 2, 3, 4, 5, 5, 6]);
        assert!(census.proved_checks_pass());
    }

    #[test]
    fn census_n4_is_a_single_orbit_of_invariant_two() {
        let census = classify_census(4, 1).unwrap();
        assert_eq!(census.total_primitive, 9);
        assert_eq!(census.orbits.len(), 1);
        assert_eq!(census.orbits[0].label, OrbitLabel::Single);
        assert_eq!(census.orbits[0].invariant, 2);
        assert!(census.proved_checks_pass());
    }

    #[test]
    fn l_shaped_seeds_land_in_their_orbits_at_n5() {
        use crate::cylinder::{l_shaped, LShaped};
        let census = classify_census(5, 1).unwrap();
        let s1 = l_shaped(5, LShaped::S1).unwrap();
        let s2 = l_shaped(5, LShaped::S2).unwrap();
        let o1 = orbit_bfs(&CylinderDecomposition::TwoCylinder(s1).to_origami()).unwrap();
        let o2 = orbit_bfs(&CylinderDecomposition::TwoCylinder(s2).to_origami()).unwrap();
        assert_eq!(o1.len(), 18);
        assert_eq!(o2.len(), 9);
        let _ = census;
    }
}
