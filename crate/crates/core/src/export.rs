//! Machine-readable census output: JSON and CSV rows, and DOT graphs of
//! orbits.
//!
//! Field order and formatting are fixed so that output is byte-identical
//! across runs and worker counts.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cylinder::CylinderDecomposition;
use crate::orbit::{CensusRecord, FormulaCheck, OrbitLabel, OrbitRecord};
use crate::origami::{CanonicalKey, Generator};

/// One orbit as exported. `cusp_widths` is sorted ascending; the
/// representative coordinate strings use the CLI seed grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub orbit_label: String,
    pub size: usize,
    pub invariant: u8,
    pub num_cusps: usize,
    pub cusp_widths: Vec<usize>,
    pub e2: usize,
    pub e3: usize,
    pub genus: usize,
    pub has_one_cylinder: bool,
    pub cusp_representatives: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub status: String,
    pub passed: bool,
    pub details: String,
}

/// The full census document as serialized by `census --format json`.
/// `total_all_surfaces` counts imprimitive surfaces too; it is null when
/// the census ran with `--primitive-only`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusDocument {
    pub n: usize,
    pub total_primitive: usize,
    pub total_all_surfaces: Option<usize>,
    pub one_cylinder_surfaces: usize,
    pub two_cylinder_surfaces: usize,
    pub one_cylinder_cusps: usize,
    pub two_cylinder_cusps: usize,
    pub orbits: Vec<CensusRow>,
    pub checks: Vec<CheckRow>,
}

pub fn label_string(label: OrbitLabel) -> String {
    match label {
        OrbitLabel::A => "A",
        OrbitLabel::B => "B",
        OrbitLabel::Single => "single",
        OrbitLabel::Other => "other",
    }
    .to_string()
}

impl CensusRow {
    pub fn from_orbit(orbit: &OrbitRecord) -> CensusRow {
        CensusRow {
            n: orbit.n,
            orbit_label: label_string(orbit.label),
            size: orbit.size_d,
            invariant: orbit.invariant,
            num_cusps: orbit.num_cusps(),
            cusp_widths: orbit.cusp_widths(),
            e2: orbit.e2,
            e3: orbit.e3,
            genus: orbit.genus,
            has_one_cylinder: orbit.has_one_cylinder,
            cusp_representatives: orbit.cusps.iter().map(|(rep, _)| rep.to_string()).collect(),
        }
    }
}

fn check_row(check: &FormulaCheck) -> CheckRow {
    CheckRow {
        name: check.name.clone(),
        status: if check.conjecture { "conjecture" } else { "proved" }.to_string(),
        passed: check.passed,
        details: check.details.clone(),
    }
}

pub fn census_document(census: &CensusRecord, total_all: Option<usize>) -> CensusDocument {
    CensusDocument {
        n: census.n,
        total_primitive: census.total_primitive,
        total_all_surfaces: total_all,
        one_cylinder_surfaces: census.one_cylinder_surfaces,
        two_cylinder_surfaces: census.two_cylinder_surfaces,
        one_cylinder_cusps: census.one_cylinder_cusps,
        two_cylinder_cusps: census.two_cylinder_cusps,
        orbits: census.orbits.iter().map(CensusRow::from_orbit).collect(),
        checks: census.checks.iter().map(check_row).collect(),
    }
}

pub fn census_json(census: &CensusRecord, total_all: Option<usize>) -> String {
    let mut s = serde_json::to_string_pretty(&census_document(census, total_all))
        .expect("census document serializes");
    s.push('\n');
    s
}

pub const CSV_HEADER: &str =
    "n,orbit_label,size,invariant,num_cusps,cusp_widths,e2,e3,genus,has_one_cylinder";

/// CSV with a header row and one orbit per line; cusp widths are a quoted
/// space-separated list.
pub fn census_csv(census: &CensusRecord) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for orbit in &census.orbits {
        let widths: Vec<String> =
            orbit.cusp_widths().iter().map(|w| w.to_string()).collect();
        out.push_str(&format!(
            "{},{},{},{},{},\"{}\",{},{},{},{}\n",
            orbit.n,
            label_string(orbit.label),
            orbit.size_d,
            orbit.invariant,
            orbit.num_cusps(),
            widths.join(" "),
            orbit.e2,
            orbit.e3,
            orbit.genus,
            orbit.has_one_cylinder,
        ));
    }
    out
}

/// DOT graph of an orbit: nodes are surfaces (labeled by coordinates),
/// edges the actions of U and V.
pub fn orbit_dot(orbit: &BTreeSet<CanonicalKey>) -> String {
    let ids: Vec<&CanonicalKey> = orbit.iter().collect();
    let index_of = |key: &CanonicalKey| ids.binary_search(&key).expect("edge stays in orbit");
    let mut out = String::from("digraph orbit {\n");
    for (i, key) in ids.iter().enumerate() {
        let label = match crate::cylinder::decompose(&key.to_origami()) {
            Ok(d) => d.to_string(),
            Err(_) => key.fingerprint(),
        };
        out.push_str(&format!("  s{i} [label=\"{label}\"];\n"));
    }
    for (i, key) in ids.iter().enumerate() {
        let o = key.to_origami();
        let u = index_of(&o.act(Generator::U).canonical_key());
        let v = index_of(&o.act(Generator::V).canonical_key());
        out.push_str(&format!("  s{i} -> s{u} [label=\"U\"];\n"));
        out.push_str(&format!("  s{i} -> s{v} [label=\"V\"];\n"));
    }
    out.push_str("}\n");
    out
}

/// Round-trips through the seed grammar for the schema contract.
pub fn representative_string(rep: &CylinderDecomposition) -> String {
    rep.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::classify_census;

    #[test]
    fn json_roundtrip_and_field_order() {
        let census = classify_census(3, 1).unwrap();
        let json = census_json(&census, Some(3));
        let doc: CensusDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.n, 3);
        assert_eq!(doc.orbits.len(), 1);
        let first_fields: Vec<&str> = json
            .lines()
            .filter_map(|l| l.trim().strip_prefix('"'))
            .filter_map(|l| l.split('"').next())
            .collect();
        let n_pos = first_fields.iter().position(|&f| f == "n").unwrap();
        let orbits_pos = first_fields.iter().position(|&f| f == "orbits").unwrap();
        assert!(n_pos < orbits_pos, "field order is fixed");
    }

    #[test]
    fn csv_shape() {
        let census = classify_census(3, 1).unwrap();
        let csv = census_csv(&census);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let row = lines.next().unwrap();
        assert!(row.starts_with("3,A,3,1,2,\"1 2\","), "row was {row}");
    }

    #[test]
    fn dot_output_lists_nodes_and_edges() {
        let seed = crate::parse_surface("onecyl:1,1,1:0").unwrap().to_origami();
        let orbit = crate::orbit_bfs(&seed).unwrap();
        let dot = orbit_dot(&orbit);
        assert_eq!(dot.matches("label=\"U\"").count(), 3);
        assert_eq!(dot.matches("label=\"V\"").count(), 3);
        assert_eq!(dot.matches(" [label=\"onecyl").count() + dot.matches(" [label=\"twocyl").count(), 3);
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let reference = census_json(&classify_census(5, 1).unwrap(), None);
        for workers in [2, 8] {
            assert_eq!(census_json(&classify_census(5, workers).unwrap(), None), reference);
        }
    }
}
