//! Exact combinatorics of square-tiled surfaces in the stratum H(2).
//!
//! The crate enumerates the surfaces tiled by n unit squares whose 1-form
//! has a single double zero, computes their SL(2,Z)-orbits, cusps, elliptic
//! points, Weierstrass-point invariants and orbit genus, and cross-checks
//! everything against exact closed-form counts. All arithmetic is integer
//! arithmetic.

pub mod cylinder;
pub mod error;
pub mod export;
pub mod formulas;
pub mod lattice;
pub mod orbit;
pub mod origami;
pub mod perm;
pub mod pool;
pub mod verify;
pub mod weierstrass;

pub use cylinder::{
    canonical_cusp_representative, decompose, l_shaped, parse_surface, CylinderDecomposition,
    LShaped, OneCylCoords, SeparatrixDiagram, TwoCylCoords,
};
pub use error::{Error, Result};
pub use lattice::LatticeBasis;
pub use orbit::{
    brute_force_enumerate, classify_census, cusp_partition, elliptic_counts, enumerate_surfaces,
    find_one_cylinder_rep, genus_gauss_bonnet, orbit_bfs, CensusRecord, FormulaCheck, OrbitLabel,
    OrbitRecord,
};
pub use origami::{CanonicalKey, Generator, Origami, StratumSignature};
pub use perm::Permutation;
pub use weierstrass::{
    appendix_b_invariant, invariant_from_coords, involution_oracle, HyperellipticStratum,
    InvolutionData,
};

/// Period lattice of a valid H(2) surface, via its cylinder decomposition.
pub fn period_lattice(o: &Origami) -> Result<LatticeBasis> {
    Ok(decompose(o)?.period_lattice())
}
