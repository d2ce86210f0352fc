use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface is not connected: the two gluing permutations do not act transitively")]
    NotConnected,

    #[error("surface is not in H(2): commutator cycle type gives cone orders {found:?}, expected [2]")]
    WrongStratum { found: Vec<usize> },

    #[error("invalid cylinder coordinates: {0}")]
    InvalidCoords(String),

    #[error("surface is not primitive (period lattice index > 1)")]
    NotPrimitive,

    #[error("bad square count: {0}")]
    BadN(String),

    #[error("Gauss-Bonnet gave a non-integral or negative genus: 12g = {twelve_g}")]
    NonIntegralGenus { twelve_g: i64 },

    #[error("no hyperelliptic involution found (input is not a valid H(2) surface)")]
    NoInvolution,

    #[error("search budget of {0} states exhausted before a one-cylinder surface was found")]
    BudgetExceeded(usize),

    #[error("bad partition: {0}")]
    BadPartition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
