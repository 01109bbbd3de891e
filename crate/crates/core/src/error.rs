use crate::lie::Family;

/// Errors reported by the library.
///
/// All operations are total on valid inputs; every variant here corresponds
/// to a violated precondition that callers can trigger with user-supplied
/// data (bad ranks, bad node indices, vectors that are not roots, ...).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The (family, rank) pair is outside the valid range table.
    #[error("invalid rank {rank} for type {family}: valid ranks are {expected}")]
    InvalidRank {
        family: Family,
        rank: usize,
        expected: &'static str,
    },

    /// A simple-root/node index outside `1..=rank`.
    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// A coefficient vector that is not a root of the ambient system.
    #[error("{0} is not a root of the ambient root system")]
    NotARoot(String),

    /// The requested curve is contracted by the projection to `G/P`
    /// (the grading of the curve's root against the marking is zero).
    #[error("curve C_alpha for alpha={alpha} is contracted: its grading against the marking {marked} is 0")]
    CurveContracted { alpha: String, marked: String },

    /// A weight whose fundamental-weight coordinates are not all integers.
    #[error("weight {0} is not in the weight lattice")]
    NotLatticeWeight(String),

    /// Parameters outside a horospherical family's constraint table.
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
}
