use alloc::string::String;

use crate::complex::{Simplex, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} does not occur in any facet")]
    GhostVertex(Vertex),
    #[error("vertex {0} is out of range")]
    OutOfRange(Vertex),
    #[error("vertex subset must be non-empty")]
    EmptySubset,
    #[error("complexes share vertex {0}")]
    NotDisjoint(Vertex),
    #[error("{0} vertices requested; at most 128 are supported")]
    TooManyVertices(usize),
    #[error("image of {0:?} is not a face of the target")]
    NotSimplicial(Simplex),
    #[error("complex has dimension {dim}, at most {max} is supported here")]
    DimensionTooHigh { dim: isize, max: isize },
    #[error(
        "the pair map for vertices {0} and {1} is surjective, so the edge criterion makes no claim"
    )]
    HypothesisNotMet(Vertex, Vertex),
    #[error("edge criterion disagrees for vertices {0} and {1}")]
    CriterionMismatch(Vertex, Vertex),
    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),
    #[error("field coefficients are required")]
    FieldRequired,
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("chain has length {got}, expected {expected}")]
    ChainLength { expected: usize, got: usize },
    #[error("value too large: {0}")]
    Overflow(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
