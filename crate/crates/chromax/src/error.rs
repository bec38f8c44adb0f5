//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder.
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid edge ({0}, {1}): self-loop or endpoint out of range")]
    InvalidEdge(usize, usize),
    #[error("invalid vertex {0}")]
    InvalidVertex(usize),
    #[error("malformed graph6 record at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("ear decomposition is not valid for the graph: {0}")]
    InvalidDecomposition(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    /// Interpolation produced a non-integer coefficient. Signals an
    /// implementation bug; never expected on valid input.
    #[error("interpolation produced a non-integer coefficient at degree {0}")]
    NonIntegerCoefficient(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
