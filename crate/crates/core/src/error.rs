use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("generator has a negative coordinate")]
    NegativeGenerator,

    #[error("generator is the zero vector")]
    ZeroGenerator,

    #[error("congruence modulus must be at least 1, got {0}")]
    InvalidModulus(String),

    #[error("not reduced: sets of lengths unbounded")]
    NotReduced,

    #[error("index set is not the generator set of a divisor-closed submonoid")]
    NotDivisorClosed,

    #[error("generator index {0} out of range (1..={1})")]
    IndexOutOfRange(usize, usize),

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
