use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty generating set")]
    EmptyGenerators,

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("invalid incidence: {0}")]
    InvalidIncidence(String),

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("complex is not a resolution: acyclicity fails at degree {0:?}")]
    NotAResolution(Vec<i64>),

    #[error("lattice is not pointed: {0:?} is a nonzero nonnegative lattice vector")]
    NotPointed(Vec<i64>),

    #[error("vectors are linearly dependent")]
    Dependent,

    #[error("order ideal is not downward closed: {0:?} is missing")]
    NotDownwardClosed(Vec<i64>),

    #[error("local hull did not stabilize up to box radius {0}")]
    NoStabilization(i64),

    #[error("exactness check failed: {0}")]
    NotExact(String),

    #[error("characteristic {0} is not prime")]
    NotPrime(u64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}
