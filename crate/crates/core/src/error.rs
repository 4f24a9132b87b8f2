use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division token in a non-rational position at byte {0}")]
    MisplacedDivision(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("{0} is not a field")]
    NotAField(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("assignment is missing variable `{0}`")]
    MissingVariable(String),
    #[error("prime {p} divides the denominator of {value}")]
    PrimeDividesDenominator { p: u64, value: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("{0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
