use thiserror::Error;

/// Errors raised by the character library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight mismatch: |{left}| = {left_weight} but |{right}| = {right_weight}")]
    WeightMismatch {
        left: String,
        left_weight: usize,
        right: String,
        right_weight: usize,
    },

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },

    /// A quantity that must be an integral polynomial was not. Always a bug.
    #[error("integrity failure: {0}")]
    Integrity(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("algorithm {algorithm} does not apply to {shape}")]
    NotApplicable { algorithm: String, shape: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
