use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: n = {left} vs n = {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("not invertible over the integers: constant term is {constant}")]
    NotInvertible { constant: BigInt },

    #[error("{what} = {value} is out of range (expected {expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: String,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unimodularity violated for n = {n}: det = {det}")]
    UnimodularityViolated { n: usize, det: BigInt },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("generator index {index} exceeds n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("rewrite step budget of {cap} exceeded")]
    StepCapExceeded { cap: u64 },
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: i64, expected: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value,
            expected: expected.into(),
        }
    }
}
