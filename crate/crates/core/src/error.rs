use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("negative factorial argument {0}")]
    NegativeFactorial(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular matrix: vanishing pivot in column {0}")]
    Singular(usize),
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("arity mismatch: expected {expected} legs, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("leg {0} out of range")]
    LegOutOfRange(usize),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
