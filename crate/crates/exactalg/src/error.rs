use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExactAlgError {
    #[error("resultant of a zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("values must be pairwise distinct")]
    RepeatedValue,
    #[error("scaling left a non-integer coefficient at degree {degree}: {value}")]
    NonIntegerCoefficient { degree: usize, value: String },
    #[error("constant term must be 2^h = {expected}, found {found}")]
    BadConstantTerm { expected: String, found: String },
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("malformed serialized polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ExactAlgError>;
