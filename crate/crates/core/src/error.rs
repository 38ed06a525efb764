use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid Young diagram or tableau: {0}")]
    InvalidShape(String),

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("non-generic position: {0}")]
    NonGeneric(String),

    #[error("pipeline step `{step}` failed: {reason}")]
    Pipeline { step: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
