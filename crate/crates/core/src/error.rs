use thiserror::Error;

/// Failures raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("characteristic {0} is not prime")]
    NonPrime(u32),
    #[error("polynomial is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
