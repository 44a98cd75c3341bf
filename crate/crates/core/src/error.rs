use thiserror::Error;

/// Failures of exact arithmetic and of the polynomial parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("value is not a polynomial")]
    NotPolynomial,
}

/// Crate-level error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("degree {degree} exceeds the table bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
