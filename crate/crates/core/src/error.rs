use thiserror::Error;

/// Errors produced by exact matrix operations, family builders and checkers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid minor spec: {0}")]
    MinorSpec(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("zero pivot at leading principal minor of order {order}")]
    Pivot { order: usize },

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("resource guard exceeded: {0}")]
    Resource(String),

    #[error("method not applicable: {0}")]
    Method(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("unknown statement id: {0}")]
    UnknownStatement(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
