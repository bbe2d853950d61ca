use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid cost matrix: {0}")]
    InvalidCost(String),

    #[error("series too short: {len} observations, need at least {min}")]
    TooShort { len: usize, min: usize },

    #[error("{path}: row {row}, column {column}: {message}")]
    Csv {
        path: String,
        row: u64,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
