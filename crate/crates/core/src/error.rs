//! Shared error type for the whole toolkit.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range (num_vars = {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("gadget variable indices must be distinct")]
    DuplicateIndices,

    #[error("unsupported fan-in {fan_in}: must be of the form 2^n - 1")]
    UnsupportedFanIn { fan_in: usize },

    #[error("invalid architecture: {0}")]
    InvalidArchitecture(String),

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("sign of zero is undefined (tied pre-activation)")]
    SignTie,

    #[error("problem too large: {needed} exceeds limit {limit}")]
    Capacity { needed: usize, limit: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no embedding found after {attempts} attempts (best attempt placed {placed} of {total} variables)")]
    EmbeddingNotFound {
        attempts: usize,
        placed: usize,
        total: usize,
    },

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
