use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts sum to ({sum}) but the whole is ({whole})")]
    PartSumMismatch { whole: String, sum: String },

    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(u32),

    #[error("{0}")]
    InvalidInput(String),

    /// An internal consistency check failed; always a bug, never bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("memo conflict for {key}: stored {stored}, new {new}")]
    MemoConflict {
        key: String,
        stored: String,
        new: String,
    },

    #[error("cache file line {line}: {reason}")]
    CacheFormat { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures that indicate a bug in the engines rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::MemoConflict { .. } | Error::PartSumMismatch { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
