use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` variants indicate a broken invariant of the computation itself
/// (for example a quantity that must be an integer failing to be one); they
/// are bugs, not bad input, and the CLI maps them to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("weight mismatch: cannot add weight {0} and weight {1} q-series")]
    WeightMismatch(i64, i64),

    #[error("truncation order {have} insufficient, need at least {need}")]
    Truncation { have: usize, need: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
