use crate::geometry::Diagnostics;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid boundary chain: {0}")]
    InvalidChain(Diagnostics),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("body is empty")]
    EmptyBody,

    #[error("body is unbounded")]
    Unbounded,

    #[error("degenerate body: inradius below tolerance {tol:e}")]
    Degenerate { tol: f64 },

    #[error("numeric failure: {msg} (final bracket [{lo:e}, {hi:e}])")]
    NumericFailure { msg: String, lo: f64, hi: f64 },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NumericFailure { .. } | Error::Consistency(_) => 2,
            _ => 1,
        }
    }
}
