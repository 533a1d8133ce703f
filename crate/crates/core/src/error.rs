use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An inexact sub-solver ran out of iterations before certifying its
    /// tolerance. Never silently swallowed: the affected sample is tagged.
    #[error(
        "solver failure at step {step}: certified error {certified:.6e} > tolerance {tolerance:.6e} after {iterations} iterations"
    )]
    SolverFailure {
        step: usize,
        tolerance: f64,
        certified: f64,
        iterations: usize,
    },

    #[error("{failed} of {total} Monte Carlo samples failed (limit {limit_percent}%)")]
    TooManyFailures {
        failed: usize,
        total: usize,
        limit_percent: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
