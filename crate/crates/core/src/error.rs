//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exact rational form required: {0}")]
    ExactnessRequired(String),

    #[error("dimension {dim} exceeds the memory budget (max {max})")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("coincident particles: minimum separation {0:.3e}")]
    CoincidentPoints(f64),

    #[error("loop passes within {dist:.3e} of a flux point")]
    LoopHitsSingularity { dist: f64 },

    #[error("iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("grid too small: {0}")]
    GridTooSmall(String),

    #[error("minimizer diverged: {0}")]
    Diverged(String),

    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),

    #[error("singular matrix encountered: {0}")]
    SingularMatrix(String),
}

impl CoreError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CoreError::InvalidArgument(msg.into())
    }
}
