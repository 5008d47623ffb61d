use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series has a zero leading coefficient and cannot be inverted")]
    ZeroLeadingCoefficient,

    #[error("not a moment sequence: recursion weight at level {level} is negative ({value})")]
    NotAMomentSequence { level: usize, value: String },

    #[error("insufficient depth: need {needed}, have {available}")]
    InsufficientDepth { needed: usize, available: usize },

    #[error("moment of order {needed} requested but only {available} available")]
    OrderExceeded { needed: usize, available: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numerical singularity: {0}")]
    NumericalSingularity(String),

    #[error("jacobi parameters are empty")]
    EmptyJacobi,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("alternating split needs an odd number of blocks, got {0}")]
    EvenBlockCount(usize),

    #[error("free convolution routes disagree at moment {order}")]
    RouteMismatch { order: usize },

    #[error("no convergence after {iterations} iterations (last gap {gap:e})")]
    NoConvergence { iterations: usize, gap: f64 },

    #[error("word depth {requested} exceeds basis cap {cap}")]
    DepthExceeded { requested: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
