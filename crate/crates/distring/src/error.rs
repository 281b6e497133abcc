use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("operation requires a nonzero distribution")]
    ZeroDistribution,

    #[error("density convolution is only supported in dimension 1")]
    UnsupportedDensityConvolution,

    #[error("precision exhausted: achieved error radius {achieved:e}, requested {requested:e} at {precision} bits")]
    PrecisionExhausted {
        achieved: f64,
        requested: f64,
        precision: u32,
    },

    #[error("transform evaluation produced a non-finite value or error radius")]
    NonFiniteValue,

    #[error("cone projection did not converge after {iterations} iterations; trace: {trace:?}")]
    ProjectionDidNotConverge {
        iterations: usize,
        trace: Vec<f64>,
    },

    #[error("index {index} exceeds cap {cap}: {estimate}")]
    CapExceeded {
        index: u64,
        cap: u64,
        estimate: String,
    },

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(format!(
            "{} (line {}, column {})",
            e,
            e.line(),
            e.column()
        ))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
