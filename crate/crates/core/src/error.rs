use thiserror::Error;

/// Errors raised by state construction, special functions and the CLI layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("representation label mismatch: {left} vs {right}")]
    LambdaMismatch { left: f64, right: f64 },

    #[error("Fock cutoff ceiling {ceiling} exceeded while resolving the tail (|z| = {z_abs})")]
    CutoffCeiling { ceiling: usize, z_abs: f64 },

    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("power {m} too large for cutoff {cutoff}")]
    PowerTooLarge { m: usize, cutoff: usize },

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
