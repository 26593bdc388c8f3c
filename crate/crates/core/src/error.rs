//! Error type shared by every computation in the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Broad failure class, used by the CLI to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Inputs outside the mathematical or physical domain of an operation.
    Domain,
    /// A numerical method failed (no convergence, overflow, failed self-check).
    Numerical,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Gamma function pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("parameter pole: {0}")]
    ParameterPole(String),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("wavefunction is not real: |Im g|/|g| = {ratio:e} at r = {r}")]
    RealnessViolation { r: f64, ratio: f64 },

    #[error("complex branch: strength {0} < -1/4 has no real Poschl-Teller parameter")]
    ComplexBranch(f64),

    #[error("integral does not converge: {0}")]
    NonIntegrable(String),

    #[error("no root: {0}")]
    NoRoot(String),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Pole { .. }
            | Error::ParameterPole(_)
            | Error::Domain(_)
            | Error::ComplexBranch(_)
            | Error::NoRoot(_) => ErrorCategory::Domain,
            Error::NoConvergence(_)
            | Error::Overflow(_)
            | Error::RealnessViolation { .. }
            | Error::NonIntegrable(_) => ErrorCategory::Numerical,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Rejects non-finite results so NaN or infinity never leaves a public operation.
pub(crate) fn finite(value: f64, what: &str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else if value.is_nan() {
        Err(Error::NoConvergence(format!("{what} evaluated to NaN")))
    } else {
        Err(Error::Overflow(format!("{what} is not representable")))
    }
}
