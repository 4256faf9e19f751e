//! Error taxonomy shared by every module: input validation, mathematical
//! precondition violations, and numerical breakdowns.

use thiserror::Error;

/// Errors produced by the construction and verification routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input data failed validation (non-finite values, malformed shapes).
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A mathematical precondition does not hold for the given arguments.
    #[error("domain error: {0}")]
    Domain(String),
    /// A numerical procedure broke down; carries the offending residual.
    #[error("numerical failure: {message} (residual {residual:.3e})")]
    Numerical { message: String, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>, residual: f64) -> Self {
        Error::Numerical {
            message: msg.into(),
            residual,
        }
    }

    /// The residual carried by a numerical failure; +∞ for other variants,
    /// so treating an error as "residual too large" is always conservative.
    pub fn residual_or_inf(&self) -> f64 {
        match self {
            Error::Numerical { residual, .. } => *residual,
            _ => f64::INFINITY,
        }
    }
}
