//! Error type shared by all kernels.

use std::fmt;

/// Errors from special-function evaluation.
///
/// Every variant carries a short message naming the violated precondition
/// or the failure mode, suitable for direct display to a CLI user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialError {
    /// Input failed a basic validity check (non-finite value, bad tolerance).
    InvalidInput(&'static str),
    /// Input outside the function's mathematical domain (pole, excluded parameter).
    Domain(&'static str),
    /// Result not representable in double precision (overflow).
    Range(&'static str),
    /// Series or iteration did not converge within the term budget.
    Convergence(&'static str),
    /// A deviation denominator vanished; the measure is undefined there.
    DegenerateDenominator(&'static str),
    /// Internal consistency check failed; indicates a bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for SpecialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Self::Domain(m) => write!(f, "domain error: {m}"),
            Self::Range(m) => write!(f, "range error: {m}"),
            Self::Convergence(m) => write!(f, "convergence failure: {m}"),
            Self::DegenerateDenominator(m) => write!(f, "degenerate denominator: {m}"),
            Self::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for SpecialError {}

pub type Result<T> = std::result::Result<T, SpecialError>;
