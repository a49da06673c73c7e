use thiserror::Error;

/// Crate-wide error type, grouped by category so callers (in particular the
/// CLI) can map failures onto distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix dimensions do not line up.
    #[error("shape error: {0}")]
    Shape(String),

    /// Input fails a validation check (unitarity, involutivity, the
    /// Yang-Baxter identity, phase conditions, malformed permutations, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// Arguments lie outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested computation exceeds the configured resource budget.
    #[error("budget error: {0}")]
    Budget(String),

    /// Spectral data is inconsistent with the partial trace of an involutive
    /// R-matrix (integer eigenvalues with matching multiplicities).
    #[error("not a valid involutive R-matrix partial trace: {0}")]
    Spectrum(String),

    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed; this indicates a bug, not a
    /// user error.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
