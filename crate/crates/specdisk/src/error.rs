use thiserror::Error;

/// Errors reported by the spectral-analysis pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The Fourier tail of a potential has not decayed at the requested
    /// truncation order, so the coefficient table is not converged.
    #[error("coefficient tail not converged: |Q_{order}| = {tail:.3e} exceeds {threshold:.3e}")]
    Tail {
        order: i64,
        tail: f64,
        threshold: f64,
    },

    /// Matrix truncation is too small for the potential bandwidth.
    #[error("truncation N = {n} is smaller than the potential bandwidth M = {m}")]
    Dimension { n: usize, m: usize },

    /// The QR iteration failed to converge within the iteration cap.
    #[error("eigenvalue iteration failed to converge after {iterations} sweeps")]
    Convergence { iterations: usize },

    /// A disk window does not reach the analytic tail bound.
    #[error("window N = {window} does not cover the tail bound k* = {k_star}")]
    Window { window: usize, k_star: i64 },

    /// The requested bound or check does not exist for this equation family.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A run configuration failed schema or invariant validation.
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
