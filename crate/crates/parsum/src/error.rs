use thiserror::Error;

/// Errors surfaced by the numerical routines and the file loaders.
#[derive(Debug, Error)]
pub enum Error {
    /// The Jacobi iteration did not drive the off-diagonal norm below its
    /// target within the sweep cap. Signals pathological input.
    #[error(
        "eigendecomposition did not converge: off-diagonal norm {off_diag:e} \
         after {sweeps} sweeps (target {target:e})"
    )]
    NonConvergence {
        sweeps: usize,
        off_diag: f64,
        target: f64,
    },

    /// An input lies outside the mathematical domain of the operation
    /// (non-positive-definite matrix, floored eigenvalue, zero exponent, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The operator equation has no solution: H is not ≥ A:B.
    #[error("H is not ≥ A:B (min eigenvalue {min_eig:e} below -{threshold:e})")]
    Infeasible { min_eig: f64, threshold: f64 },

    /// A caller-supplied parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    Param(String),

    /// Matrix file could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
