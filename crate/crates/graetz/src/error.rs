//! Error type shared by all solver modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, GraetzError>;

/// Everything that can go wrong while building or evaluating a solution.
#[derive(Debug, Error)]
pub enum GraetzError {
    /// An argument fell outside its documented range.
    #[error("domain error: {0}")]
    Domain(String),

    /// An invalid configuration value (checked before any numerics run).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The Kummer series did not meet the term tolerance within the term cap.
    #[error(
        "Kummer series M({a}, {b}, {x}) did not converge to {tol:e} within {max_terms} terms"
    )]
    KummerDivergence {
        a: f64,
        b: f64,
        x: f64,
        tol: f64,
        max_terms: usize,
    },

    /// Root refinement stopped without meeting the residual bound.
    #[error(
        "root in [{lo}, {hi}] not converged: |g| = {residual:e} at bracket width {width:e}"
    )]
    RootConvergence {
        lo: f64,
        hi: f64,
        residual: f64,
        width: f64,
    },

    /// The bracket scan found fewer sign changes than eigenvalues requested.
    #[error("found {found} eigenvalue brackets below lambda = {lambda_max}, need {wanted}")]
    BracketExhaustion {
        found: usize,
        wanted: usize,
        lambda_max: f64,
    },

    /// The eigenfunction norm integral collapsed; the mode data is corrupt.
    #[error("degenerate norm integral {norm:e} for mode {index}")]
    DegenerateNorm { index: usize, norm: f64 },

    /// Bulk temperature too small to divide by (z absurdly large).
    #[error("bulk temperature {value:e} at z = {z} too small for a Nusselt number")]
    DegenerateBulk { z: f64, value: f64 },

    /// The finite-difference grid does not cover the requested comparison range.
    #[error("finite-difference grid has no rows at z >= {z_min}")]
    GridMismatch { z_min: f64 },
}
