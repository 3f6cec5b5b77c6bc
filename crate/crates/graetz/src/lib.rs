//! Spectral solution of thermal entry flow in a circular pipe.
//!
//! A fluid with a parabolic velocity profile enters a pipe whose wall is held
//! at a different temperature; the nondimensional temperature field T(r, z)
//! obeys
//!
//! ```text
//! dT/dz = 1/(1 - r^2) (1/r) d/dr (r dT/dr),
//! T(r, 0) = 1,   T(1, z) = 0,   dT/dr(0, z) = 0,
//! ```
//!
//! and separates into radial Sturm-Liouville modes built from Kummer's
//! confluent hypergeometric function. This crate locates the eigenvalues,
//! projects the inlet profile onto the modes, and evaluates the truncated
//! series for the temperature field, the mixing-cup (bulk) temperature, and
//! the local Nusselt number.
//!
//! Module map:
//!
//! * [`specfun`] - Pochhammer symbol and Kummer's M(a, b, x) with derivative.
//! * [`eigen`] - eigenvalue search and eigenfunction evaluation.
//! * [`series`] - quadrature, expansion coefficients, field evaluation.
//! * [`oracle`] - independent RK4 shooting and Crank-Nicolson validators.
//! * [`cli`] - the `graetz` binary: CSV/JSON tables and the validation run.
//!
//! Everything is deterministic: identical inputs produce byte-identical
//! output. See the `examples/` directory for one runnable program per major
//! capability.

// Guards are written `!(x > 0.0)` on purpose: the negated form rejects NaN,
// which `x <= 0.0` lets through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod eigen;
pub mod error;
pub mod oracle;
pub mod series;
pub mod specfun;

pub use config::SolverConfig;
pub use eigen::{compute_spectrum, EigenMode, Spectrum};
pub use error::{GraetzError, Result};
pub use oracle::{FdGrid, OracleConfig};
pub use series::{
    build_solution, bulk_temperature, local_nusselt, temperature_at, FieldSample, QuadratureRule,
    SeriesSolution,
};
