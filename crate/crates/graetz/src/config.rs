//! Solver configuration: every numerical tolerance and cutoff in one place.

use crate::error::{GraetzError, Result};

/// Knobs for the spectral solver. Defaults meet every documented tolerance
/// with wide margin at sub-second runtime.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Number of series modes kept in the truncated expansion.
    pub mode_count: usize,
    /// Final bracket width for eigenvalue bisection.
    pub root_tol: f64,
    /// Gauss-Legendre order used for the coefficient projections.
    pub quadrature_order: usize,
    /// Step of the uniform sign-change scan over lambda. Must stay at or
    /// below 1: the eigenvalue gap never drops under ~3.97, so any step
    /// up to 1 cannot skip a root.
    pub bracket_step: f64,
    /// Relative term tolerance for the Kummer series.
    pub kummer_tol: f64,
    /// Term cap for the Kummer series.
    pub kummer_max_terms: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            mode_count: 20,
            root_tol: 1e-12,
            quadrature_order: 64,
            bracket_step: 0.5,
            kummer_tol: 1e-15,
            kummer_max_terms: 500,
        }
    }
}

impl SolverConfig {
    /// Checks the structural invariants; call before handing the config to
    /// any solver entry point.
    pub fn validate(&self) -> Result<()> {
        if self.mode_count == 0 {
            return Err(GraetzError::Config("mode_count must be at least 1".into()));
        }
        if !(self.root_tol > 0.0) {
            return Err(GraetzError::Config("root_tol must be positive".into()));
        }
        if self.quadrature_order == 0 {
            return Err(GraetzError::Config(
                "quadrature_order must be positive".into(),
            ));
        }
        if !(self.bracket_step > 0.0 && self.bracket_step <= 1.0) {
            return Err(GraetzError::Config(format!(
                "bracket_step must lie in (0, 1], got {}",
                self.bracket_step
            )));
        }
        if !(self.kummer_tol > 0.0) {
            return Err(GraetzError::Config("kummer_tol must be positive".into()));
        }
        if self.kummer_max_terms == 0 {
            return Err(GraetzError::Config(
                "kummer_max_terms must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        assert!(SolverConfig::default().validate().is_ok());
    }

    #[test]
    fn rejects_wide_bracket_step() {
        let cfg = SolverConfig {
            bracket_step: 1.5,
            ..SolverConfig::default()
        };
        assert!(matches!(cfg.validate(), Err(GraetzError::Config(_))));
    }

    #[test]
    fn rejects_zero_modes() {
        let cfg = SolverConfig {
            mode_count: 0,
            ..SolverConfig::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn rejects_nonpositive_tolerances() {
        for (root_tol, kummer_tol) in [(0.0, 1e-15), (1e-12, -1.0)] {
            let cfg = SolverConfig {
                root_tol,
                kummer_tol,
                ..SolverConfig::default()
            };
            assert!(cfg.validate().is_err());
        }
    }
}
