//! Sturm-Liouville eigenvalues and eigenfunctions of the radial problem
//!
//! ```text
//! (1/r) (r R')' + lambda^2 (1 - r^2) R = 0,   R'(0) = 0,  R(1) = 0.
//! ```
//!
//! The regular solution, normalized to R(0) = 1, is
//! R(r; lambda) = exp(-lambda r^2 / 2) M(1/2 - lambda/4, 1, lambda r^2),
//! so eigenvalues are the roots of the wall value
//! g(lambda) = exp(-lambda/2) M(1/2 - lambda/4, 1, lambda). The conditioning
//! factor exp(-lambda/2) keeps g of moderate size instead of growing like the
//! bare Kummer value.
//!
//! Roots are located by a uniform sign-change scan and bisection. Consecutive
//! eigenvalues are separated by just under 4, so any scan step at or below 1
//! cannot skip one.

use crate::config::SolverConfig;
use crate::error::{GraetzError, Result};
use crate::specfun::{self, kummer_m, kummer_m_dx};

/// Residual bound |g(lambda)| that every accepted root must satisfy.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
/// Bisection iteration cap.
pub const MAX_REFINE_ITERATIONS: usize = 200;

/// One radial mode: eigenvalue, expansion coefficient, wall slope.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenMode {
    /// Position in the spectrum, starting at 0.
    pub index: usize,
    /// Square root of the Sturm-Liouville eigenvalue; the root-finding
    /// variable. The separation constant in the axial decay is lambda^2.
    pub lambda: f64,
    /// Expansion coefficient C_n; filled by the series assembly, `None`
    /// until then.
    pub coefficient: Option<f64>,
    /// dR/dr at the wall, R'(1).
    pub wall_slope: f64,
}

/// The first N modes in ascending eigenvalue order.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub modes: Vec<EigenMode>,
    /// Bracket width the roots were bisected to.
    pub solver_tol: f64,
    /// Scan step used to find the brackets.
    pub bracket_step: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }
}

/// Wall value g(lambda) = R(1; lambda). Zeros of g are the eigenvalues.
pub fn eigencondition(lambda: f64) -> Result<f64> {
    eigencondition_with(lambda, specfun::DEFAULT_TOL, specfun::DEFAULT_MAX_TERMS)
}

fn eigencondition_with(lambda: f64, tol: f64, max_terms: usize) -> Result<f64> {
    if lambda < 0.0 {
        return Err(GraetzError::Domain(format!(
            "eigencondition: lambda must be non-negative, got {lambda}"
        )));
    }
    let a = 0.5 - lambda / 4.0;
    let m = kummer_m(a, 1.0, lambda, tol, max_terms)?;
    Ok((-lambda / 2.0).exp() * m.value)
}

/// Scans g over [0, lambda_max] in uniform steps and returns every interval
/// with a sign change. A `lambda_max` of at least 4N + 4 is guaranteed to
/// cover the first N roots.
pub fn bracket_scan(lambda_max: f64, step: f64) -> Result<Vec<(f64, f64)>> {
    bracket_scan_with(
        lambda_max,
        step,
        specfun::DEFAULT_TOL,
        specfun::DEFAULT_MAX_TERMS,
    )
}

fn bracket_scan_with(
    lambda_max: f64,
    step: f64,
    tol: f64,
    max_terms: usize,
) -> Result<Vec<(f64, f64)>> {
    if !(step > 0.0) || !(lambda_max > step) {
        return Err(GraetzError::Domain(format!(
            "bracket_scan: need 0 < step < lambda_max, got step = {step}, lambda_max = {lambda_max}"
        )));
    }
    let intervals = (lambda_max / step + 1e-9).floor() as usize;
    let mut brackets = Vec::new();
    let mut left = 0.0;
    let mut g_left = eigencondition_with(left, tol, max_terms)?;
    for i in 1..=intervals {
        let right = i as f64 * step;
        let g_right = eigencondition_with(right, tol, max_terms)?;
        if g_left.signum() != g_right.signum() {
            brackets.push((left, right));
        }
        left = right;
        g_left = g_right;
    }
    Ok(brackets)
}

/// Bisects a sign-change bracket down to width `tol` and returns the
/// midpoint, which must satisfy |g| <= [`RESIDUAL_TOLERANCE`].
pub fn refine_root(bracket: (f64, f64), tol: f64) -> Result<f64> {
    refine_root_with(
        bracket,
        tol,
        specfun::DEFAULT_TOL,
        specfun::DEFAULT_MAX_TERMS,
    )
}

fn refine_root_with(
    bracket: (f64, f64),
    tol: f64,
    kummer_tol: f64,
    max_terms: usize,
) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    if !(lo < hi) || !(tol > 0.0) {
        return Err(GraetzError::Domain(format!(
            "refine_root: need lo < hi and tol > 0, got [{lo}, {hi}], tol = {tol}"
        )));
    }
    let mut g_lo = eigencondition_with(lo, kummer_tol, max_terms)?;
    let g_hi = eigencondition_with(hi, kummer_tol, max_terms)?;
    if g_lo == 0.0 {
        hi = lo;
    } else if g_hi == 0.0 {
        lo = hi;
    } else if g_lo.signum() == g_hi.signum() {
        return Err(GraetzError::Domain(format!(
            "refine_root: no sign change across [{lo}, {hi}]"
        )));
    }
    for _ in 0..MAX_REFINE_ITERATIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval no longer splittable in floating point.
            break;
        }
        let g_mid = eigencondition_with(mid, kummer_tol, max_terms)?;
        if g_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    let width = hi - lo;
    let root = 0.5 * (lo + hi);
    let residual = eigencondition_with(root, kummer_tol, max_terms)?;
    if width > tol || residual.abs() > RESIDUAL_TOLERANCE {
        return Err(GraetzError::RootConvergence {
            lo,
            hi,
            residual: residual.abs(),
            width,
        });
    }
    Ok(root)
}

/// Finds the first `count` eigenvalues and fills in each wall slope.
pub fn compute_spectrum(count: usize, config: &SolverConfig) -> Result<Spectrum> {
    config.validate()?;
    if count == 0 {
        return Err(GraetzError::Domain(
            "compute_spectrum: count must be at least 1".into(),
        ));
    }
    // Root spacing approaches 4, so this bound covers the first `count` roots.
    let lambda_max = 4.0 * count as f64 + 4.0;
    let brackets = bracket_scan_with(
        lambda_max,
        config.bracket_step,
        config.kummer_tol,
        config.kummer_max_terms,
    )?;
    if brackets.len() < count {
        return Err(GraetzError::BracketExhaustion {
            found: brackets.len(),
            wanted: count,
            lambda_max,
        });
    }
    let mut modes = Vec::with_capacity(count);
    for (index, &bracket) in brackets.iter().take(count).enumerate() {
        let lambda = refine_root_with(
            bracket,
            config.root_tol,
            config.kummer_tol,
            config.kummer_max_terms,
        )?;
        let mut mode = EigenMode {
            index,
            lambda,
            coefficient: None,
            wall_slope: 0.0,
        };
        mode.wall_slope = eigenfunction_deriv(&mode, 1.0)?;
        modes.push(mode);
    }
    Ok(Spectrum {
        modes,
        solver_tol: config.root_tol,
        bracket_step: config.bracket_step,
    })
}

/// Eigenfunction value R_n(r), normalized so R_n(0) = 1.
pub fn eigenfunction_eval(mode: &EigenMode, r: f64) -> Result<f64> {
    check_radius(r)?;
    let a = 0.5 - mode.lambda / 4.0;
    let x = mode.lambda * r * r;
    let m = kummer_m(a, 1.0, x, specfun::DEFAULT_TOL, specfun::DEFAULT_MAX_TERMS)?;
    Ok((-x / 2.0).exp() * m.value)
}

/// Radial derivative dR_n/dr by the product rule over the two analytic
/// factors: R' = lambda r e^{-x/2} (2 M_x - M) with x = lambda r^2.
pub fn eigenfunction_deriv(mode: &EigenMode, r: f64) -> Result<f64> {
    check_radius(r)?;
    let a = 0.5 - mode.lambda / 4.0;
    let x = mode.lambda * r * r;
    let m = kummer_m(a, 1.0, x, specfun::DEFAULT_TOL, specfun::DEFAULT_MAX_TERMS)?;
    let m_x = kummer_m_dx(a, 1.0, x, specfun::DEFAULT_TOL, specfun::DEFAULT_MAX_TERMS)?;
    Ok(mode.lambda * r * (-x / 2.0).exp() * (2.0 * m_x - m.value))
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(GraetzError::Domain(format!(
            "radius must lie in [0, 1], got {r}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, OracleConfig};
    use approx::assert_abs_diff_eq;

    fn default_spectrum(count: usize) -> Spectrum {
        compute_spectrum(count, &SolverConfig::default()).unwrap()
    }

    #[test]
    fn eigencondition_at_zero_is_one() {
        assert_eq!(eigencondition(0.0).unwrap(), 1.0);
    }

    #[test]
    fn eigencondition_rejects_negative_lambda() {
        assert!(eigencondition(-1.0).is_err());
    }

    #[test]
    fn eigencondition_changes_sign_between_two_and_three() {
        let g2 = eigencondition(2.0).unwrap();
        let g3 = eigencondition(3.0).unwrap();
        assert!(g2 > 0.0 && g3 < 0.0, "g(2) = {g2}, g(3) = {g3}");
    }

    #[test]
    fn eigencondition_vanishes_at_shooting_root() {
        let lambda0 = oracle::shoot_eigenvalues(1, &OracleConfig::default()).unwrap()[0];
        assert!(eigencondition(lambda0).unwrap().abs() < 1e-8);
    }

    #[test]
    fn bracket_scan_finds_the_first_root() {
        let brackets = bracket_scan(4.0, 0.5).unwrap();
        assert_eq!(brackets.len(), 1);
        let (lo, hi) = brackets[0];
        assert!(lo < 2.70436 && 2.70436 < hi);
    }

    #[test]
    fn bracket_scan_finds_three_roots_below_twelve() {
        let brackets = bracket_scan(12.0, 0.5).unwrap();
        assert_eq!(brackets.len(), 3);
        for (bracket, root) in brackets.iter().zip([2.70436, 6.67903, 10.67338]) {
            assert!(bracket.0 < root && root < bracket.1);
        }
    }

    #[test]
    fn bracket_scan_empty_below_first_root() {
        assert!(bracket_scan(1.0, 0.5).unwrap().is_empty());
    }

    #[test]
    fn bracket_scan_rejects_bad_arguments() {
        assert!(bracket_scan(4.0, 0.0).is_err());
        assert!(bracket_scan(0.25, 0.5).is_err());
    }

    #[test]
    fn refine_root_matches_shooting_oracle() {
        let oracle = oracle::shoot_eigenvalues(3, &OracleConfig::default()).unwrap();
        for (bracket, reference) in [((2.0, 3.0), oracle[0]), ((6.0, 7.0), oracle[1]), ((10.5, 11.0), oracle[2])]
        {
            let root = refine_root(bracket, 1e-12).unwrap();
            assert_abs_diff_eq!(root, reference, epsilon = 1e-8);
        }
    }

    #[test]
    fn refine_root_rejects_bracket_without_sign_change() {
        assert!(matches!(
            refine_root((3.5, 4.5), 1e-12),
            Err(GraetzError::Domain(_))
        ));
    }

    #[test]
    fn refine_root_fails_residual_gate_on_loose_tolerance() {
        assert!(matches!(
            refine_root((2.0, 3.0), 0.1),
            Err(GraetzError::RootConvergence { .. })
        ));
    }

    #[test]
    fn spectrum_matches_oracle_to_1e8() {
        let spectrum = default_spectrum(5);
        let oracle = oracle::shoot_eigenvalues(5, &OracleConfig::default()).unwrap();
        let expected = [2.70436, 6.67903, 10.67338, 14.67108, 18.66987];
        for ((mode, reference), display) in spectrum.modes.iter().zip(&oracle).zip(expected) {
            assert_abs_diff_eq!(mode.lambda, *reference, epsilon = 1e-8);
            assert_abs_diff_eq!(mode.lambda, display, epsilon = 1e-4);
        }
    }

    #[test]
    fn spectrum_single_mode() {
        let spectrum = default_spectrum(1);
        assert_eq!(spectrum.len(), 1);
        assert_eq!(spectrum.modes[0].index, 0);
    }

    #[test]
    fn spectrum_gap_approaches_four() {
        let spectrum = default_spectrum(8);
        let gap = spectrum.modes[7].lambda - spectrum.modes[6].lambda;
        assert!(gap > 3.99 && gap < 4.01, "gap = {gap}");
    }

    #[test]
    fn spectrum_is_ascending_with_wide_gaps() {
        let spectrum = default_spectrum(8);
        for pair in spectrum.modes.windows(2) {
            assert!(pair[1].lambda - pair[0].lambda > 1.0);
        }
        for (i, mode) in spectrum.modes.iter().enumerate() {
            assert_eq!(mode.index, i);
            assert!(mode.lambda > 0.0);
        }
    }

    #[test]
    fn stored_roots_satisfy_residual_bound() {
        let spectrum = default_spectrum(8);
        for mode in &spectrum.modes {
            let residual = eigenfunction_eval(mode, 1.0).unwrap().abs();
            assert!(residual <= RESIDUAL_TOLERANCE, "mode {}: {residual:e}", mode.index);
        }
    }

    #[test]
    fn eigenfunction_is_one_at_center() {
        let spectrum = default_spectrum(3);
        for mode in &spectrum.modes {
            assert_eq!(eigenfunction_eval(mode, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn eigenfunction_matches_shooting_trajectory() {
        let spectrum = default_spectrum(1);
        let mode = &spectrum.modes[0];
        let (_, trajectory) = oracle::shoot_radial(mode.lambda, 1e-4);
        // r = 0.5 sits at trajectory index (0.5 - step)/step
        let (r, reference, _) = trajectory[4999];
        assert_abs_diff_eq!(r, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(
            eigenfunction_eval(mode, 0.5).unwrap(),
            reference,
            epsilon = 1e-8
        );
    }

    #[test]
    fn eigenfunction_deriv_zero_at_center() {
        let spectrum = default_spectrum(2);
        for mode in &spectrum.modes {
            assert_eq!(eigenfunction_deriv(mode, 0.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn wall_slope_of_fundamental_is_negative() {
        let spectrum = default_spectrum(1);
        assert!(spectrum.modes[0].wall_slope < 0.0);
        assert_abs_diff_eq!(
            spectrum.modes[0].wall_slope,
            eigenfunction_deriv(&spectrum.modes[0], 1.0).unwrap()
        );
    }

    #[test]
    fn eigenfunction_deriv_matches_central_difference() {
        let spectrum = default_spectrum(1);
        let mode = &spectrum.modes[0];
        let h = 1e-6;
        let fd = (eigenfunction_eval(mode, 0.5 + h).unwrap()
            - eigenfunction_eval(mode, 0.5 - h).unwrap())
            / (2.0 * h);
        assert_abs_diff_eq!(eigenfunction_deriv(mode, 0.5).unwrap(), fd, epsilon = 1e-7);
    }

    #[test]
    fn eigenfunction_rejects_radius_outside_unit_interval() {
        let spectrum = default_spectrum(1);
        let mode = &spectrum.modes[0];
        assert!(eigenfunction_eval(mode, -0.1).is_err());
        assert!(eigenfunction_eval(mode, 1.1).is_err());
        assert!(eigenfunction_deriv(mode, 2.0).is_err());
    }

    #[test]
    fn mode_n_has_n_interior_zeros() {
        let spectrum = default_spectrum(4);
        for mode in &spectrum.modes {
            let grid = 2048;
            let mut sign_changes = 0;
            let mut previous = eigenfunction_eval(mode, 1.0 / (grid as f64 + 1.0)).unwrap();
            for i in 2..=grid {
                let r = i as f64 / (grid as f64 + 1.0);
                let value = eigenfunction_eval(mode, r).unwrap();
                if value.signum() != previous.signum() {
                    sign_changes += 1;
                }
                previous = value;
            }
            assert_eq!(
                sign_changes, mode.index,
                "mode {} should oscillate {} times",
                mode.index, mode.index
            );
        }
    }

    #[test]
    fn compute_spectrum_rejects_zero_count() {
        assert!(compute_spectrum(0, &SolverConfig::default()).is_err());
    }

    #[test]
    fn compute_spectrum_propagates_loose_root_tol() {
        let config = SolverConfig {
            root_tol: 0.1,
            ..SolverConfig::default()
        };
        assert!(matches!(
            compute_spectrum(3, &config),
            Err(GraetzError::RootConvergence { .. })
        ));
    }

    #[test]
    fn ode_residual_small_on_interior_grid() {
        // Quick check on the first three modes; the acceptance suite covers
        // eight on the full 512-point grid.
        let spectrum = default_spectrum(3);
        let h = 1e-5;
        for mode in &spectrum.modes {
            let lambda_sq = mode.lambda * mode.lambda;
            for i in 1..=64 {
                let r = i as f64 / 65.0;
                let d2 = (eigenfunction_deriv(mode, r + h).unwrap()
                    - eigenfunction_deriv(mode, r - h).unwrap())
                    / (2.0 * h);
                let d1 = eigenfunction_deriv(mode, r).unwrap();
                let value = eigenfunction_eval(mode, r).unwrap();
                let residual = d2 + d1 / r + lambda_sq * (1.0 - r * r) * value;
                assert!(
                    residual.abs() <= 1e-7 * lambda_sq,
                    "mode {} at r = {r}: residual {residual:e}",
                    mode.index
                );
            }
        }
    }
}
