//! Brute-force validators, independent of the spectral path.
//!
//! Two oracles live here:
//!
//! * an RK4 shooting eigensolver that integrates the radial equation
//!   directly and root-finds on the wall value, and
//! * a Crank-Nicolson finite-difference marcher for the full
//!   convection-diffusion equation.
//!
//! Neither touches the Kummer-series machinery, so agreement between the two
//! paths is evidence rather than tautology. [`compare_fields`] is the bridge
//! that measures spectral-versus-finite-difference error.

use crate::error::{GraetzError, Result};
use crate::series::{FieldSample, SeriesSolution};

/// Resolution knobs for both oracles.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Radial RK4 step for the shooting integrator.
    pub rk4_step: f64,
    /// Radial points of the finite-difference grid (including both ends).
    pub fd_nr: usize,
    /// Axial rows of the finite-difference grid (including the inlet).
    pub fd_nz: usize,
    /// Axial extent of the finite-difference march.
    pub fd_zmax: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            rk4_step: 1e-4,
            fd_nr: 401,
            fd_nz: 4001,
            fd_zmax: 0.5,
        }
    }
}

impl OracleConfig {
    /// Minimum resolutions below which a comparison is meaningless.
    pub fn validate(&self) -> Result<()> {
        if !(self.rk4_step > 0.0 && self.rk4_step <= 1e-3) {
            return Err(GraetzError::Config(format!(
                "rk4_step must lie in (0, 1e-3], got {}",
                self.rk4_step
            )));
        }
        if self.fd_nr < 51 {
            return Err(GraetzError::Config(format!(
                "fd_nr must be at least 51, got {}",
                self.fd_nr
            )));
        }
        if self.fd_nz < 101 {
            return Err(GraetzError::Config(format!(
                "fd_nz must be at least 101, got {}",
                self.fd_nz
            )));
        }
        if !(self.fd_zmax > 0.0) {
            return Err(GraetzError::Config(format!(
                "fd_zmax must be positive, got {}",
                self.fd_zmax
            )));
        }
        Ok(())
    }
}

/// Integrates the radial equation R'' = -R'/r - lambda^2 (1 - r^2) R from
/// r = step to the wall and returns R(1) together with the (r, R, R')
/// trajectory.
///
/// The coordinate singularity at r = 0 is bypassed with the two-term regular
/// series R = 1 - lambda^2 r^2 / 4, R' = -lambda^2 r / 2 at the off-axis
/// start.
pub fn shoot_radial(lambda: f64, step: f64) -> (f64, Vec<(f64, f64, f64)>) {
    assert!(lambda > 0.0, "shoot_radial: lambda must be positive");
    assert!(
        step > 0.0 && step <= 1e-3,
        "shoot_radial: step must lie in (0, 1e-3]"
    );
    let steps = ((1.0 - step) / step).round() as usize;
    let h = (1.0 - step) / steps as f64;
    let mut trajectory = Vec::with_capacity(steps + 1);
    let lambda_sq = lambda * lambda;
    let mut r = step;
    let mut value = 1.0 - lambda_sq * r * r / 4.0;
    let mut slope = -lambda_sq * r / 2.0;
    trajectory.push((r, value, slope));
    for _ in 0..steps {
        let (v, s) = rk4_step(r, value, slope, h, lambda_sq);
        value = v;
        slope = s;
        r += h;
        trajectory.push((r, value, slope));
    }
    (value, trajectory)
}

/// Same integration without storing the trajectory.
fn wall_value(lambda: f64, step: f64) -> f64 {
    let steps = ((1.0 - step) / step).round() as usize;
    let h = (1.0 - step) / steps as f64;
    let lambda_sq = lambda * lambda;
    let mut r = step;
    let mut value = 1.0 - lambda_sq * r * r / 4.0;
    let mut slope = -lambda_sq * r / 2.0;
    for _ in 0..steps {
        let (v, s) = rk4_step(r, value, slope, h, lambda_sq);
        value = v;
        slope = s;
        r += h;
    }
    value
}

#[inline]
fn rk4_step(r: f64, value: f64, slope: f64, h: f64, lambda_sq: f64) -> (f64, f64) {
    let accel = |r: f64, v: f64, s: f64| -s / r - lambda_sq * (1.0 - r * r) * v;
    let k1v = slope;
    let k1s = accel(r, value, slope);
    let k2v = slope + 0.5 * h * k1s;
    let k2s = accel(r + 0.5 * h, value + 0.5 * h * k1v, slope + 0.5 * h * k1s);
    let k3v = slope + 0.5 * h * k2s;
    let k3s = accel(r + 0.5 * h, value + 0.5 * h * k2v, slope + 0.5 * h * k2s);
    let k4v = slope + h * k3s;
    let k4s = accel(r + h, value + h * k3v, slope + h * k3s);
    (
        value + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v),
        slope + h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s),
    )
}

/// First `count` eigenvalues by bracketing sign changes of the shot wall
/// value over steps of 0.5 and bisecting each bracket to width 1e-10.
pub fn shoot_eigenvalues(count: usize, config: &OracleConfig) -> Result<Vec<f64>> {
    config.validate()?;
    if count == 0 {
        return Err(GraetzError::Domain(
            "shoot_eigenvalues: count must be at least 1".into(),
        ));
    }
    let scan_step = 0.5;
    let lambda_max = 4.0 * count as f64 + 4.0;
    let intervals = (lambda_max / scan_step).round() as usize;
    let mut roots = Vec::with_capacity(count);
    let mut left = scan_step;
    let mut g_left = wall_value(left, config.rk4_step);
    for i in 2..=intervals {
        if roots.len() == count {
            break;
        }
        let right = i as f64 * scan_step;
        let g_right = wall_value(right, config.rk4_step);
        if g_left.signum() != g_right.signum() {
            roots.push(bisect_wall_value(
                left,
                right,
                g_left,
                config.rk4_step,
                1e-10,
            ));
        }
        left = right;
        g_left = g_right;
    }
    if roots.len() < count {
        return Err(GraetzError::BracketExhaustion {
            found: roots.len(),
            wanted: count,
            lambda_max,
        });
    }
    Ok(roots)
}

fn bisect_wall_value(mut lo: f64, mut hi: f64, mut g_lo: f64, step: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g_mid = wall_value(mid, step);
        if g_mid == 0.0 {
            return mid;
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Finite-difference solution on the full (r, z) grid, row-major in z.
#[derive(Debug, Clone)]
pub struct FdGrid {
    /// Radial nodes, 0 through 1 inclusive.
    pub r: Vec<f64>,
    /// Axial rows, 0 through zmax inclusive.
    pub z: Vec<f64>,
    /// Temperatures, laid out as `values[iz * r.len() + ir]`.
    pub values: Vec<f64>,
}

impl FdGrid {
    pub fn nr(&self) -> usize {
        self.r.len()
    }

    pub fn nz(&self) -> usize {
        self.z.len()
    }

    pub fn temperature(&self, iz: usize, ir: usize) -> f64 {
        self.values[iz * self.r.len() + ir]
    }

    pub fn sample(&self, iz: usize, ir: usize) -> FieldSample {
        FieldSample {
            r: self.r[ir],
            z: self.z[iz],
            temperature: self.temperature(iz, ir),
        }
    }
}

/// Marches the convection-diffusion equation
///
/// ```text
/// dT/dz = 1/(1 - r^2) (1/r) d/dr (r dT/dr)
/// ```
///
/// with Crank-Nicolson in z on a uniform radial grid: inlet row T = 1 with
/// the wall node at 0, wall column T(1, z) = 0, and the centerline handled by
/// the symmetric limit (1/r)(r T_r)_r -> 2 T_rr at r = 0. Each step solves
/// one tridiagonal system.
///
/// The discontinuous inlet corner excites sawtooth modes that plain
/// Crank-Nicolson barely damps, so the first two steps are taken as four
/// backward-Euler half-steps (Rannacher startup). Second-order accuracy in z
/// is unaffected.
pub fn fd_march(config: &OracleConfig) -> Result<FdGrid> {
    config.validate()?;
    let nr = config.fd_nr;
    let nz = config.fd_nz;
    let dr = 1.0 / (nr - 1) as f64;
    let dz = config.fd_zmax / (nz - 1) as f64;
    let r: Vec<f64> = (0..nr).map(|i| i as f64 * dr).collect();
    let z: Vec<f64> = (0..nz).map(|k| k as f64 * dz).collect();

    // Spatial operator A over the unknowns i = 0..nr-2 (wall folded in as 0):
    //   (A u)_0 = 4 (u_1 - u_0) / dr^2                      (symmetric limit)
    //   (A u)_i = c_i [r_{i+1/2}(u_{i+1}-u_i) - r_{i-1/2}(u_i-u_{i-1})] / (r_i dr^2)
    // with c_i = 1/(1 - r_i^2).
    let n = nr - 1;
    let mut lower = vec![0.0; n];
    let mut diag = vec![0.0; n];
    let mut upper = vec![0.0; n];
    diag[0] = -4.0 / (dr * dr);
    upper[0] = 4.0 / (dr * dr);
    for i in 1..n {
        let ci = 1.0 / (1.0 - r[i] * r[i]);
        let r_plus = r[i] + 0.5 * dr;
        let r_minus = r[i] - 0.5 * dr;
        let factor = ci / (r[i] * dr * dr);
        lower[i] = factor * r_minus;
        diag[i] = -factor * (r_plus + r_minus);
        if i < n - 1 {
            upper[i] = factor * r_plus;
        }
    }

    let mut values = vec![0.0; nz * nr];
    let mut u = vec![1.0; n];
    values[..n].fill(1.0);

    let mut rhs = vec![0.0; n];
    let mut scratch_c = vec![0.0; n];
    let mut scratch_d = vec![0.0; n];

    const STARTUP_STEPS: usize = 2;
    for k in 0..nz - 1 {
        if k < STARTUP_STEPS {
            // Two backward-Euler half-steps per nominal step.
            for _ in 0..2 {
                rhs.copy_from_slice(&u);
                solve_shifted_tridiagonal(
                    0.5 * dz,
                    &lower,
                    &diag,
                    &upper,
                    &mut rhs,
                    &mut scratch_c,
                    &mut scratch_d,
                );
                u.copy_from_slice(&rhs);
            }
        } else {
            // rhs = (I + (dz/2) A) u
            let theta = 0.5 * dz;
            rhs[0] = u[0] + theta * (diag[0] * u[0] + upper[0] * u[1]);
            for i in 1..n - 1 {
                rhs[i] =
                    u[i] + theta * (lower[i] * u[i - 1] + diag[i] * u[i] + upper[i] * u[i + 1]);
            }
            rhs[n - 1] = u[n - 1] + theta * (lower[n - 1] * u[n - 2] + diag[n - 1] * u[n - 1]);
            solve_shifted_tridiagonal(
                theta,
                &lower,
                &diag,
                &upper,
                &mut rhs,
                &mut scratch_c,
                &mut scratch_d,
            );
            u.copy_from_slice(&rhs);
        }
        values[(k + 1) * nr..(k + 1) * nr + n].copy_from_slice(&u);
    }

    Ok(FdGrid { r, z, values })
}

/// Thomas algorithm for (I - theta A) x = rhs, A tridiagonal.
fn solve_shifted_tridiagonal(
    theta: f64,
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &mut [f64],
    scratch_c: &mut [f64],
    scratch_d: &mut [f64],
) {
    let n = rhs.len();
    let b0 = 1.0 - theta * diag[0];
    scratch_c[0] = -theta * upper[0] / b0;
    scratch_d[0] = rhs[0] / b0;
    for i in 1..n {
        let a = -theta * lower[i];
        let b = 1.0 - theta * diag[i];
        let c = if i < n - 1 { -theta * upper[i] } else { 0.0 };
        let denom = b - a * scratch_c[i - 1];
        scratch_c[i] = c / denom;
        scratch_d[i] = (rhs[i] - a * scratch_d[i - 1]) / denom;
    }
    rhs[n - 1] = scratch_d[n - 1];
    for i in (0..n - 1).rev() {
        rhs[i] = scratch_d[i] - scratch_c[i] * rhs[i + 1];
    }
}

/// Maximum absolute spectral-minus-finite-difference temperature difference
/// over every grid node with z >= z_min. The inlet layer below z = 0.01 is
/// excluded by precondition because the truncated series is Gibbs-afflicted
/// there.
pub fn compare_fields(spectral: &SeriesSolution, fd: &FdGrid, z_min: f64) -> Result<f64> {
    if !(z_min >= 0.01) {
        return Err(GraetzError::Domain(format!(
            "compare_fields: z_min must be at least 0.01, got {z_min}"
        )));
    }
    if fd.z.last().is_none_or(|&zmax| zmax < z_min) {
        return Err(GraetzError::GridMismatch { z_min });
    }
    // Radial mode values are z-independent; evaluate once per column.
    let modes = &spectral.spectrum.modes;
    let mut radial = vec![0.0; modes.len() * fd.nr()];
    let mut coefficients = Vec::with_capacity(modes.len());
    for (m, mode) in modes.iter().enumerate() {
        coefficients.push(mode.coefficient.ok_or_else(|| {
            GraetzError::Domain(format!("mode {} has no coefficient set", mode.index))
        })?);
        for (ir, &rv) in fd.r.iter().enumerate() {
            radial[m * fd.nr() + ir] = crate::eigen::eigenfunction_eval(mode, rv)?;
        }
    }
    let mut max_error: f64 = 0.0;
    for (iz, &zv) in fd.z.iter().enumerate() {
        if zv < z_min {
            continue;
        }
        for ir in 0..fd.nr() {
            // Same term order as `series::temperature_at`.
            let mut t = 0.0;
            for (m, mode) in modes.iter().enumerate() {
                t += coefficients[m]
                    * radial[m * fd.nr() + ir]
                    * (-mode.lambda * mode.lambda * zv).exp();
            }
            max_error = max_error.max((t - fd.temperature(iz, ir)).abs());
        }
    }
    Ok(max_error)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::SolverConfig;
    use crate::series;
    use approx::assert_abs_diff_eq;

    #[test]
    fn subcritical_lambda_keeps_positive_wall_value() {
        let (wall, trajectory) = shoot_radial(0.5, 1e-3);
        assert!(wall > 0.0);
        assert_eq!(trajectory.len(), 1000);
        assert_abs_diff_eq!(trajectory.last().unwrap().0, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn wall_value_vanishes_at_first_eigenvalue() {
        let (wall, _) = shoot_radial(2.70436442, 1e-4);
        assert!(wall.abs() < 1e-6, "R(1) = {wall:e}");
        // Step halving moves the shot wall value by next to nothing.
        let (halved, _) = shoot_radial(2.70436442, 5e-5);
        assert!((wall - halved).abs() < 1e-9);
    }

    #[test]
    fn shooting_is_stable_under_step_halving() {
        let config = OracleConfig::default();
        let coarse = shoot_eigenvalues(3, &config).unwrap();
        let fine = shoot_eigenvalues(
            3,
            &OracleConfig {
                rk4_step: 5e-5,
                ..config
            },
        )
        .unwrap();
        for (a, b) in coarse.iter().zip(&fine) {
            assert!((a - b).abs() <= 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn first_three_shooting_eigenvalues() {
        let roots = shoot_eigenvalues(3, &OracleConfig::default()).unwrap();
        let expected = [2.70436442, 6.67903145, 10.67337954];
        for (root, reference) in roots.iter().zip(expected) {
            assert_abs_diff_eq!(*root, reference, epsilon = 1e-6);
        }
        assert!(roots.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn shoot_eigenvalues_validates_input() {
        assert!(shoot_eigenvalues(0, &OracleConfig::default()).is_err());
        let bad = OracleConfig {
            rk4_step: 1e-2,
            ..OracleConfig::default()
        };
        assert!(shoot_eigenvalues(1, &bad).is_err());
    }

    fn small_grid() -> OracleConfig {
        OracleConfig {
            rk4_step: 1e-4,
            fd_nr: 101,
            fd_nz: 401,
            fd_zmax: 0.5,
        }
    }

    #[test]
    fn inlet_row_is_one_inside_zero_at_wall() {
        let grid = fd_march(&small_grid()).unwrap();
        for ir in 0..grid.nr() - 1 {
            assert_eq!(grid.temperature(0, ir), 1.0);
        }
        assert_eq!(grid.temperature(0, grid.nr() - 1), 0.0);
    }

    #[test]
    fn wall_column_stays_zero() {
        let grid = fd_march(&small_grid()).unwrap();
        for iz in 0..grid.nz() {
            assert_eq!(grid.temperature(iz, grid.nr() - 1), 0.0);
        }
    }

    #[test]
    fn bulk_temperature_of_grid_never_increases() {
        let grid = fd_march(&small_grid()).unwrap();
        let weights: Vec<f64> = grid.r.iter().map(|&r| r * (1.0 - r * r)).collect();
        let mut previous = f64::INFINITY;
        for iz in 0..grid.nz() {
            // Trapezoid mixing-cup integral over the row.
            let mut bulk = 0.0;
            for ir in 0..grid.nr() - 1 {
                let f0 = weights[ir] * grid.temperature(iz, ir);
                let f1 = weights[ir + 1] * grid.temperature(iz, ir + 1);
                bulk += 0.5 * (f0 + f1) * (grid.r[ir + 1] - grid.r[ir]);
            }
            bulk *= 4.0;
            assert!(bulk <= previous + 1e-12, "row {iz}: {bulk} > {previous}");
            previous = bulk;
        }
    }

    #[test]
    fn grid_samples_expose_coordinates() {
        let grid = fd_march(&small_grid()).unwrap();
        let sample = grid.sample(0, 3);
        assert_eq!(sample.z, 0.0);
        assert_eq!(sample.temperature, 1.0);
        assert_abs_diff_eq!(sample.r, 0.03, epsilon = 1e-14);
    }

    #[test]
    fn compare_fields_of_solution_with_itself_is_zero() {
        let solution = series::build_solution(5, &SolverConfig::default()).unwrap();
        let r: Vec<f64> = (0..=40).map(|i| i as f64 / 40.0).collect();
        let z: Vec<f64> = (0..=20).map(|k| 0.01 + k as f64 * 0.01).collect();
        let mut values = Vec::with_capacity(r.len() * z.len());
        for &zv in &z {
            for &rv in &r {
                values.push(series::temperature_at(&solution, rv, zv).unwrap().temperature);
            }
        }
        let grid = FdGrid {
            r,
            z,
            values,
        };
        assert_eq!(compare_fields(&solution, &grid, 0.01).unwrap(), 0.0);
    }

    #[test]
    fn compare_fields_rejects_small_zmin_and_short_grid() {
        let solution = series::build_solution(3, &SolverConfig::default()).unwrap();
        let grid = fd_march(&small_grid()).unwrap();
        assert!(matches!(
            compare_fields(&solution, &grid, 0.001),
            Err(GraetzError::Domain(_))
        ));
        let short = FdGrid {
            r: vec![0.0, 0.5, 1.0],
            z: vec![0.0, 0.005],
            values: vec![0.0; 6],
        };
        assert!(matches!(
            compare_fields(&solution, &short, 0.01),
            Err(GraetzError::GridMismatch { .. })
        ));
    }

    #[test]
    fn config_validation_enforces_minimum_resolution() {
        for config in [
            OracleConfig {
                fd_nr: 11,
                ..OracleConfig::default()
            },
            OracleConfig {
                fd_nz: 21,
                ..OracleConfig::default()
            },
            OracleConfig {
                fd_zmax: -0.5,
                ..OracleConfig::default()
            },
        ] {
            assert!(config.validate().is_err());
        }
        assert!(OracleConfig::default().validate().is_ok());
    }
}
