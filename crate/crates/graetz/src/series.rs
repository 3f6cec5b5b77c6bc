//! Series assembly: quadrature, expansion coefficients, and evaluation of the
//! temperature field, bulk temperature, and local Nusselt number.
//!
//! The temperature field is the truncated superposition
//!
//! ```text
//! T(r, z) = sum_n C_n R_n(r) exp(-lambda_n^2 z),
//! ```
//!
//! where the axial factor follows from substituting the separated form into
//! the convection-diffusion equation, and the coefficients project the unit
//! inlet profile onto each mode under the Sturm-Liouville weight r (1 - r^2):
//!
//! ```text
//! C_n = Int r (1-r^2) R_n dr / Int r (1-r^2) R_n^2 dr     over [0, 1].
//! ```
//!
//! Evaluation at z = 0 is permitted but Gibbs-afflicted pointwise near the
//! wall; inlet accuracy statements are made in the weighted L2 norm.

use crate::config::SolverConfig;
use crate::eigen::{self, EigenMode, Spectrum};
use crate::error::{GraetzError, Result};

/// Norm integrals below this signal a corrupted mode.
const DEGENERATE_NORM: f64 = 1e-14;
/// Bulk temperatures below this cannot support a Nusselt quotient.
const DEGENERATE_BULK: f64 = 1e-300;

/// Gauss-Legendre rule on [0, 1]. Weights sum to 1; the integrand is expected
/// to carry any weight function explicitly.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    /// Nodes in ascending order, all inside (0, 1).
    pub nodes: Vec<f64>,
    /// Positive weights, one per node.
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Sum of w_i f(x_i), in node order.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Builds the Gauss-Legendre rule of the given order on [0, 1].
///
/// Nodes are Newton-refined roots of the Legendre polynomial; supported
/// orders are 2 through 512.
pub fn gauss_rule(order: usize) -> Result<QuadratureRule> {
    if !(2..=512).contains(&order) {
        return Err(GraetzError::Domain(format!(
            "gauss_rule: order must lie in [2, 512], got {order}"
        )));
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Chebyshev estimate of the i-th root of P_n, refined by Newton.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut derivative = 0.0;
        for _ in 0..64 {
            let (p, dp) = legendre_with_derivative(n, x);
            derivative = dp;
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                let (p, dp) = legendre_with_derivative(n, x);
                derivative = dp;
                x -= p / dp;
                break;
            }
        }
        // x descends from near 1; map the symmetric pair onto [0, 1].
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        let w = 1.0 / ((1.0 - x * x) * derivative * derivative);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    Ok(QuadratureRule { nodes, weights })
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// The complete spectral solution: spectrum with coefficients, truncation
/// order, and the quadrature order the coefficients were projected with.
#[derive(Debug, Clone)]
pub struct SeriesSolution {
    pub spectrum: Spectrum,
    pub truncation: usize,
    pub quadrature_order: usize,
}

/// One evaluated field point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub r: f64,
    pub z: f64,
    pub temperature: f64,
}

/// Projects the unit inlet profile onto one mode. Both integrals carry the
/// weight r (1 - r^2) explicitly in the integrand.
pub fn mode_coefficient(mode: &EigenMode, rule: &QuadratureRule) -> Result<f64> {
    let mut numerator = 0.0;
    let mut denominator = 0.0;
    for (&r, &w) in rule.nodes.iter().zip(&rule.weights) {
        let weight = r * (1.0 - r * r);
        let value = eigen::eigenfunction_eval(mode, r)?;
        numerator += w * weight * value;
        denominator += w * weight * value * value;
    }
    if denominator.abs() < DEGENERATE_NORM {
        return Err(GraetzError::DegenerateNorm {
            index: mode.index,
            norm: denominator,
        });
    }
    Ok(numerator / denominator)
}

/// Computes the spectrum and fills every coefficient.
pub fn build_solution(count: usize, config: &SolverConfig) -> Result<SeriesSolution> {
    let mut spectrum = eigen::compute_spectrum(count, config)?;
    let rule = gauss_rule(config.quadrature_order)?;
    for mode in &mut spectrum.modes {
        mode.coefficient = Some(mode_coefficient(mode, &rule)?);
    }
    Ok(SeriesSolution {
        spectrum,
        truncation: count,
        quadrature_order: config.quadrature_order,
    })
}

fn coefficient_of(mode: &EigenMode) -> Result<f64> {
    mode.coefficient.ok_or_else(|| {
        GraetzError::Domain(format!("mode {} has no coefficient set", mode.index))
    })
}

/// Truncated-series temperature at one point. The wall value vanishes term
/// by term at converged roots, so |T(1, z)| stays below ~1e-8 in floating
/// point.
pub fn temperature_at(solution: &SeriesSolution, r: f64, z: f64) -> Result<FieldSample> {
    if !(0.0..=1.0).contains(&r) {
        return Err(GraetzError::Domain(format!(
            "temperature_at: radius must lie in [0, 1], got {r}"
        )));
    }
    if !(z >= 0.0) {
        return Err(GraetzError::Domain(format!(
            "temperature_at: axial position must be non-negative, got {z}"
        )));
    }
    let mut temperature = 0.0;
    for mode in &solution.spectrum.modes {
        let c = coefficient_of(mode)?;
        let radial = eigen::eigenfunction_eval(mode, r)?;
        temperature += c * radial * (-mode.lambda * mode.lambda * z).exp();
    }
    Ok(FieldSample { r, z, temperature })
}

/// Mixing-cup temperature T_b(z) = 4 Int r (1-r^2) T dr, evaluated through
/// the closed-form wall-slope series: integrating the radial equation once
/// gives Int r (1-r^2) R_n dr = -R_n'(1) / lambda_n^2, so
///
/// ```text
/// T_b(z) = 4 sum_n C_n exp(-lambda_n^2 z) (-R_n'(1) / lambda_n^2).
/// ```
pub fn bulk_temperature(solution: &SeriesSolution, z: f64) -> Result<f64> {
    if !(z >= 0.0) {
        return Err(GraetzError::Domain(format!(
            "bulk_temperature: axial position must be non-negative, got {z}"
        )));
    }
    let mut sum = 0.0;
    for mode in &solution.spectrum.modes {
        let c = coefficient_of(mode)?;
        let lambda_sq = mode.lambda * mode.lambda;
        sum += c * (-lambda_sq * z).exp() * (-mode.wall_slope / lambda_sq);
    }
    Ok(4.0 * sum)
}

/// Same quantity by direct quadrature of the temperature field; the slow
/// route, kept as an independent check on [`bulk_temperature`].
pub fn bulk_temperature_quadrature(
    solution: &SeriesSolution,
    z: f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    let mut sum = 0.0;
    for (&r, &w) in rule.nodes.iter().zip(&rule.weights) {
        let sample = temperature_at(solution, r, z)?;
        sum += w * r * (1.0 - r * r) * sample.temperature;
    }
    Ok(4.0 * sum)
}

/// Local Nusselt number Nu(z) = -2 (dT/dr at r=1) / T_b(z), for a wall held
/// at temperature zero. Decreases monotonically toward the fully developed
/// limit lambda_0^2 / 2.
pub fn local_nusselt(solution: &SeriesSolution, z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(GraetzError::Domain(format!(
            "local_nusselt: axial position must be positive, got {z} (singular at z = 0)"
        )));
    }
    let bulk = bulk_temperature(solution, z)?;
    if bulk.abs() < DEGENERATE_BULK {
        return Err(GraetzError::DegenerateBulk { z, value: bulk });
    }
    let mut wall_gradient = 0.0;
    for mode in &solution.spectrum.modes {
        let c = coefficient_of(mode)?;
        wall_gradient += c * mode.wall_slope * (-mode.lambda * mode.lambda * z).exp();
    }
    Ok(-2.0 * wall_gradient / bulk)
}
