//! Command-line surface: eigenvalue tables, radial profiles, bulk/Nusselt
//! curves, and the oracle validation run, emitted as CSV or JSON.
//!
//! Exit-code contract: 0 success, 1 usage error, 2 numerical
//! non-convergence or validation failure. Numbers are printed in their
//! shortest round-trip form, so emitted files reparse to the exact values
//! that produced them.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::SolverConfig;
use crate::error::{GraetzError, Result};
use crate::oracle::{self, OracleConfig};
use crate::series;

/// Spectral and shooting eigenvalues must agree this closely.
pub const EIGENVALUE_CHECK_TOLERANCE: f64 = 1e-8;
/// Spectral and finite-difference fields must agree this closely past the
/// inlet layer.
pub const FIELD_CHECK_TOLERANCE: f64 = 1e-3;
/// Start of the field comparison window.
pub const FIELD_CHECK_ZMIN: f64 = 0.01;
/// How many eigenvalues the validation run cross-checks.
pub const EIGENVALUE_CHECK_COUNT: usize = 5;

/// Output encoding for the table commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated with a header row and LF line endings.
    Csv,
    /// A UTF-8 array of flat objects.
    Json,
}

#[derive(Parser)]
#[command(
    name = "graetz",
    version,
    about = "Spectral solver for thermal entry flow in a circular pipe"
)]
struct Cli {
    /// Number of series modes
    #[arg(long, global = true, default_value_t = 20)]
    modes: usize,
    /// Bracket width the eigenvalue bisection refines to
    #[arg(long, global = true, default_value_t = 1e-12)]
    root_tol: f64,
    /// Gauss-Legendre order for the coefficient projections
    #[arg(long, global = true, default_value_t = 64)]
    quad_order: usize,
    /// Output encoding
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of eigenvalues, coefficients, and wall slopes
    Eigen {
        /// How many modes to tabulate (defaults to --modes)
        #[arg(long)]
        count: Option<usize>,
    },
    /// Radial temperature profile at a fixed axial position
    Profile {
        /// Axial position
        #[arg(long)]
        z: f64,
        /// Number of radial samples on the uniform grid
        #[arg(long, default_value_t = 101)]
        nr: usize,
    },
    /// Bulk temperature and local Nusselt number over log-spaced axial positions
    Nusselt {
        #[arg(long)]
        zmin: f64,
        #[arg(long)]
        zmax: f64,
        #[arg(long, default_value_t = 20)]
        points: usize,
    },
    /// Cross-validate the spectral solution against the brute-force oracles
    Validate {
        /// Radial points of the finite-difference grid
        #[arg(long, default_value_t = 401)]
        fd_nr: usize,
        /// Axial rows of the finite-difference grid
        #[arg(long, default_value_t = 4001)]
        fd_nz: usize,
        /// Axial extent of the finite-difference march
        #[arg(long, default_value_t = 0.5)]
        fd_zmax: f64,
        /// Radial step of the RK4 shooting integrator
        #[arg(long, default_value_t = 1e-4)]
        rk4_step: f64,
    },
}

#[derive(Serialize)]
struct EigenRow {
    n: usize,
    lambda: f64,
    lambda_sq: f64,
    #[serde(rename = "C_n")]
    coefficient: f64,
    #[serde(rename = "dR_dr_at_1")]
    wall_slope: f64,
}

#[derive(Serialize)]
struct ProfileRow {
    r: f64,
    #[serde(rename = "T")]
    temperature: f64,
}

#[derive(Serialize)]
struct NusseltRow {
    z: f64,
    #[serde(rename = "T_bulk")]
    bulk: f64,
    #[serde(rename = "Nu")]
    nusselt: f64,
}

/// Eigenvalue table: columns `n,lambda,lambda_sq,C_n,dR_dr_at_1`.
pub fn cmd_eigen(count: usize, config: &SolverConfig, format: OutputFormat) -> Result<String> {
    if count == 0 {
        return Err(GraetzError::Domain("count must be at least 1".into()));
    }
    let solution = series::build_solution(count, config)?;
    let rows: Vec<EigenRow> = solution
        .spectrum
        .modes
        .iter()
        .map(|mode| EigenRow {
            n: mode.index,
            lambda: mode.lambda,
            lambda_sq: mode.lambda * mode.lambda,
            coefficient: mode.coefficient.unwrap_or(f64::NAN),
            wall_slope: mode.wall_slope,
        })
        .collect();
    Ok(match format {
        OutputFormat::Csv => {
            let mut out = String::from("n,lambda,lambda_sq,C_n,dR_dr_at_1\n");
            for row in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.n, row.lambda, row.lambda_sq, row.coefficient, row.wall_slope
                ));
            }
            out
        }
        OutputFormat::Json => to_json(&rows),
    })
}

/// Radial profile at fixed z on the uniform grid r_i = i/(nr-1); columns `r,T`.
pub fn cmd_profile(
    z: f64,
    nr: usize,
    config: &SolverConfig,
    format: OutputFormat,
) -> Result<String> {
    if nr < 2 {
        return Err(GraetzError::Domain("nr must be at least 2".into()));
    }
    if !(z >= 0.0) {
        return Err(GraetzError::Domain(format!(
            "z must be non-negative, got {z}"
        )));
    }
    let solution = series::build_solution(config.mode_count, config)?;
    let mut rows = Vec::with_capacity(nr);
    for i in 0..nr {
        let r = i as f64 / (nr - 1) as f64;
        let sample = series::temperature_at(&solution, r, z)?;
        rows.push(ProfileRow {
            r,
            temperature: sample.temperature,
        });
    }
    Ok(match format {
        OutputFormat::Csv => {
            let mut out = String::from("r,T\n");
            for row in &rows {
                out.push_str(&format!("{},{}\n", row.r, row.temperature));
            }
            out
        }
        OutputFormat::Json => to_json(&rows),
    })
}

/// Bulk temperature and Nusselt number at log-spaced axial positions;
/// columns `z,T_bulk,Nu`.
pub fn cmd_nusselt(
    z_min: f64,
    z_max: f64,
    points: usize,
    config: &SolverConfig,
    format: OutputFormat,
) -> Result<String> {
    if !(z_min > 0.0 && z_min < z_max) {
        return Err(GraetzError::Domain(format!(
            "need 0 < zmin < zmax, got zmin = {z_min}, zmax = {z_max}"
        )));
    }
    if points < 2 {
        return Err(GraetzError::Domain("points must be at least 2".into()));
    }
    let solution = series::build_solution(config.mode_count, config)?;
    let ratio = z_max / z_min;
    let mut rows = Vec::with_capacity(points);
    for i in 0..points {
        let t = i as f64 / (points - 1) as f64;
        let z = z_min * ratio.powf(t);
        rows.push(NusseltRow {
            z,
            bulk: series::bulk_temperature(&solution, z)?,
            nusselt: series::local_nusselt(&solution, z)?,
        });
    }
    Ok(match format {
        OutputFormat::Csv => {
            let mut out = String::from("z,T_bulk,Nu\n");
            for row in &rows {
                out.push_str(&format!("{},{},{}\n", row.z, row.bulk, row.nusselt));
            }
            out
        }
        OutputFormat::Json => to_json(&rows),
    })
}

fn to_json<T: Serialize>(rows: &[T]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize to JSON");
    out.push('\n');
    out
}

/// One cross-validation measurement.
#[derive(Debug, Clone)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub measured: f64,
    pub tolerance: f64,
}

impl ValidationCheck {
    pub fn passed(&self) -> bool {
        self.measured <= self.tolerance
    }
}

/// Result of `validate`: one line per check.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(ValidationCheck::passed)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name)
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let verdict = if check.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{verdict} {}: measured {:.3e} (tolerance {:.0e})\n",
                check.name, check.measured, check.tolerance
            ));
        }
        out
    }
}

/// Runs the spectral-versus-shooting eigenvalue comparison and the
/// spectral-versus-finite-difference field comparison.
pub fn cmd_validate(config: &SolverConfig, oracle_config: &OracleConfig) -> Result<ValidationReport> {
    let solution = series::build_solution(config.mode_count, config)?;

    let count = EIGENVALUE_CHECK_COUNT.min(config.mode_count);
    let shooting = oracle::shoot_eigenvalues(count, oracle_config)?;
    let eigen_error = solution
        .spectrum
        .modes
        .iter()
        .take(count)
        .zip(&shooting)
        .map(|(mode, reference)| (mode.lambda - reference).abs())
        .fold(0.0_f64, f64::max);

    let grid = oracle::fd_march(oracle_config)?;
    let field_error = oracle::compare_fields(&solution, &grid, FIELD_CHECK_ZMIN)?;

    Ok(ValidationReport {
        checks: vec![
            ValidationCheck {
                name: "eigenvalues (spectral vs shooting)",
                measured: eigen_error,
                tolerance: EIGENVALUE_CHECK_TOLERANCE,
            },
            ValidationCheck {
                name: "field (spectral vs finite difference)",
                measured: field_error,
                tolerance: FIELD_CHECK_TOLERANCE,
            },
        ],
    })
}

enum RunError {
    Usage(String),
    Runtime(GraetzError),
    Io(std::io::Error),
}

impl From<GraetzError> for RunError {
    fn from(err: GraetzError) -> Self {
        RunError::Runtime(err)
    }
}

impl From<std::io::Error> for RunError {
    fn from(err: std::io::Error) -> Self {
        RunError::Io(err)
    }
}

/// Parses arguments, dispatches, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(RunError::Usage(message)) => {
            eprintln!("error: {message}");
            eprintln!("run 'graetz --help' for usage");
            1
        }
        Err(RunError::Runtime(err)) => {
            eprintln!("error: {err}");
            2
        }
        Err(RunError::Io(err)) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(cli: Cli) -> std::result::Result<i32, RunError> {
    let config = SolverConfig {
        mode_count: cli.modes,
        root_tol: cli.root_tol,
        quadrature_order: cli.quad_order,
        ..SolverConfig::default()
    };
    config
        .validate()
        .map_err(|err| RunError::Usage(err.to_string()))?;

    match cli.command {
        Command::Eigen { count } => {
            let count = count.unwrap_or(config.mode_count);
            if count == 0 {
                return Err(RunError::Usage("--count must be at least 1".into()));
            }
            let table = cmd_eigen(count, &config, cli.format)?;
            emit(cli.output.as_deref(), &table)?;
            Ok(0)
        }
        Command::Profile { z, nr } => {
            if nr < 2 {
                return Err(RunError::Usage("--nr must be at least 2".into()));
            }
            if !(z >= 0.0) {
                return Err(RunError::Usage(format!(
                    "--z must be non-negative, got {z}"
                )));
            }
            let table = cmd_profile(z, nr, &config, cli.format)?;
            emit(cli.output.as_deref(), &table)?;
            Ok(0)
        }
        Command::Nusselt { zmin, zmax, points } => {
            if !(zmin > 0.0 && zmin < zmax) {
                return Err(RunError::Usage(format!(
                    "need 0 < zmin < zmax, got zmin = {zmin}, zmax = {zmax}"
                )));
            }
            if points < 2 {
                return Err(RunError::Usage("--points must be at least 2".into()));
            }
            let table = cmd_nusselt(zmin, zmax, points, &config, cli.format)?;
            emit(cli.output.as_deref(), &table)?;
            Ok(0)
        }
        Command::Validate {
            fd_nr,
            fd_nz,
            fd_zmax,
            rk4_step,
        } => {
            let oracle_config = OracleConfig {
                rk4_step,
                fd_nr,
                fd_nz,
                fd_zmax,
            };
            oracle_config
                .validate()
                .map_err(|err| RunError::Usage(err.to_string()))?;
            let report = cmd_validate(&config, &oracle_config)?;
            emit(cli.output.as_deref(), &report.render())?;
            if report.all_passed() {
                Ok(0)
            } else {
                eprintln!("validation failed: {}", report.failing().join(", "));
                Ok(2)
            }
        }
    }
}

fn emit(path: Option<&Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(path) => fs::write(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
