//! The RK4 shooting eigensolver: integrate the radial equation directly,
//! root-find on the wall value, and compare against the spectral eigenvalues.
//! The two paths share no code, so agreement is a genuine cross-check.
//!
//!     cargo run --example shooting_oracle

use graetz::eigen::compute_spectrum;
use graetz::oracle::{shoot_eigenvalues, shoot_radial, OracleConfig};
use graetz::SolverConfig;

fn main() -> graetz::Result<()> {
    let oracle_config = OracleConfig::default();
    let count = 5;

    let shooting = shoot_eigenvalues(count, &oracle_config)?;
    let spectrum = compute_spectrum(count, &SolverConfig::default())?;

    println!("{:>3} {:>18} {:>18} {:>10}", "n", "shooting", "spectral", "|diff|");
    for (mode, reference) in spectrum.modes.iter().zip(&shooting) {
        println!(
            "{:>3} {:>18.12} {:>18.12} {:>10.2e}",
            mode.index,
            reference,
            mode.lambda,
            (mode.lambda - reference).abs()
        );
    }

    // A subcritical lambda cannot bring the wall value down to zero.
    let (wall, trajectory) = shoot_radial(1.5, 1e-4);
    println!("\nshoot_radial(1.5): R(1) = {wall:.6} over {} stored points", trajectory.len());
    let (wall, _) = shoot_radial(shooting[0], 1e-4);
    println!("shoot_radial(lambda_0): R(1) = {wall:.3e}");
    Ok(())
}
