//! Cross-validate the spectral field against the Crank-Nicolson marcher on
//! a sequence of grids; the error falls off at second order.
//!
//!     cargo run --example finite_difference_check

use graetz::oracle::{compare_fields, fd_march, OracleConfig};
use graetz::{build_solution, SolverConfig};

fn main() -> graetz::Result<()> {
    let solution = build_solution(20, &SolverConfig::default())?;

    println!("{:>12} {:>14}", "grid", "max |dT|, z >= 0.01");
    for (nr, nz) in [(101, 1001), (201, 2001), (401, 4001)] {
        let config = OracleConfig {
            fd_nr: nr,
            fd_nz: nz,
            ..OracleConfig::default()
        };
        let grid = fd_march(&config)?;
        let error = compare_fields(&solution, &grid, 0.01)?;
        println!("{:>5}x{:<6} {error:>14.3e}", nr, nz);
    }

    let grid = fd_march(&OracleConfig::default())?;
    let iz = grid.z.iter().position(|&z| (z - 0.1).abs() < 1e-12).unwrap();
    let fd_centerline = grid.temperature(iz, 0);
    let spectral = graetz::temperature_at(&solution, 0.0, 0.1)?.temperature;
    println!("\ncenterline at z = 0.1: finite difference {fd_centerline:.8}, spectral {spectral:.8}");
    Ok(())
}
