//! Bulk (mixing-cup) temperature and local Nusselt number along the pipe,
//! approaching the fully developed limit lambda_0^2 / 2.
//!
//!     cargo run --example bulk_and_nusselt

use graetz::{build_solution, bulk_temperature, local_nusselt, SolverConfig};

fn main() -> graetz::Result<()> {
    let solution = build_solution(20, &SolverConfig::default())?;
    let lambda0 = solution.spectrum.modes[0].lambda;
    let developed = lambda0 * lambda0 / 2.0;

    println!("{:>10} {:>12} {:>12}", "z", "T_bulk", "Nu");
    let (z_min, z_max, points) = (0.001_f64, 2.0_f64, 16);
    for i in 0..points {
        let t = i as f64 / (points - 1) as f64;
        let z = z_min * (z_max / z_min).powf(t);
        println!(
            "{z:>10.5} {:>12.8} {:>12.8}",
            bulk_temperature(&solution, z)?,
            local_nusselt(&solution, z)?
        );
    }
    println!("\nfully developed limit lambda_0^2/2 = {developed:.8}");
    println!("Nu(10) - limit = {:+.3e}", local_nusselt(&solution, 10.0)? - developed);
    Ok(())
}
