//! Compute the first modes of the radial eigenproblem and print their
//! eigenvalues, expansion coefficients, and wall slopes.
//!
//!     cargo run --example eigenvalues

use graetz::{build_solution, SolverConfig};

fn main() -> graetz::Result<()> {
    let config = SolverConfig::default();
    let solution = build_solution(10, &config)?;

    println!("{:>3} {:>18} {:>18} {:>14} {:>14}", "n", "lambda", "lambda^2", "C_n", "R'(1)");
    for mode in &solution.spectrum.modes {
        println!(
            "{:>3} {:>18.12} {:>18.12} {:>14.8} {:>14.8}",
            mode.index,
            mode.lambda,
            mode.lambda * mode.lambda,
            mode.coefficient.unwrap(),
            mode.wall_slope,
        );
    }

    let gaps: Vec<f64> = solution
        .spectrum
        .modes
        .windows(2)
        .map(|pair| pair[1].lambda - pair[0].lambda)
        .collect();
    println!("\neigenvalue gaps: {gaps:.5?} (approach 4 for large n)");
    Ok(())
}
