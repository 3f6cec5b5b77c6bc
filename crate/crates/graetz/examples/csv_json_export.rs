//! Produce the same tables the `graetz` binary emits, from library code:
//! CSV with exact headers, JSON as arrays of flat objects. Numbers use the
//! shortest round-trip form, so files reparse to identical values.
//!
//!     cargo run --example csv_json_export

use graetz::cli::{cmd_eigen, cmd_nusselt, cmd_profile, OutputFormat};
use graetz::SolverConfig;

fn main() -> graetz::Result<()> {
    let config = SolverConfig::default();

    println!("--- eigen, CSV ---");
    print!("{}", cmd_eigen(3, &config, OutputFormat::Csv)?);

    println!("\n--- eigen, JSON ---");
    print!("{}", cmd_eigen(2, &config, OutputFormat::Json)?);

    println!("\n--- profile at z = 0.1, CSV ---");
    print!("{}", cmd_profile(0.1, 6, &config, OutputFormat::Csv)?);

    println!("\n--- nusselt over z in [0.01, 1], CSV ---");
    print!("{}", cmd_nusselt(0.01, 1.0, 6, &config, OutputFormat::Csv)?);
    Ok(())
}
