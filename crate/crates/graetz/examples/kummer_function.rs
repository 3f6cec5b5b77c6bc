//! The special-function kernel on its own: Pochhammer symbols, Kummer's
//! M(a, b, x), the e^x identity, the Kummer transformation, and the
//! contiguous derivative.
//!
//!     cargo run --example kummer_function

use graetz::specfun::{kummer_m, kummer_m_dx, pochhammer, DEFAULT_MAX_TERMS, DEFAULT_TOL};

fn main() -> graetz::Result<()> {
    println!("pochhammer(0.5, 3)  = {}", pochhammer(0.5, 3));
    println!("pochhammer(1, 5)    = {} (= 5!)", pochhammer(1.0, 5));
    println!("pochhammer(-2, 4)   = {} (hits a zero factor)", pochhammer(-2.0, 4));

    let eval = kummer_m(1.0, 1.0, 1.0, DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
    println!(
        "\nM(1, 1, 1) = {:.15} vs e = {:.15} ({} terms)",
        eval.value,
        1.0_f64.exp(),
        eval.terms_used
    );

    // M(a, b, x) = e^x M(b-a, b, -x)
    let (a, b, x) = (-1.3, 2.0, 6.5);
    let left = kummer_m(a, b, x, DEFAULT_TOL, DEFAULT_MAX_TERMS)?.value;
    let right = x.exp() * kummer_m(b - a, b, -x, DEFAULT_TOL, DEFAULT_MAX_TERMS)?.value;
    println!("\nKummer transformation at (a, b, x) = ({a}, {b}, {x}):");
    println!("  M(a, b, x)            = {left:.15}");
    println!("  e^x M(b-a, b, -x)     = {right:.15}");

    // dM/dx = (a/b) M(a+1, b+1, x) against a central difference
    let h = 1e-6;
    let analytic = kummer_m_dx(a, b, x, DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
    let numeric = (kummer_m(a, b, x + h, DEFAULT_TOL, DEFAULT_MAX_TERMS)?.value
        - kummer_m(a, b, x - h, DEFAULT_TOL, DEFAULT_MAX_TERMS)?.value)
        / (2.0 * h);
    println!("\ndM/dx analytic = {analytic:.12}, central difference = {numeric:.12}");
    Ok(())
}
