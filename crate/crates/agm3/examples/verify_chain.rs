//! Run all five routes to a0/M for one triple and print the pairwise
//! residual table the `verify` subcommand is built on.
//!
//! ```bash
//! cargo run -p agm3 --example verify_chain
//! ```

use agm3::{cross_check, Triple, DEFAULT_TOL, VERIFY_THRESHOLD};

fn main() -> Result<(), agm3::Error> {
    let t = Triple::new(1.0, 0.5, 0.2)?;
    let check = cross_check(t, DEFAULT_TOL)?;

    println!("routes to a0/M for ({}, {}, {}):", t.a(), t.b(), t.c());
    println!("  iteration   : {}", check.values.iteration);
    println!("  u-form      : {}", check.values.u_form);
    println!("  theta-form  : {}", check.values.theta_form);
    println!("  F1 series   : {}", check.values.appell_f1);
    println!("  reduced 2F1 : {}", check.values.reduced_2f1);

    println!("\npairwise residuals (threshold {VERIFY_THRESHOLD:e}):");
    for (name, value) in &check.residuals {
        println!("  {name:<28} {value:.3e}");
    }
    println!(
        "\nverification: {}",
        if check.passed() { "PASS" } else { "FAIL" }
    );
    Ok(())
}
