//! The two quadrature forms of a0/M and their agreement with the
//! iterated mean.
//!
//! ```bash
//! cargo run -p agm3 --example integral_oracles
//! ```

use agm3::{
    extended_mean, integral_theta_form, integral_u_form, moduli_from_triple, QuadratureConfig,
    Triple, DEFAULT_TOL,
};

fn main() -> Result<(), agm3::Error> {
    let t = Triple::new(1.0, 0.5, 0.2)?;
    let cfg = QuadratureConfig::default();

    let moduli = moduli_from_triple(t)?;
    println!("kappa = {}, lambda = {}", moduli.kappa(), moduli.lambda());

    let u = integral_u_form(moduli, cfg)?;
    let theta = integral_theta_form(t, cfg)?;
    let iterated = t.a() / extended_mean(t, DEFAULT_TOL)?.mean;

    println!("(kappa, lambda) integral : {u}");
    println!("(a, b, c) integral       : {theta}");
    println!("a0 / M from the iteration: {iterated}");
    println!(
        "spread: {:.2e}",
        (u - theta).abs().max((u - iterated).abs())
    );
    Ok(())
}
