//! The coordinate systems behind one iteration step: the reduced ratios
//! (xi, eta), the moduli (kappa, lambda), their angle parametrization,
//! and the two equivalent routes to the next moduli.
//!
//! ```bash
//! cargo run -p agm3 --example moduli_geometry
//! ```

use agm3::{moduli_from_triple, next_moduli, next_moduli_via_angles, step, Triple};

fn main() -> Result<(), agm3::Error> {
    let t = Triple::new(1.0, 0.5, 0.2)?;

    let r = t.ratios();
    println!("xi  = (b+c)/a = {}", r.xi());
    println!("eta = (b-c)/a = {}", r.eta());

    let m = moduli_from_triple(t)?;
    println!("\nkappa  = {}", m.kappa());
    println!("lambda = {}", m.lambda());
    let angles = m.to_angles();
    println!("alpha = {} rad, eps = {} rad", angles.alpha(), angles.eps());

    let via_ratios = next_moduli(r)?;
    let via_angles = next_moduli_via_angles(m)?;
    println!(
        "\nnext moduli via (xi, eta):   ({}, {})",
        via_ratios.kappa(),
        via_ratios.lambda()
    );
    println!(
        "next moduli via the angles:  ({}, {})",
        via_angles.kappa(),
        via_angles.lambda()
    );

    let next = step(t)?;
    println!("\nnext triple: ({}, {}, {})", next.a(), next.b(), next.c());
    Ok(())
}
