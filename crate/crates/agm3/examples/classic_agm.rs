//! The classic two-variable mean, its functional equation, and the c = 0
//! reduction of the three-variable scheme.
//!
//! ```bash
//! cargo run -p agm3 --example classic_agm
//! ```

use agm3::{agm_mean, extended_mean, Triple, DEFAULT_TOL};

fn main() -> Result<(), agm3::Error> {
    let (a, b) = (1.0, 0.5);
    let mean = agm_mean(a, b, DEFAULT_TOL)?;
    println!("agm({a}, {b}) = {mean}");

    // invariant under one step of its own iteration
    let stepped = agm_mean((a + b) / 2.0, (a * b).sqrt(), DEFAULT_TOL)?;
    println!("agm((a+b)/2, sqrt(ab)) = {stepped}");

    // the three-variable scheme with c = 0 walks the identical orbit
    let reduced = extended_mean(Triple::new(a, b, 0.0)?, DEFAULT_TOL)?;
    println!(
        "M({a}, {b}, 0) = {} (bit-identical: {})",
        reduced.mean,
        reduced.mean == mean
    );
    Ok(())
}
