//! The complete elliptic integral K(k) through the mean, and a Landen
//! descent chain: K(k0) = (1 + k1) K(k1) at every level.
//!
//! ```bash
//! cargo run -p agm3 --example elliptic_landen
//! ```

use agm3::{elliptic_k, landen_descend, EllipticModulus};

fn main() -> Result<(), agm3::Error> {
    println!("K(0)          = {}", elliptic_k(EllipticModulus::new(0.0)?));
    println!(
        "K(sqrt(1/2))  = {}",
        elliptic_k(EllipticModulus::from_squared(0.5)?)
    );

    let mut k = EllipticModulus::new(0.95)?;
    let target = elliptic_k(k);
    let mut accumulated = 1.0;
    println!("\nLanden descent from k = {}:", k.k());
    println!("{:<24} {:<24} factor * K(k)", "k", "factor so far");
    for _ in 0..6 {
        println!(
            "{:<24} {:<24} {}",
            k.k(),
            accumulated,
            accumulated * elliptic_k(k)
        );
        let (next, factor) = landen_descend(k);
        // K(k_next) = factor * K(k), so dividing keeps the product at K(k0)
        accumulated /= factor;
        k = next;
    }
    println!("\nevery row reproduces K(0.95) = {target}");
    Ok(())
}
