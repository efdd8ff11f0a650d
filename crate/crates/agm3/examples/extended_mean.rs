//! Compute the three-variable mean and print the full iteration trace.
//!
//! ```bash
//! cargo run -p agm3 --example extended_mean
//! ```

use agm3::{extended_mean, trace_rows, Triple, DEFAULT_TOL};

fn main() -> Result<(), agm3::Error> {
    let t = Triple::new(1.0, 0.5, 0.2)?;
    let result = extended_mean(t, DEFAULT_TOL)?;

    println!("M({}, {}, {}) = {}", t.a(), t.b(), t.c(), result.mean);
    println!("converged after {} steps\n", result.iterations);

    println!("{:>2}  {:<22} {:<22} {:<22}", "n", "a", "b", "c");
    for row in trace_rows(&result) {
        println!("{:>2}  {:<22} {:<22} {:<22}", row.n, row.a, row.b, row.c);
    }

    // every step carries the moduli linking it to the defining integral
    println!("\nper-step moduli identity residuals:");
    for step in &result.trace {
        let (rel, abs) = step.identity_residuals();
        println!(
            "  step {}: (1-k)(1-l) vs (b/a)^2: {rel:.2e}, k*l vs (c/a)^2: {abs:.2e}",
            step.index
        );
    }
    Ok(())
}
