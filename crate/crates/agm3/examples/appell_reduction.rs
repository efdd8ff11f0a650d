//! The two-variable series F1, its diagonal closed form 1/sqrt(1 - x),
//! its reduction to a single 2F1 when gamma = beta + beta', and the
//! finite-difference residuals of its differential equations.
//!
//! ```bash
//! cargo run -p agm3 --example appell_reduction
//! ```

use agm3::{appell_f1, f1_pde_residual, f1_reduce, AppellF1Params, SeriesBudget};

fn main() -> Result<(), agm3::Error> {
    let half = AppellF1Params::new(0.5, 0.5, 0.5, 1.0)?;
    let budget = SeriesBudget::double_series();

    let diag = appell_f1(half, 0.19, 0.19, budget)?;
    println!(
        "F1(1/2, {{1/2, 1/2}}, 1; 0.19, 0.19) = {diag}  (10/9 = {})",
        10.0 / 9.0
    );

    println!("\ndouble series vs single-series reduction:");
    let cases = [
        (half, 0.5, 0.2),
        (AppellF1Params::new(0.3, 0.4, 0.6, 1.0)?, 0.5, 0.2),
        (AppellF1Params::new(1.2, 0.7, 0.9, 1.6)?, 0.3, 0.6),
    ];
    for (params, x, y) in cases {
        let direct = appell_f1(params, x, y, budget)?;
        let reduced = f1_reduce(params, x, y, SeriesBudget::default())?;
        println!(
            "  alpha={} beta={} beta'={} gamma={} at ({x}, {y}): {direct} vs {reduced}",
            params.alpha, params.beta, params.beta_prime, params.gamma
        );
    }

    let (r1, r2) = f1_pde_residual(half, 0.3, 0.1, 1e-4, budget)?;
    println!("\ndifferential-equation residuals at (0.3, 0.1): {r1:.2e}, {r2:.2e}");
    Ok(())
}
