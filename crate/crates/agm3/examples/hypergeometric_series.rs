//! The Gauss series 2F1 and its bridges to the mean and to K(k):
//! a0/agm(a0, b0) = 2F1(1/2, 1/2, 1; 1 - (b0/a0)^2) and
//! (2/pi) K(k) = 2F1(1/2, 1/2, 1; k^2).
//!
//! ```bash
//! cargo run -p agm3 --example hypergeometric_series
//! ```

use agm3::{
    agm_mean, elliptic_k, gauss_2f1, pochhammer, EllipticModulus, Gauss2F1Params, SeriesBudget,
    DEFAULT_TOL,
};

fn main() -> Result<(), agm3::Error> {
    println!("(1/2)_3 = {}", pochhammer(0.5, 3));

    let params = Gauss2F1Params::new(0.5, 0.5, 1.0)?;
    let budget = SeriesBudget::default();

    println!(
        "\n{:<6} {:<24} {:<24} (2/pi) K(sqrt z)",
        "z", "2F1(1/2,1/2,1;z)", "1/agm(1,sqrt(1-z))"
    );
    for z in [0.0, 0.25, 0.5, 0.75, 0.9] {
        let series = gauss_2f1(params, z, budget)?;
        let mean_route = 1.0 / agm_mean(1.0, (1.0 - z).sqrt(), DEFAULT_TOL)?;
        let k_route = 2.0 / std::f64::consts::PI * elliptic_k(EllipticModulus::from_squared(z)?);
        println!("{z:<6} {series:<24} {mean_route:<24} {k_route}");
    }
    Ok(())
}
