//! Series evaluation of the Gauss hypergeometric function 2F1 and of the
//! two-variable hypergeometric function F1, plus the reduction of F1 to a
//! single 2F1 when gamma = beta + beta', and a finite-difference check of
//! the F1 partial differential equations.
//!
//! Terms are always built by incremental ratios, never by quotients of
//! rising factorials, so no intermediate can overflow.

use crate::error::{Error, Result};
use crate::types::clamp_radicand;

/// Largest |z| accepted by the direct 2F1 series.
const MAX_Z_2F1: f64 = 0.999;
/// Largest max(|x|, |y|) accepted by the direct double series.
const MAX_XY_F1: f64 = 0.95;

/// Parameters (alpha, beta, gamma) of 2F1; gamma must not be a
/// non-positive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gauss2F1Params {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

fn gamma_is_non_positive_integer(gamma: f64) -> bool {
    gamma <= 0.0 && gamma.fract() == 0.0
}

impl Gauss2F1Params {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        for (what, value) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { what, value });
            }
        }
        if gamma_is_non_positive_integer(gamma) {
            return Err(Error::ParamError {
                reason: format!("gamma must not be a non-positive integer (gamma = {gamma})"),
            });
        }
        Ok(Gauss2F1Params { alpha, beta, gamma })
    }
}

/// Parameters (alpha, {beta, beta'}, gamma) of F1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppellF1Params {
    pub alpha: f64,
    pub beta: f64,
    pub beta_prime: f64,
    pub gamma: f64,
}

impl AppellF1Params {
    pub fn new(alpha: f64, beta: f64, beta_prime: f64, gamma: f64) -> Result<Self> {
        for (what, value) in [
            ("alpha", alpha),
            ("beta", beta),
            ("beta_prime", beta_prime),
            ("gamma", gamma),
        ] {
            if !value.is_finite() {
                return Err(Error::NonFinite { what, value });
            }
        }
        if gamma_is_non_positive_integer(gamma) {
            return Err(Error::ParamError {
                reason: format!("gamma must not be a non-positive integer (gamma = {gamma})"),
            });
        }
        Ok(AppellF1Params {
            alpha,
            beta,
            beta_prime,
            gamma,
        })
    }
}

/// Stopping budget for a series: relative tolerance and a cap on the
/// number of terms (diagonals, for the double series).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesBudget {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesBudget {
    /// Budget for single series: rel_tol 1e-15, up to 10^6 terms.
    fn default() -> Self {
        SeriesBudget {
            rel_tol: 1e-15,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesBudget {
    /// Budget for the double series: rel_tol 1e-15, up to 4000 diagonals.
    pub fn double_series() -> Self {
        SeriesBudget {
            rel_tol: 1e-15,
            max_terms: 4000,
        }
    }

    fn validate(self) -> Result<Self> {
        if self.rel_tol.is_nan() || self.rel_tol < f64::EPSILON {
            return Err(Error::ParamError {
                reason: format!(
                    "rel_tol must be at least machine epsilon (got {})",
                    self.rel_tol
                ),
            });
        }
        if self.max_terms == 0 {
            return Err(Error::ParamError {
                reason: "max_terms must be positive".to_string(),
            });
        }
        Ok(self)
    }
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
///
/// Computed as a running product; overflow to infinity is allowed for
/// huge n (series code never divides rising factorials).
pub fn pochhammer(x: f64, n: u32) -> f64 {
    let mut product = 1.0;
    for i in 0..n {
        product *= x + i as f64;
    }
    product
}

/// The Gauss series 2F1(alpha, beta, gamma; z) for |z| < 0.999.
///
/// ```text
/// 2F1 = sum_n (alpha)_n (beta)_n / (gamma)_n * z^n / n!
/// ```
///
/// Successive terms come from the ratio
/// ((alpha + n)(beta + n)) / ((gamma + n)(n + 1)) * z; summation stops
/// after three consecutive terms below rel_tol * |sum|.
pub fn gauss_2f1(p: Gauss2F1Params, z: f64, budget: SeriesBudget) -> Result<f64> {
    let budget = budget.validate()?;
    if !z.is_finite() {
        return Err(Error::NonFinite {
            what: "z",
            value: z,
        });
    }
    if z.abs() >= MAX_Z_2F1 {
        return Err(Error::DomainError {
            reason: format!("|z| must be below {MAX_Z_2F1} for the direct series (z = {z})"),
        });
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut quiet = 0;
    for n in 0..budget.max_terms {
        let nf = n as f64;
        term *= (p.alpha + nf) * (p.beta + nf) / ((p.gamma + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.abs() <= budget.rel_tol * sum.abs() {
            quiet += 1;
            if quiet == 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::SlowConvergence {
        terms: budget.max_terms,
    })
}

/// The double series F1(alpha, {beta, beta'}, gamma; x, y) for
/// max(|x|, |y|) < 0.95.
///
/// ```text
/// F1 = sum_{m,n} (alpha)_{m+n} (beta)_m (beta')_n / (gamma)_{m+n}
///      * x^m y^n / (m! n!)
/// ```
///
/// Accumulated diagonal by diagonal (constant m + n), which keeps the
/// coupled (alpha)_{m+n}/(gamma)_{m+n} factor shared per block; stops
/// after three consecutive diagonals below rel_tol * |sum|.
pub fn appell_f1(p: AppellF1Params, x: f64, y: f64, budget: SeriesBudget) -> Result<f64> {
    let budget = budget.validate()?;
    for (what, value) in [("x", x), ("y", y)] {
        if !value.is_finite() {
            return Err(Error::NonFinite { what, value });
        }
    }
    if x.abs().max(y.abs()) >= MAX_XY_F1 {
        return Err(Error::DomainError {
            reason: format!(
                "max(|x|, |y|) must be below {MAX_XY_F1} for the direct double series \
                 (x = {x}, y = {y})"
            ),
        });
    }
    // beta_terms[m] = (beta)_m x^m / m!, prime_terms[n] = (beta')_n y^n / n!
    let mut beta_terms = vec![1.0_f64];
    let mut prime_terms = vec![1.0_f64];
    let mut coupled = 1.0; // (alpha)_d / (gamma)_d
    let mut sum = 0.0;
    let mut quiet = 0;
    for d in 0..=budget.max_terms {
        if d > 0 {
            let df = d as f64;
            coupled *= (p.alpha + df - 1.0) / (p.gamma + df - 1.0);
            beta_terms.push(beta_terms[d - 1] * (p.beta + df - 1.0) * x / df);
            prime_terms.push(prime_terms[d - 1] * (p.beta_prime + df - 1.0) * y / df);
        }
        let mut inner = 0.0;
        for m in 0..=d {
            inner += beta_terms[m] * prime_terms[d - m];
        }
        let block = coupled * inner;
        sum += block;
        if block.abs() <= budget.rel_tol * sum.abs() {
            quiet += 1;
            if quiet == 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::SlowConvergence {
        terms: budget.max_terms,
    })
}

/// F1 through a single 2F1, valid when gamma = beta + beta':
///
/// ```text
/// F1(alpha, {beta, beta'}, gamma; x, y)
///   = (1 - y)^(-alpha) 2F1(alpha, beta,  gamma; (x - y)/(1 - y))   (y <= x)
///   = (1 - x)^(-alpha) 2F1(alpha, beta', gamma; (y - x)/(1 - x))   (x <= y)
/// ```
///
/// The y = 0 column is included; it degenerates to a plain 2F1 in x.
pub fn f1_reduce(p: AppellF1Params, x: f64, y: f64, budget: SeriesBudget) -> Result<f64> {
    if (p.gamma - (p.beta + p.beta_prime)).abs() > 1e-14 {
        return Err(Error::ParamError {
            reason: format!(
                "reduction requires gamma = beta + beta' (gamma = {}, beta + beta' = {})",
                p.gamma,
                p.beta + p.beta_prime
            ),
        });
    }
    for (what, value) in [("x", x), ("y", y)] {
        if !value.is_finite() {
            return Err(Error::NonFinite { what, value });
        }
        if !(0.0..1.0).contains(&value) {
            return Err(Error::DomainError {
                reason: format!("{what} must lie in [0, 1) (got {value})"),
            });
        }
    }
    let (outer, inner_beta, argument) = if x >= y {
        (1.0 - y, p.beta, (x - y) / (1.0 - y))
    } else {
        (1.0 - x, p.beta_prime, (y - x) / (1.0 - x))
    };
    let gauss = Gauss2F1Params::new(p.alpha, inner_beta, p.gamma)?;
    Ok(outer.powf(-p.alpha) * gauss_2f1(gauss, argument, budget)?)
}

/// Residuals of the two partial differential equations F1 satisfies,
///
/// ```text
/// x(1-x) Fxx + y(1-x) Fxy + [gamma - (alpha+beta+1)x] Fx
///   - beta y Fy - alpha beta F = 0
/// y(1-y) Fyy + x(1-y) Fxy + [gamma - (alpha+beta'+1)y] Fy
///   - beta' x Fx - alpha beta' F = 0
/// ```
///
/// evaluated with second-order central differences of step h (cross
/// stencil for the mixed derivative). Each residual is normalized by the
/// largest term magnitude of its equation, so the truncation floor is
/// O(h^2) regardless of scale.
pub fn f1_pde_residual(
    p: AppellF1Params,
    x: f64,
    y: f64,
    h: f64,
    budget: SeriesBudget,
) -> Result<(f64, f64)> {
    if !(1e-5..=1e-3).contains(&h) {
        return Err(Error::DomainError {
            reason: format!("step h must lie in [1e-5, 1e-3] (got {h})"),
        });
    }
    let f = |u: f64, v: f64| appell_f1(p, u, v, budget);
    let center = f(x, y)?;
    let xp = f(x + h, y)?;
    let xm = f(x - h, y)?;
    let yp = f(x, y + h)?;
    let ym = f(x, y - h)?;
    let pp = f(x + h, y + h)?;
    let pm = f(x + h, y - h)?;
    let mp = f(x - h, y + h)?;
    let mm = f(x - h, y - h)?;

    let fx = (xp - xm) / (2.0 * h);
    let fy = (yp - ym) / (2.0 * h);
    let fxx = (xp - 2.0 * center + xm) / (h * h);
    let fyy = (yp - 2.0 * center + ym) / (h * h);
    let fxy = (pp - pm - mp + mm) / (4.0 * h * h);

    let normalized = |terms: [f64; 5]| {
        let scale = terms.iter().fold(0.0_f64, |m, t| m.max(t.abs()));
        terms.iter().sum::<f64>().abs() / scale
    };
    let r1 = normalized([
        x * (1.0 - x) * fxx,
        y * (1.0 - x) * fxy,
        (p.gamma - (p.alpha + p.beta + 1.0) * x) * fx,
        -p.beta * y * fy,
        -p.alpha * p.beta * center,
    ]);
    let r2 = normalized([
        y * (1.0 - y) * fyy,
        x * (1.0 - y) * fxy,
        (p.gamma - (p.alpha + p.beta_prime + 1.0) * y) * fy,
        -p.beta_prime * x * fx,
        -p.alpha * p.beta_prime * center,
    ]);
    Ok((r1, r2))
}

/// 1/sqrt(1 - x), the closed form of the diagonal
/// F1(1/2, {1/2, 1/2}, 1; x, x). Used as a cross-check target.
pub fn diagonal_closed_form(x: f64) -> Result<f64> {
    let complement = clamp_radicand(1.0 - x)?;
    if complement == 0.0 {
        return Err(Error::DomainError {
            reason: "x must be below 1".to_string(),
        });
    }
    Ok(1.0 / complement.sqrt())
}
