//! Gauss-Legendre quadrature and the two integral forms whose common
//! value is a0/M: the (kappa, lambda) form and the (a, b, c) form.
//!
//! Both integrals are evaluated in theta-space, where the substitution
//! u = sin^2(theta) has already removed the inverse-square-root endpoint
//! singularities of the u-form; the integrands are analytic on the whole
//! interval and node doubling converges geometrically.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::types::{ModuliPair, Triple};

/// Node-doubling control: relative acceptance tolerance and the node cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub max_nodes: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-13,
            max_nodes: 4096,
        }
    }
}

impl QuadratureConfig {
    fn validate(self) -> Result<Self> {
        if self.rel_tol.is_nan() || self.rel_tol < 1e-15 {
            return Err(Error::ParamError {
                reason: format!("rel_tol must be at least 1e-15 (got {})", self.rel_tol),
            });
        }
        if self.max_nodes < 16 || self.max_nodes > 4096 {
            return Err(Error::ParamError {
                reason: format!("max_nodes must lie in [16, 4096] (got {})", self.max_nodes),
            });
        }
        Ok(self)
    }
}

/// Nodes and weights on [-1, 1], cached per order. Rules are computed
/// once and shared; readers never block after the first use of an order.
type NodeWeights = Arc<Vec<(f64, f64)>>;

fn legendre_rule(n: usize) -> NodeWeights {
    static CACHE: OnceLock<Mutex<HashMap<usize, NodeWeights>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("legendre cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(compute_rule(n)))
        .clone()
}

/// Evaluate P_n and its derivative at x by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = x;
    for k in 2..=n {
        let kf = k as f64;
        (prev, cur) = (cur, ((2.0 * kf - 1.0) * x * cur - (kf - 1.0) * prev) / kf);
    }
    let derivative = n as f64 * (x * cur - prev) / (x * x - 1.0);
    (cur, derivative)
}

/// Newton iteration on the roots of P_n, polished to the last ulp.
fn compute_rule(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2, "a quadrature rule needs at least two nodes");
    let mut pairs = Vec::with_capacity(n);
    for i in 1..=n.div_ceil(2) {
        let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut polish = 0;
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let correction = p / dp;
            x -= correction;
            if correction.abs() <= 1e-15 * x.abs().max(1e-12) {
                polish += 1;
                if polish == 2 {
                    break;
                }
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        pairs.push((x, w));
        if x != 0.0 {
            pairs.push((-x, w));
        }
    }
    pairs
}

/// n-node Gauss-Legendre estimate of the integral of f over [lo, hi].
pub fn gauss_legendre<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> f64 {
    let rule = legendre_rule(n);
    let half = (hi - lo) / 2.0;
    let mid = (lo + hi) / 2.0;
    let mut sum = 0.0;
    for &(x, w) in rule.iter() {
        sum += w * f(mid + half * x);
    }
    sum * half
}

/// Double the node count from 16 until two successive estimates agree.
fn integrate_doubling<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    cfg: QuadratureConfig,
) -> Result<f64> {
    let mut nodes = 16;
    let mut previous: Option<f64> = None;
    while nodes <= cfg.max_nodes {
        let current = gauss_legendre(&f, lo, hi, nodes);
        if let Some(prev) = previous {
            if (current - prev).abs() <= cfg.rel_tol * current.abs() {
                return Ok(current);
            }
        }
        previous = Some(current);
        nodes *= 2;
    }
    Err(Error::NonConvergence {
        context: "node-doubling quadrature",
        limit: cfg.max_nodes,
        trace: Vec::new(),
    })
}

/// The moduli form of a0/M:
///
/// ```text
/// (1/pi) int_0^1 du / sqrt(u(1-u)(1 - kappa u)(1 - lambda u))
///   = (2/pi) int_0^(pi/2) dtheta / sqrt((1 - kappa sin^2)(1 - lambda sin^2))
/// ```
///
/// Symmetric in (kappa, lambda); equals 1 at (0, 0) and (2/pi) K(sqrt(kappa))
/// at lambda = 0. The value is always >= 1.
pub fn integral_u_form(m: ModuliPair, cfg: QuadratureConfig) -> Result<f64> {
    let cfg = cfg.validate()?;
    let (kappa, lambda) = (m.kappa(), m.lambda());
    let integrand = move |theta: f64| {
        let s2 = theta.sin().powi(2);
        1.0 / ((1.0 - kappa * s2) * (1.0 - lambda * s2)).sqrt()
    };
    let value = integrate_doubling(integrand, 0.0, FRAC_PI_2, cfg)?;
    Ok(2.0 / PI * value)
}

/// The triple form of a0/M:
///
/// ```text
/// (2 a0/pi) int_0^(pi/2) dtheta
///   / sqrt(a0^2 cos^2 + b0^2 sin^2 - c0^2 cos^2 sin^2)
/// ```
///
/// The radicand equals a0^2 (1 - kappa u)(1 - lambda u) under u = sin^2,
/// so it stays within [b^2, a^2] for a valid triple; each node asserts
/// positivity to catch invalid states that slipped past validation.
pub fn integral_theta_form(t: Triple, cfg: QuadratureConfig) -> Result<f64> {
    let cfg = cfg.validate()?;
    let (a, b, c) = (t.a(), t.b(), t.c());
    // the innermost closure can't return Result; record the first bad node
    let bad_node = std::cell::Cell::new(None);
    let integrand = |theta: f64| {
        let cos2 = theta.cos().powi(2);
        let sin2 = theta.sin().powi(2);
        let radicand = a * a * cos2 + b * b * sin2 - c * c * cos2 * sin2;
        if radicand <= 0.0 && bad_node.get().is_none() {
            bad_node.set(Some((theta, radicand)));
        }
        1.0 / radicand.sqrt()
    };
    let result = integrate_doubling(integrand, 0.0, FRAC_PI_2, cfg);
    if let Some((theta, value)) = bad_node.get() {
        return Err(Error::NonPositiveRadicand { theta, value });
    }
    Ok(2.0 * a / PI * result?)
}
