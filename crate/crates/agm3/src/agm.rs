//! Classic two-variable arithmetic-geometric mean, the complete elliptic
//! integral of the first kind computed through it, and the Landen descent.
//!
//! These are the building blocks the three-variable scheme contracts to
//! when c = 0, and they double as independent oracles for it.

use crate::error::{Error, Result};
use crate::{DEFAULT_TOL, MAX_ITERATIONS};

/// An elliptic modulus k with 0 <= k < 1 (the argument of K(k), not k^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    k: f64,
}

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::NonFinite {
                what: "k",
                value: k,
            });
        }
        if !(0.0..1.0).contains(&k) {
            return Err(Error::DomainError {
                reason: format!("modulus must lie in [0, 1) (k = {k})"),
            });
        }
        Ok(EllipticModulus { k })
    }

    /// Build the modulus from the parameter m = k^2, clamping tiny negative
    /// m to zero under the shared radicand guard.
    pub fn from_squared(m: f64) -> Result<Self> {
        let m = crate::types::clamp_radicand(m)?;
        EllipticModulus::new(m.sqrt())
    }

    pub fn k(self) -> f64 {
        self.k
    }

    pub(crate) fn from_parts(k: f64) -> Self {
        EllipticModulus { k }
    }
}

/// Raise tolerances below 4 eps (or NaN) to the smallest supported value.
pub(crate) fn sanitize_tol(tol: f64) -> f64 {
    if tol >= DEFAULT_TOL {
        tol
    } else {
        DEFAULT_TOL
    }
}

/// The arithmetic-geometric mean of a and b: the common limit of
/// a' = (a + b)/2, b' = sqrt(a*b).
///
/// Symmetric in its operands and degree-1 homogeneous. Iteration stops
/// once |a - b| <= tol * a; the result is then (a + b)/2 and lies between
/// the smaller and larger operand.
pub fn agm_mean(a: f64, b: f64, tol: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::NonFinite {
            what: "a",
            value: a,
        });
    }
    if !b.is_finite() {
        return Err(Error::NonFinite {
            what: "b",
            value: b,
        });
    }
    if a <= 0.0 || b <= 0.0 {
        return Err(Error::DomainError {
            reason: format!("operands must be positive (a = {a}, b = {b})"),
        });
    }
    let tol = sanitize_tol(tol);
    let (mut hi, mut lo) = if a >= b { (a, b) } else { (b, a) };
    for n in 0..=MAX_ITERATIONS {
        if (hi - lo).abs() <= tol * hi {
            return Ok((hi + lo) / 2.0);
        }
        if n == MAX_ITERATIONS {
            break;
        }
        (hi, lo) = ((hi + lo) / 2.0, (hi * lo).sqrt());
    }
    Err(Error::NonConvergence {
        context: "two-variable mean",
        limit: MAX_ITERATIONS,
        trace: Vec::new(),
    })
}

/// Complete elliptic integral of the first kind,
///
/// ```text
/// K(k) = integral_0^(pi/2) dphi / sqrt(1 - k^2 sin^2(phi))
/// ```
///
/// computed as pi / (2 agm(1, sqrt(1 - k^2))). Monotone increasing in k
/// with K(0) = pi/2.
pub fn elliptic_k(k: EllipticModulus) -> f64 {
    let complement = ((1.0 - k.k) * (1.0 + k.k)).sqrt();
    let mean = agm_mean(1.0, complement, DEFAULT_TOL).expect("agm of positive operands converges");
    std::f64::consts::PI / (2.0 * mean)
}

/// One Landen descent step: k1 = (1 - sqrt(1 - k0^2)) / (1 + sqrt(1 - k0^2)).
///
/// Returns (k1, factor) with factor = (1 + sqrt(1 - k0^2)) / 2, so that
/// K(k1) = factor * K(k0), equivalently K(k0) = (1 + k1) K(k1).
pub fn landen_descend(k0: EllipticModulus) -> (EllipticModulus, f64) {
    let complement = ((1.0 - k0.k) * (1.0 + k0.k)).sqrt();
    let k1 = (1.0 - complement) / (1.0 + complement);
    let factor = (1.0 + complement) / 2.0;
    (EllipticModulus::from_parts(k1), factor)
}
