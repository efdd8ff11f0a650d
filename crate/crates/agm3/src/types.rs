//! Domain value types shared by every other module: the iteration state
//! (a, b, c), the reduced coordinates (xi, eta), the integral moduli
//! (kappa, lambda) and their angle parametrization.
//!
//! All types are immutable `Copy` values validated on construction, so
//! downstream code can rely on their invariants without re-checking.

use crate::error::{Error, Result};

/// Radicands in `[-RADICAND_GUARD, 0)` are treated as rounding noise and
/// clamped to zero; anything below the guard is a hard error.
pub(crate) const RADICAND_GUARD: f64 = -1e-14;

/// Clamp a tiny negative radicand to zero, reject larger negatives.
pub(crate) fn clamp_radicand(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= RADICAND_GUARD {
        Ok(0.0)
    } else {
        Err(Error::NegativeRadicand { value })
    }
}

fn ensure_finite(what: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what, value })
    }
}

/// The three-variable iteration state (a, b, c).
///
/// Valid inputs satisfy a > b > 0, b >= c >= 0 and a > b + c. The c = 0
/// boundary is admitted: it reduces the scheme to the classic two-variable
/// arithmetic-geometric mean. Iterates produced internally approach the
/// a = b, c = 0 limit and may sit on that closure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triple {
    a: f64,
    b: f64,
    c: f64,
}

impl Triple {
    /// Validate (a, b, c) against the full set of input constraints.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        ensure_finite("a", a)?;
        ensure_finite("b", b)?;
        ensure_finite("c", c)?;
        if b <= 0.0 {
            return Err(Error::OrderViolation {
                constraint: format!("b must be positive (b = {b})"),
            });
        }
        if c < 0.0 {
            return Err(Error::OrderViolation {
                constraint: format!("c must be non-negative (c = {c})"),
            });
        }
        if a <= b {
            return Err(Error::OrderViolation {
                constraint: format!("a must exceed b (a = {a}, b = {b})"),
            });
        }
        if b < c {
            return Err(Error::OrderViolation {
                constraint: format!("b must be at least c (b = {b}, c = {c})"),
            });
        }
        let sum = b + c;
        if a <= sum {
            return Err(Error::SumViolation { a, sum });
        }
        Ok(Triple { a, b, c })
    }

    /// Construct an iterate without input validation. Only the iteration
    /// itself may do this; its updates preserve the invariants up to the
    /// floating-point collapse at the limit.
    pub(crate) fn from_iterate(a: f64, b: f64, c: f64) -> Self {
        Triple { a, b, c }
    }

    pub fn a(self) -> f64 {
        self.a
    }

    pub fn b(self) -> f64 {
        self.b
    }

    pub fn c(self) -> f64 {
        self.c
    }

    /// The reduced coordinates xi = (b + c)/a, eta = (b - c)/a.
    ///
    /// Scale-invariant: exact under scaling by a power of two, within a
    /// couple of ulp otherwise.
    pub fn ratios(self) -> RatioPair {
        RatioPair {
            xi: (self.b + self.c) / self.a,
            eta: (self.b - self.c) / self.a,
        }
    }
}

/// The pair (xi, eta) = ((b + c)/a, (b - c)/a).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPair {
    xi: f64,
    eta: f64,
}

impl RatioPair {
    pub fn new(xi: f64, eta: f64) -> Result<Self> {
        ensure_finite("xi", xi)?;
        ensure_finite("eta", eta)?;
        if !(xi > 0.0 && xi < 1.0) {
            return Err(Error::DomainError {
                reason: format!("xi must lie in (0, 1) (xi = {xi})"),
            });
        }
        if !(eta >= 0.0 && eta <= xi) {
            return Err(Error::DomainError {
                reason: format!("eta must lie in [0, xi] (eta = {eta}, xi = {xi})"),
            });
        }
        Ok(RatioPair { xi, eta })
    }

    pub fn xi(self) -> f64 {
        self.xi
    }

    pub fn eta(self) -> f64 {
        self.eta
    }
}

/// The moduli (kappa, lambda) of the quartic-radicand integral, linked to
/// a triple by (1 - kappa)(1 - lambda) = (b/a)^2 and kappa*lambda = (c/a)^2.
///
/// The kappa = 0 and lambda = 0 closures are admitted; lambda = 0 is the
/// classic single-modulus integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModuliPair {
    kappa: f64,
    lambda: f64,
}

impl ModuliPair {
    pub fn new(kappa: f64, lambda: f64) -> Result<Self> {
        ensure_finite("kappa", kappa)?;
        ensure_finite("lambda", lambda)?;
        if !(0.0..1.0).contains(&kappa) {
            return Err(Error::DomainError {
                reason: format!("kappa must lie in [0, 1) (kappa = {kappa})"),
            });
        }
        if !(lambda >= 0.0 && lambda <= kappa) {
            return Err(Error::DomainError {
                reason: format!(
                    "lambda must lie in [0, kappa] (lambda = {lambda}, kappa = {kappa})"
                ),
            });
        }
        Ok(ModuliPair { kappa, lambda })
    }

    pub(crate) fn from_parts(kappa: f64, lambda: f64) -> Self {
        ModuliPair { kappa, lambda }
    }

    pub fn kappa(self) -> f64 {
        self.kappa
    }

    pub fn lambda(self) -> f64 {
        self.lambda
    }

    /// The angles (alpha, eps) with kappa = sin^2(alpha), lambda = sin^2(eps).
    ///
    /// Inverse of [`AnglePair::to_moduli`] up to rounding; the round trip
    /// stays within 4 ulp.
    pub fn to_angles(self) -> AnglePair {
        AnglePair {
            alpha: self.kappa.sqrt().asin(),
            eps: self.lambda.sqrt().asin(),
        }
    }
}

/// The angle parametrization (alpha, eps) of a moduli pair, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnglePair {
    alpha: f64,
    eps: f64,
}

impl AnglePair {
    pub fn new(alpha: f64, eps: f64) -> Result<Self> {
        ensure_finite("alpha", alpha)?;
        ensure_finite("eps", eps)?;
        let half_pi = std::f64::consts::FRAC_PI_2;
        if !(alpha > 0.0 && alpha < half_pi) {
            return Err(Error::DomainError {
                reason: format!("alpha must lie in (0, pi/2) (alpha = {alpha})"),
            });
        }
        if !(eps >= 0.0 && eps <= alpha) {
            return Err(Error::DomainError {
                reason: format!("eps must lie in [0, alpha] (eps = {eps}, alpha = {alpha})"),
            });
        }
        Ok(AnglePair { alpha, eps })
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    pub fn eps(self) -> f64 {
        self.eps
    }

    /// kappa = sin^2(alpha), lambda = sin^2(eps).
    pub fn to_moduli(self) -> ModuliPair {
        let sa = self.alpha.sin();
        let se = self.eps.sin();
        ModuliPair {
            kappa: sa * sa,
            lambda: se * se,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

    #[test]
    fn accepts_the_reference_triple() {
        let t = Triple::new(1.0, 0.5, 0.2).unwrap();
        assert_eq!((t.a(), t.b(), t.c()), (1.0, 0.5, 0.2));
    }

    #[test]
    fn accepts_c_zero_boundary() {
        assert!(Triple::new(1.0, 0.5, 0.0).is_ok());
        assert!(Triple::new(1.0, 0.5, 0.5).is_err()); // but not a = b + c
    }

    #[test]
    fn rejects_sum_violation() {
        match Triple::new(1.0, 0.6, 0.5) {
            Err(Error::SumViolation { a, sum }) => {
                assert_eq!(a, 1.0);
                assert!((sum - 1.1).abs() < 1e-15);
            }
            other => panic!("expected SumViolation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_order_violations() {
        assert!(matches!(
            Triple::new(1.0, 1.2, 0.1),
            Err(Error::OrderViolation { .. })
        ));
        assert!(matches!(
            Triple::new(1.0, 0.0, 0.0),
            Err(Error::OrderViolation { .. })
        ));
        assert!(matches!(
            Triple::new(1.0, 0.5, -0.1),
            Err(Error::OrderViolation { .. })
        ));
        assert!(matches!(
            Triple::new(1.0, 0.3, 0.4),
            Err(Error::OrderViolation { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            Triple::new(f64::NAN, 0.5, 0.2),
            Err(Error::NonFinite { what: "a", .. })
        ));
        assert!(matches!(
            Triple::new(1.0, 0.5, f64::INFINITY),
            Err(Error::NonFinite { what: "c", .. })
        ));
    }

    #[test]
    fn ratios_of_reference_triple_are_exact() {
        let r = Triple::new(1.0, 0.5, 0.2).unwrap().ratios();
        assert_eq!(r.xi(), 0.7);
        assert_eq!(r.eta(), 0.3);
    }

    #[test]
    fn ratios_collapse_when_c_is_zero() {
        let r = Triple::new(1.0, 0.5, 0.0).unwrap().ratios();
        assert_eq!(r.xi(), 0.5);
        assert_eq!(r.eta(), 0.5);
    }

    #[test]
    fn ratios_are_scale_invariant() {
        let r = Triple::new(2.0, 1.0, 0.4).unwrap().ratios();
        assert_eq!(r.xi(), 0.7);
        assert_eq!(r.eta(), 0.3);
    }

    #[test]
    fn moduli_to_angles_reference_points() {
        let ap = ModuliPair::new(0.5, 0.0).unwrap().to_angles();
        assert!((ap.alpha() - FRAC_PI_4).abs() <= 2.0 * f64::EPSILON);
        assert_eq!(ap.eps(), 0.0);

        let m = AnglePair::new(FRAC_PI_6, FRAC_PI_6).unwrap().to_moduli();
        assert!((m.kappa() - 0.25).abs() <= 2.0 * f64::EPSILON);
        assert!((m.lambda() - 0.25).abs() <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn angle_round_trip_on_reference_moduli() {
        let m = ModuliPair::new(0.73562445, 0.05437555).unwrap();
        let back = m.to_angles().to_moduli();
        // 4 ulp at these magnitudes is ~4.4e-16 absolute
        assert!((back.kappa() - m.kappa()).abs() <= 4.0 * f64::EPSILON * m.kappa());
        assert!((back.lambda() - m.lambda()).abs() <= 4.0 * f64::EPSILON * m.kappa());
    }

    #[test]
    fn moduli_pair_validation() {
        assert!(ModuliPair::new(0.0, 0.0).is_ok());
        assert!(ModuliPair::new(0.9, 0.95).is_err());
        assert!(ModuliPair::new(1.0, 0.0).is_err());
        assert!(ModuliPair::new(0.5, -0.1).is_err());
    }

    #[test]
    fn ratio_pair_validation() {
        assert!(RatioPair::new(0.7, 0.3).is_ok());
        assert!(RatioPair::new(1.0, 0.3).is_err());
        assert!(RatioPair::new(0.3, 0.7).is_err());
        assert!(RatioPair::new(0.0, 0.0).is_err());
    }

    #[test]
    fn radicand_guard() {
        assert_eq!(clamp_radicand(0.25).unwrap(), 0.25);
        assert_eq!(clamp_radicand(-5e-15).unwrap(), 0.0);
        assert!(matches!(
            clamp_radicand(-1e-13),
            Err(Error::NegativeRadicand { .. })
        ));
    }
}
