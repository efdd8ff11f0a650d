//! The three-variable iteration (a, b, c) -> (a', b', c') and its common
//! limit M(a0, b0, c0).
//!
//! One step works through the moduli of the associated integral:
//!
//! ```text
//! xi  = (b + c)/a                 eta = (b - c)/a
//! kappa  = (1 - xi eta + sqrt((1 - xi^2)(1 - eta^2))) / 2
//! lambda = (1 - xi eta - sqrt((1 - xi^2)(1 - eta^2))) / 2
//! kappa'  = ((1 - xi eta) / ((1 + xi)(1 + eta)))^2
//! lambda' = (xi - eta)^2 / (2 (1 + xi)(1 + eta)(xi + eta))
//! a' = a (sqrt(1 - lambda) + sqrt(1 - kappa)) / (2 sqrt(1 - lambda'))
//! b' = a' sqrt((1 - kappa')(1 - lambda'))
//! c' = a' sqrt(kappa' lambda')
//! ```
//!
//! The sequence contracts to a = b with c = 0; the limit M is the common
//! value. Setting c = 0 collapses every step to the classic two-variable
//! rule a' = (a + b)/2, b' = sqrt(a*b).

use crate::agm::sanitize_tol;
use crate::error::{Error, Result};
use crate::types::{clamp_radicand, ModuliPair, RatioPair, Triple};
use crate::MAX_ITERATIONS;

/// One recorded step of the iteration: the state it started from, the
/// moduli of that state, and the moduli the next state was built from.
///
/// Each step satisfies (1 - kappa)(1 - lambda) = (b/a)^2 and
/// kappa*lambda = (c/a)^2 for its own triple, up to rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationStep {
    pub index: usize,
    pub triple: Triple,
    pub moduli: ModuliPair,
    pub next_moduli: ModuliPair,
}

impl IterationStep {
    /// Residuals of the two moduli-product identities for this step:
    /// the first relative to (b/a)^2, the second absolute.
    pub fn identity_residuals(&self) -> (f64, f64) {
        let ba = self.triple.b() / self.triple.a();
        let ca = self.triple.c() / self.triple.a();
        let product = (1.0 - self.moduli.kappa()) * (1.0 - self.moduli.lambda());
        let rel = (product - ba * ba).abs() / (ba * ba);
        let abs = (self.moduli.kappa() * self.moduli.lambda() - ca * ca).abs();
        (rel, abs)
    }
}

/// The converged limit together with the full per-step trace.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanResult {
    /// The common limit M = (a + b)/2 of the final state.
    pub mean: f64,
    /// Number of steps taken before the stopping rule fired.
    pub iterations: usize,
    /// One entry per executed step, in order.
    pub trace: Vec<IterationStep>,
    pub converged: bool,
    /// The state that satisfied the stopping rule.
    pub final_state: Triple,
}

/// The moduli (kappa, lambda) of the integral associated with a triple.
///
/// kappa takes the + root and lambda the - root, so kappa >= lambda always.
pub fn moduli_from_triple(t: Triple) -> Result<ModuliPair> {
    moduli_from_ratios(t.ratios())
}

fn moduli_from_ratios(r: RatioPair) -> Result<ModuliPair> {
    let (xi, eta) = (r.xi(), r.eta());
    let half_sum = 1.0 - xi * eta;
    let root = clamp_radicand((1.0 - xi * xi) * (1.0 - eta * eta))?.sqrt();
    let kappa = (half_sum + root) / 2.0;
    // rounding can push the - root a hair below zero when xi == eta
    let lambda = clamp_radicand((half_sum - root) / 2.0)?;
    Ok(ModuliPair::from_parts(kappa, lambda))
}

/// The moduli of the next iterate, from the same (xi, eta).
///
/// lambda' is exactly zero when xi = eta (the classic-mean line).
pub fn next_moduli(r: RatioPair) -> Result<ModuliPair> {
    let (xi, eta) = (r.xi(), r.eta());
    if xi + eta == 0.0 {
        return Err(Error::DomainError {
            reason: "xi + eta must be positive".to_string(),
        });
    }
    let q = (1.0 - xi * eta) / ((1.0 + xi) * (1.0 + eta));
    let kappa = q * q;
    let num = (xi - eta) * (xi - eta);
    let den = 2.0 * (1.0 + xi) * (1.0 + eta) * (xi + eta);
    Ok(ModuliPair::from_parts(kappa, num / den))
}

/// The same moduli update expressed through the angle parametrization:
///
/// ```text
/// sin(alpha') = (tan^2((alpha + eps)/2) + tan^2((alpha - eps)/2)) / 2
/// tan^2(eps') = tan^2(alpha')
///             - sec^2(alpha') tan^2((alpha + eps)/2) tan^2((alpha - eps)/2)
/// ```
///
/// Used as an internal oracle for [`next_moduli`]; the two agree within
/// 1e-11 across the shared domain. Requires kappa > 0 (so alpha is a
/// genuine angle) and kappa + lambda <= 1 (so the pair corresponds to a
/// triple with b >= c, i.e. alpha + eps <= pi/2).
pub fn next_moduli_via_angles(m: ModuliPair) -> Result<ModuliPair> {
    if m.kappa() == 0.0 {
        return Err(Error::DomainError {
            reason: "angle parametrization requires kappa > 0".to_string(),
        });
    }
    if m.kappa() + m.lambda() > 1.0 + 1e-15 {
        return Err(Error::DomainError {
            reason: format!(
                "kappa + lambda must not exceed 1 (got {})",
                m.kappa() + m.lambda()
            ),
        });
    }
    let angles = m.to_angles();
    let (alpha, eps) = (angles.alpha(), angles.eps());
    let tan_plus = {
        let t = ((alpha + eps) / 2.0).tan();
        t * t
    };
    let tan_minus = {
        let t = ((alpha - eps) / 2.0).tan();
        t * t
    };
    let sin_next = (tan_plus + tan_minus) / 2.0;
    let kappa = sin_next * sin_next;
    let cos2 = 1.0 - kappa;
    // both terms share the 1/cos^2 factor; with eps = 0 they cancel exactly
    let tan2_eps = clamp_radicand(kappa / cos2 - (tan_plus * tan_minus) / cos2)?;
    let lambda = tan2_eps / (1.0 + tan2_eps);
    Ok(ModuliPair::from_parts(kappa, lambda))
}

/// One full iteration step together with the moduli it used.
fn step_parts(t: Triple) -> Result<(Triple, ModuliPair, ModuliPair)> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    if c == 0.0 {
        // classic-mean path: lambda == 0 throughout, so the update
        // collapses to a' = (a + b)/2, b' = sqrt(a*b)
        let x = b / a;
        let kappa = 1.0 - x * x;
        let ratio = (1.0 - x) / (1.0 + x);
        let next = Triple::from_iterate((a + b) / 2.0, (a * b).sqrt(), 0.0);
        return Ok((
            next,
            ModuliPair::from_parts(kappa, 0.0),
            ModuliPair::from_parts(ratio * ratio, 0.0),
        ));
    }
    let ratios = t.ratios();
    let moduli = moduli_from_ratios(ratios)?;
    let next = next_moduli(ratios)?;
    let scale_num = (1.0 - moduli.lambda()).sqrt() + (1.0 - moduli.kappa()).sqrt();
    let scale_den = 2.0 * (1.0 - next.lambda()).sqrt();
    let a1 = a * scale_num / scale_den;
    let b1 = a1 * ((1.0 - next.kappa()) * (1.0 - next.lambda())).sqrt();
    let c1 = a1 * (next.kappa() * next.lambda()).sqrt();
    Ok((Triple::from_iterate(a1, b1, c1), moduli, next))
}

/// Advance the iteration by one step.
///
/// The output contracts toward the limit: b < a' < a. Iterates may reach
/// the a = b, c = 0 closure and can be stepped again safely there.
pub fn step(t: Triple) -> Result<Triple> {
    step_parts(t).map(|(next, _, _)| next)
}

/// Iterate to convergence and return the limit with its trace.
///
/// Stops once |a - b| <= tol * a and c <= tol * a, reporting
/// mean = (a + b)/2 of the final state. Tolerances below 4 eps are raised
/// to 4 eps. Fails with the trace attached if 64 steps do not suffice
/// (unreachable for valid input).
pub fn extended_mean(t: Triple, tol: f64) -> Result<MeanResult> {
    let tol = sanitize_tol(tol);
    let mut current = t;
    let mut trace: Vec<IterationStep> = Vec::new();
    for n in 0..=MAX_ITERATIONS {
        let (a, b, c) = (current.a(), current.b(), current.c());
        if (a - b).abs() <= tol * a && c <= tol * a {
            return Ok(MeanResult {
                mean: (a + b) / 2.0,
                iterations: n,
                trace,
                converged: true,
                final_state: current,
            });
        }
        if n == MAX_ITERATIONS {
            break;
        }
        let (next, moduli, next_moduli) = step_parts(current)?;
        trace.push(IterationStep {
            index: n,
            triple: current,
            moduli,
            next_moduli,
        });
        current = next;
    }
    Err(Error::NonConvergence {
        context: "three-variable mean",
        limit: MAX_ITERATIONS,
        trace,
    })
}
