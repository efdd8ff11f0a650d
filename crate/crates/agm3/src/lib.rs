//! A three-variable extension of the arithmetic-geometric mean.
//!
//! The classic mean iterates a' = (a + b)/2, b' = sqrt(a*b) to a common
//! limit. This crate implements the coupled three-variable scheme
//! (a, b, c) -> (a', b', c') that contracts to a = b with c = 0, and
//! evaluates its limit M(a0, b0, c0) together with four independent
//! confirmations of the identity
//!
//! ```text
//! a0 / M(a0, b0, c0)
//!   = (2 a0/pi) int_0^(pi/2) dtheta
//!         / sqrt(a0^2 cos^2 + b0^2 sin^2 - c0^2 cos^2 sin^2)
//!   = (1/pi) int_0^1 du / sqrt(u(1-u)(1 - kappa u)(1 - lambda u))
//!   = F1(1/2, {1/2, 1/2}, 1; kappa, lambda)
//!   = (1 - lambda)^(-1/2) 2F1(1/2, 1/2, 1; (kappa - lambda)/(1 - lambda))
//! ```
//!
//! with (1 - kappa)(1 - lambda) = (b0/a0)^2 and kappa lambda = (c0/a0)^2.
//! Setting c0 = 0 recovers the classic mean and the familiar relation
//! between it and the complete elliptic integral K.
//!
//! ```
//! use agm3::{extended_mean, Triple, DEFAULT_TOL};
//!
//! let t = Triple::new(1.0, 0.5, 0.2).unwrap();
//! let result = extended_mean(t, DEFAULT_TOL).unwrap();
//! assert_eq!(result.mean, 0.7250921711406717);
//! assert!(result.iterations <= 10);
//! ```
//!
//! All operations are pure functions over immutable `Copy` values and are
//! safe to call concurrently; the quadrature node cache is write-once.
//! Arithmetic is plain IEEE-754 binary64 throughout.

pub mod agm;
pub mod error;
pub mod extended;
pub mod hypergeom;
pub mod output;
pub mod quadrature;
pub mod types;
pub mod verify;

pub use agm::{agm_mean, elliptic_k, landen_descend, EllipticModulus};
pub use error::{Error, Result};
pub use extended::{
    extended_mean, moduli_from_triple, next_moduli, next_moduli_via_angles, step, IterationStep,
    MeanResult,
};
pub use hypergeom::{
    appell_f1, f1_pde_residual, f1_reduce, gauss_2f1, pochhammer, AppellF1Params, Gauss2F1Params,
    SeriesBudget,
};
pub use output::{format_float, trace_rows, OutputRecord, TraceRow};
pub use quadrature::{gauss_legendre, integral_theta_form, integral_u_form, QuadratureConfig};
pub use types::{AnglePair, ModuliPair, RatioPair, Triple};
pub use verify::{cross_check, CrossCheck, RouteValues, VERIFY_THRESHOLD};

/// Default relative tolerance for the mean iterations: 4 machine epsilon.
pub const DEFAULT_TOL: f64 = 4.0 * f64::EPSILON;

/// Iteration cap for both means; quadratic convergence makes this
/// generous for binary64.
pub const MAX_ITERATIONS: usize = 64;
