//! Cross-verification of the five independent routes to a0/M:
//! the iteration itself, both integral forms, the double series, and the
//! reduced single series. Pairwise residuals quantify their agreement.

use crate::error::Result;
use crate::extended::{extended_mean, moduli_from_triple, MeanResult};
use crate::hypergeom::{appell_f1, f1_reduce, AppellF1Params, SeriesBudget};
use crate::quadrature::{integral_theta_form, integral_u_form, QuadratureConfig};
use crate::types::Triple;

/// Residuals above this threshold fail verification. It is dominated by
/// series and quadrature error, not by the iteration itself.
pub const VERIFY_THRESHOLD: f64 = 1e-9;

/// The five evaluations of a0/M, one per route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RouteValues {
    /// a0 divided by the iterated mean.
    pub iteration: f64,
    /// Quadrature of the (kappa, lambda) integral.
    pub u_form: f64,
    /// Quadrature of the (a, b, c) integral.
    pub theta_form: f64,
    /// The double series at (kappa, lambda).
    pub appell_f1: f64,
    /// The reduced single series at (kappa - lambda)/(1 - lambda).
    pub reduced_2f1: f64,
}

impl RouteValues {
    fn pairs(&self) -> [(&'static str, f64, f64); 10] {
        let (it, u, th, f1, red) = (
            self.iteration,
            self.u_form,
            self.theta_form,
            self.appell_f1,
            self.reduced_2f1,
        );
        [
            ("iteration_vs_u_form", it, u),
            ("iteration_vs_theta_form", it, th),
            ("iteration_vs_appell_f1", it, f1),
            ("iteration_vs_reduced_2f1", it, red),
            ("u_form_vs_theta_form", u, th),
            ("u_form_vs_appell_f1", u, f1),
            ("u_form_vs_reduced_2f1", u, red),
            ("theta_form_vs_appell_f1", th, f1),
            ("theta_form_vs_reduced_2f1", th, red),
            ("appell_f1_vs_reduced_2f1", f1, red),
        ]
    }
}

/// Result of running every route for one triple.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub mean: MeanResult,
    pub values: RouteValues,
    /// Pairwise relative residuals, in a fixed canonical order.
    pub residuals: Vec<(&'static str, f64)>,
}

impl CrossCheck {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, &(_, r)| m.max(r))
    }

    /// The pair with the largest residual.
    pub fn worst_pair(&self) -> (&'static str, f64) {
        self.residuals
            .iter()
            .copied()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("residual list is never empty")
    }

    pub fn passed(&self) -> bool {
        self.max_residual() <= VERIFY_THRESHOLD
    }
}

/// Evaluate a0/M along all five routes and report pairwise residuals.
pub fn cross_check(t: Triple, tol: f64) -> Result<CrossCheck> {
    let mean = extended_mean(t, tol)?;
    let moduli = moduli_from_triple(t)?;
    let quad_cfg = QuadratureConfig::default();
    let params = AppellF1Params::new(0.5, 0.5, 0.5, 1.0)?;

    let values = RouteValues {
        iteration: t.a() / mean.mean,
        u_form: integral_u_form(moduli, quad_cfg)?,
        theta_form: integral_theta_form(t, quad_cfg)?,
        appell_f1: appell_f1(
            params,
            moduli.kappa(),
            moduli.lambda(),
            SeriesBudget::double_series(),
        )?,
        reduced_2f1: f1_reduce(
            params,
            moduli.kappa(),
            moduli.lambda(),
            SeriesBudget::default(),
        )?,
    };
    let residuals = values
        .pairs()
        .iter()
        .map(|&(name, lhs, rhs)| (name, (lhs - rhs).abs() / lhs.abs().max(rhs.abs())))
        .collect();
    Ok(CrossCheck {
        mean,
        values,
        residuals,
    })
}
