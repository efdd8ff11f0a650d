//! Crate-wide error type. Every variant names the constraint it reports.

use std::fmt;

use crate::extended::IterationStep;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone)]
pub enum Error {
    /// An input was NaN or infinite.
    NonFinite { what: &'static str, value: f64 },
    /// The ordering constraints a > b > 0, b >= c >= 0 were violated.
    OrderViolation { constraint: String },
    /// The strict sum constraint a > b + c was violated.
    SumViolation { a: f64, sum: f64 },
    /// An argument fell outside the domain of the requested operation.
    DomainError { reason: String },
    /// A parameter combination is invalid for the requested operation.
    ParamError { reason: String },
    /// A radicand went negative beyond the rounding guard; signals an
    /// invariant breach upstream rather than plain rounding noise.
    NegativeRadicand { value: f64 },
    /// A quadrature node saw a non-positive radicand; the integrand is
    /// only defined for triples with a > b + c.
    NonPositiveRadicand { theta: f64, value: f64 },
    /// An iteration failed to converge within its cap. For the
    /// three-variable mean the steps taken so far are attached.
    NonConvergence {
        context: &'static str,
        limit: usize,
        trace: Vec<IterationStep>,
    },
    /// A series did not meet its tolerance within the term budget.
    SlowConvergence { terms: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite { what, value } => {
                write!(f, "non-finite input: {what} = {value}")
            }
            Error::OrderViolation { constraint } => {
                write!(f, "order violation: {constraint}")
            }
            Error::SumViolation { a, sum } => {
                write!(
                    f,
                    "sum violation: a must exceed b + c (a = {a}, b + c = {sum})"
                )
            }
            Error::DomainError { reason } => write!(f, "domain error: {reason}"),
            Error::ParamError { reason } => write!(f, "parameter error: {reason}"),
            Error::NegativeRadicand { value } => {
                write!(f, "negative radicand {value} exceeds the rounding guard")
            }
            Error::NonPositiveRadicand { theta, value } => {
                write!(f, "non-positive radicand {value} at theta = {theta}")
            }
            Error::NonConvergence { context, limit, .. } => {
                write!(f, "{context} did not converge within {limit} iterations")
            }
            Error::SlowConvergence { terms } => {
                write!(f, "series still above tolerance after {terms} terms")
            }
        }
    }
}

impl std::error::Error for Error {}
