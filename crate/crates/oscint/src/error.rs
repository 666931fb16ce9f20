//! Error type shared by all evaluation routes.

use thiserror::Error;

/// Errors produced by parsing, precondition checks and numerical routes.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Polynomial text that does not match the coefficient-list or monomial grammar.
    #[error("parse error: {0}")]
    Parse(String),

    /// A precondition violation (zero leading coefficient, pole of Γ, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative scheme did not reach its tolerance within the allowed steps.
    #[error("{what} did not converge within {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    /// Partial sums grow at the requested evaluation point.
    #[error("series diverges at x = {at}: last terms grow in magnitude")]
    Divergent { at: f64 },

    /// A hard work bound was hit before the requested accuracy.
    #[error("budget exhausted: {0}")]
    Budget(String),

    /// An intermediate value overflowed or became NaN.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// Neither the small-x nor the large-x route converges at the configured budgets.
    #[error("no route converges at u = {u}: q-series estimate {q_estimate:.3e}, asymptotic estimate {asym_estimate:.3e}")]
    DeadZone {
        u: f64,
        q_estimate: f64,
        asym_estimate: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
