//! Oscillatory integrals ∫₀ᵘ p(x)·e^{iφ(x)} dx for real polynomials p and φ,
//! at any finite upper limit and at u = ∞.
//!
//! Coefficient generation (series reversion, Neumann expansion tables) runs
//! in exact rational arithmetic; evaluation runs in complex double precision.
//! The core series and polynomial types are generic over the scalar field so
//! the same code drives both modes.
//!
//! Routes:
//! - pure powers x^m e^{icx^n}: Taylor/Kummer series, incomplete-gamma
//!   continued fraction, Neumann-Bessel expansion, closed-form complete
//!   integrals;
//! - general phases: reductions (constant phase, parity substitution,
//!   partial-integration degree lowering, completing the square), the
//!   q-polynomial iteration for small u, the asymptotic Laurent tail plus
//!   the complete integral for large u;
//! - an adaptive quadrature oracle, used only for validation.

pub mod error;
pub mod general;
pub mod oracle;
pub mod poly;
pub mod power;
pub mod reference;
pub mod reversion;
pub mod sampling;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use general::{
    complete_general, evaluate, laurent_coeffs, match_infinity, ode_residual, q_iterate,
    AsymptoticSeries, CompleteIntegral, Diagnostics, EvalConfig, IntegralResult, Method,
    ProblemSpec, QSeries, UpperLimit,
};
pub use oracle::{oracle_integrate, OracleResult};
pub use poly::Polynomial;
pub use power::{
    complete_power, gamma_cf, kummer_v, neumann_coeffs, neumann_eval, taylor_partial,
    NeumannExpansion, PowerKernelSpec,
};
pub use reversion::{
    local_coeffs, local_expansion, revert_multinomial, revert_perturbative, LocalExpansionCoeffs,
    LocalExpansionKind, ReversionFamily, ReversionMethod, ReversionResult,
};
pub use scalar::{ComplexScalar, Scalar};
pub use series::{ComplexSeries, Series, VariableKind};

/// Complex double, the evaluation scalar.
pub use num_complex::Complex64;

/// Exact rational scalar for coefficient generation.
pub type Rational = num_rational::BigRational;

/// Exact complex scalar (Gaussian rational) for bit-exact residual checks.
pub type GaussianRational = num_complex::Complex<Rational>;

/// Truncated series with exact rational coefficients.
pub type RationalSeries = Series<Rational>;

/// Truncated series with exact Gaussian-rational coefficients.
pub type GaussianSeries = Series<GaussianRational>;

/// Polynomial with exact rational coefficients.
pub type RationalPolynomial = Polynomial<Rational>;
