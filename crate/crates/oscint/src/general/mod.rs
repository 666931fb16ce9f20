//! Full polynomial-phase machinery: reductions, the q-polynomial iteration,
//! asymptotic Laurent coefficients, the complete integral, and the top-level
//! evaluator that picks a route per subproblem.

pub mod complete;
pub mod laurent;
pub mod qseries;
pub mod reduce;

pub use complete::{asymptotic_tail_at, complete_general, match_infinity, CompleteIntegral};
pub use laurent::{laurent_coeffs, laurent_for_poly, AsymptoticSeries};
pub use qseries::{ode_residual, q_from_first, q_iterate, QSeries};
pub use reduce::{reduce, ReducedProblem, WeightedProblem};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::power::{complete_power, eval_power_kernel, PowerKernelSpec, PowerRoute};
use num_complex::Complex64;
use num_traits::Zero;

/// Upper limit of integration: a finite real number or ∞.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum UpperLimit {
    Finite(f64),
    Infinite,
}

/// ∫₀ᵘ p(x)·e^{iφ(x)} dx with polynomial amplitude and phase.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub p: Polynomial<f64>,
    pub phi: Polynomial<f64>,
    pub limit: UpperLimit,
}

impl ProblemSpec {
    pub fn new(p: Polynomial<f64>, phi: Polynomial<f64>, limit: UpperLimit) -> Result<Self> {
        if phi.degree().unwrap_or(0) < 1 {
            return Err(Error::Domain("phase polynomial must have degree ≥ 1".into()));
        }
        if p.is_zero() {
            return Err(Error::Domain("amplitude polynomial must not be zero".into()));
        }
        if let UpperLimit::Finite(u) = limit {
            if !u.is_finite() {
                return Err(Error::Domain(format!("upper limit must be finite, got {u}")));
            }
        }
        Ok(ProblemSpec { p, phi, limit })
    }
}

/// Truncation orders, tolerances and the transition-window policy.
#[derive(Clone, Copy, Debug)]
pub struct EvalConfig {
    /// q-iteration depth K: the sum runs over q₁ … q_{2K+1}.
    pub q_depth: usize,
    /// Laurent order T of the asymptotic tail.
    pub laurent_order: usize,
    /// Term budget J for the complete-integral series.
    pub complete_terms: usize,
    /// Target tolerance.
    pub tol: f64,
    /// Scan window for the matching estimate.
    pub window: (f64, f64),
    /// Geometric grid size on the scan window.
    pub window_points: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            q_depth: 40,
            laurent_order: 12,
            complete_terms: 200,
            tol: 1e-10,
            window: (0.8, 3.0),
            window_points: 24,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.q_depth == 0 || self.laurent_order == 0 || self.complete_terms == 0 {
            return Err(Error::Domain("config orders must be positive".into()));
        }
        if !(self.tol >= 1e-14) {
            return Err(Error::Domain("tolerance must be at least 1e-14".into()));
        }
        if !(self.window.0 > 0.0 && self.window.1 > self.window.0) || self.window_points < 2 {
            return Err(Error::Domain("window must satisfy 0 < w₀ < w₁, ≥ 2 points".into()));
        }
        Ok(())
    }
}

/// Route that produced an integral value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Small-u route e^{iφ(u)}·Σ q_{2k+1}(u) (for power kernels: the Taylor
    /// or Kummer series).
    TaylorQ,
    /// Large-u route I(∞) + e^{iφ(u)}·Σ h_j u^{-j} (for power kernels: the
    /// incomplete-gamma continued fraction anchored at ∞).
    AsymptoticMatch,
    /// Closed form at u = ∞.
    CompleteClosedForm,
    /// Assembled from several reduced subproblems.
    ReducedComposite,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::TaylorQ => "taylor_q",
            Method::AsymptoticMatch => "asymptotic_match",
            Method::CompleteClosedForm => "complete_closed_form",
            Method::ReducedComposite => "reduced_composite",
        };
        write!(f, "{s}")
    }
}

/// Route-specific counters, purely informational.
#[derive(Clone, Copy, Debug, Default)]
pub struct Diagnostics {
    pub subproblems: usize,
    pub q_terms: usize,
    pub laurent_terms: usize,
    pub complete_terms: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct IntegralResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

fn is_pure_power(phi: &Polynomial<f64>) -> bool {
    match phi.degree() {
        Some(d) => phi.coeffs().iter().take(d).all(|c| *c == 0.0),
        None => false,
    }
}

/// Evaluate the integral, reducing first and then dispatching each
/// subproblem to its best route.
pub fn evaluate(spec: &ProblemSpec, cfg: &EvalConfig) -> Result<IntegralResult> {
    cfg.validate()?;
    if let UpperLimit::Finite(u) = spec.limit {
        if u == 0.0 {
            return Ok(IntegralResult {
                value: Complex64::zero(),
                error_estimate: 0.0,
                method: Method::TaylorQ,
                diagnostics: Diagnostics::default(),
            });
        }
    }
    let red = reduce::reduce(spec)?;
    let mut diag = Diagnostics {
        subproblems: red.subproblems.len(),
        ..Default::default()
    };
    let mut value = red.boundary;
    let mut est = f64::EPSILON * red.boundary.norm();
    let mut inner_method = None;
    for wp in &red.subproblems {
        let (v, e, m) = eval_subproblem(&wp.spec, cfg, &mut diag)?;
        value += wp.weight * v;
        est += wp.weight.norm() * e + f64::EPSILON * (wp.weight * v).norm();
        inner_method = Some(m);
    }
    value *= red.prefactor;
    if !value.is_finite() || !est.is_finite() {
        return Err(Error::NonFinite("evaluate assembly"));
    }
    let method = match inner_method {
        Some(m) if red.subproblems.len() == 1 && red.boundary.is_zero() => m,
        _ => Method::ReducedComposite,
    };
    Ok(IntegralResult {
        value,
        error_estimate: est,
        method,
        diagnostics: diag,
    })
}

fn eval_subproblem(
    spec: &ProblemSpec,
    cfg: &EvalConfig,
    diag: &mut Diagnostics,
) -> Result<(Complex64, f64, Method)> {
    debug_assert!(spec.phi.coeff(0) == 0.0, "reduce strips the constant term");
    match spec.limit {
        UpperLimit::Infinite => eval_infinite(spec, cfg, diag),
        UpperLimit::Finite(u) => {
            if u == 0.0 {
                return Ok((Complex64::zero(), 0.0, Method::TaylorQ));
            }
            if is_pure_power(&spec.phi) {
                eval_power_sum(spec, u)
            } else {
                eval_general_finite(spec, u, cfg, diag)
            }
        }
    }
}

fn eval_infinite(
    spec: &ProblemSpec,
    cfg: &EvalConfig,
    diag: &mut Diagnostics,
) -> Result<(Complex64, f64, Method)> {
    if is_pure_power(&spec.phi) {
        let n = spec.phi.degree().unwrap() as u32;
        let c = spec.phi.coeff(n as usize);
        let mut value = Complex64::zero();
        let mut est = 0.0;
        for (m, pk) in spec.p.coeffs().iter().enumerate() {
            if *pk == 0.0 {
                continue;
            }
            let v = complete_power(&PowerKernelSpec::new(m as u32, n, c)?)?;
            value += pk * v;
            est += (pk * v).norm() * 1e-15;
        }
        return Ok((value, est, Method::CompleteClosedForm));
    }
    let ci = complete_general(&spec.p, &spec.phi, cfg.complete_terms, cfg.tol)?;
    diag.complete_terms += ci.terms_used;
    Ok((ci.value, ci.tail_estimate, Method::CompleteClosedForm))
}

fn eval_power_sum(spec: &ProblemSpec, u: f64) -> Result<(Complex64, f64, Method)> {
    let n = spec.phi.degree().unwrap() as u32;
    let c = spec.phi.coeff(n as usize);
    let mut value = Complex64::zero();
    let mut est = 0.0;
    let mut route = PowerRoute::Taylor;
    for (m, pk) in spec.p.coeffs().iter().enumerate() {
        if *pk == 0.0 {
            continue;
        }
        let (kv, r) = eval_power_kernel(&PowerKernelSpec::new(m as u32, n, c)?, u)?;
        value += pk * kv.value;
        est += pk.abs() * kv.error_estimate;
        route = r;
    }
    let method = match route {
        PowerRoute::Taylor => Method::TaylorQ,
        PowerRoute::GammaCf => Method::AsymptoticMatch,
    };
    Ok((value, est, method))
}

fn eval_general_finite(
    spec: &ProblemSpec,
    u: f64,
    cfg: &EvalConfig,
    diag: &mut Diagnostics,
) -> Result<(Complex64, f64, Method)> {
    let pc = spec.p.map(|c| Complex64::new(*c, 0.0));
    let phic = spec.phi.map(|c| Complex64::new(*c, 0.0));
    let qs = q_iterate(&pc, &phic, cfg.q_depth);
    let qd = qs.eval_with_diagnostics(u);
    let q_est = qd.error_estimate();
    let q_val = Complex64::new(0.0, spec.phi.eval(&u)).exp() * qd.sum;

    let mut asym_val = Complex64::zero();
    let mut asym_est = f64::INFINITY;
    let mut asym_terms = 0usize;
    let mut complete_used = 0usize;
    if u > 0.0 {
        let l = spec.phi.degree().unwrap();
        if let Ok(ci) = complete_general(&spec.p, &spec.phi, cfg.complete_terms, cfg.tol) {
            if let Ok(h) = laurent_for_poly(&spec.p, &spec.phi, cfg.laurent_order + l + 1) {
                let (hsum, omitted) = asymptotic_tail_at(&h, u, cfg.laurent_order);
                let phase = Complex64::new(0.0, spec.phi.eval(&u)).exp();
                asym_val = ci.value + phase * hsum;
                // double the omitted-term heuristic: the remainder of a
                // truncated asymptotic series is only of the ORDER of the
                // terms at the cut
                asym_est = ci.tail_estimate
                    + 2.0 * omitted
                    + f64::EPSILON * (ci.value.norm() + hsum.norm());
                asym_terms = (1..=cfg.laurent_order).filter(|&j| !h.coeff(j).is_zero()).count();
                complete_used = ci.terms_used;
            }
        }
    }

    if q_est.is_finite() && q_est <= asym_est {
        diag.q_terms += cfg.q_depth + 1;
        Ok((q_val, q_est, Method::TaylorQ))
    } else if asym_est.is_finite() {
        diag.laurent_terms += asym_terms;
        diag.complete_terms += complete_used;
        Ok((asym_val, asym_est, Method::AsymptoticMatch))
    } else {
        Err(Error::DeadZone {
            u,
            q_estimate: q_est,
            asym_estimate: asym_est,
        })
    }
}
