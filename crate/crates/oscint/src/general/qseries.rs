//! The polynomial sequence q₁, q₃, q₅, … whose sum solves p = iqφ' + q' with
//! q(0) = 0, built by repeated integration against φ':
//!
//!   q₁ = ∫₀ p,   q_{2k+1} = −i ∫₀ q_{2k−1} φ'.
//!
//! Then I_{p,φ}(u) = e^{iφ(u)} Σ q_{2k+1}(u) wherever the partial sums settle.

use crate::error::{Error, Result};
use crate::general::laurent::scaled_inverse_residual;
use crate::poly::Polynomial;
use crate::scalar::ComplexScalar;
use crate::series::{ComplexSeries, Series, VariableKind};
use num_complex::Complex64;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct QSeries<T: ComplexScalar> {
    /// q₁, q₃, …, q_{2K+1}
    pub partials: Vec<Polynomial<T>>,
    pub phi: Polynomial<T>,
}

/// Standard seeding with q₁ = ∫p.
pub fn q_iterate<T: ComplexScalar>(
    p: &Polynomial<T>,
    phi: &Polynomial<T>,
    depth: usize,
) -> QSeries<T> {
    q_from_first(p.antiderivative(), phi, depth)
}

/// Iteration from an explicit first polynomial; seeding with a constant ε
/// (skipping the initial integration) builds ε·e^{−iφ} term by term.
pub fn q_from_first<T: ComplexScalar>(
    first: Polynomial<T>,
    phi: &Polynomial<T>,
    depth: usize,
) -> QSeries<T> {
    let dphi = phi.derivative();
    let minus_i = -T::imag_unit();
    let mut partials = Vec::with_capacity(depth + 1);
    partials.push(first);
    for _ in 0..depth {
        let prev = partials.last().unwrap();
        let next = (prev * &dphi).antiderivative().scale(&minus_i);
        partials.push(next);
    }
    QSeries {
        partials,
        phi: phi.clone(),
    }
}

/// Point evaluation diagnostics of the partial sums.
#[derive(Clone, Copy, Debug)]
pub struct QEval {
    pub sum: Complex64,
    /// magnitude of the last added term
    pub last_term: f64,
    /// largest magnitude among the final three terms; a single term can dip
    /// far below the tail size at a sign crossing of the oscillation
    pub tail_scale: f64,
    /// Σ |q_{2k+1}(x)|, a cancellation measure for the rounding floor
    pub term_abs_sum: f64,
    /// the final three terms grow in magnitude
    pub tail_growing: bool,
}

impl QEval {
    /// Truncation plus rounding floor; infinite when the tail grows.
    pub fn error_estimate(&self) -> f64 {
        if self.tail_growing || !self.sum.is_finite() {
            return f64::INFINITY;
        }
        3.0 * self.tail_scale + f64::EPSILON * self.term_abs_sum
    }
}

impl QSeries<Complex64> {
    pub fn eval_with_diagnostics(&self, x: f64) -> QEval {
        let xc = Complex64::new(x, 0.0);
        let mut sum = Complex64::zero();
        let mut abs_sum = 0.0;
        let mut mags = Vec::with_capacity(self.partials.len());
        for q in &self.partials {
            let v = q.eval(&xc);
            sum += v;
            abs_sum += v.norm();
            mags.push(v.norm());
        }
        let n = mags.len();
        let tail_growing = n >= 3 && mags[n - 1] > mags[n - 2] && mags[n - 2] > mags[n - 3];
        let tail_scale = mags[n.saturating_sub(3)..]
            .iter()
            .fold(0.0f64, |a, b| a.max(*b));
        QEval {
            sum,
            last_term: mags.last().copied().unwrap_or(0.0),
            tail_scale,
            term_abs_sum: abs_sum,
            tail_growing: tail_growing || !sum.is_finite(),
        }
    }

    /// e^{iφ(u)}·Σ q_{2k+1}(u), the integral value on the convergence window.
    pub fn integral_at(&self, u: f64) -> Result<(Complex64, f64)> {
        let d = self.eval_with_diagnostics(u);
        if d.tail_growing {
            return Err(Error::Divergent { at: u });
        }
        let ph = self.phi.eval(&Complex64::new(u, 0.0));
        let phase = (Complex64::new(0.0, 1.0) * ph).exp();
        Ok((phase * d.sum, d.error_estimate()))
    }
}

impl<T: ComplexScalar> QSeries<T> {
    pub fn depth(&self) -> usize {
        self.partials.len() - 1
    }

    pub fn sum_polynomial(&self) -> Polynomial<T> {
        let mut acc = Polynomial::zero();
        for q in &self.partials {
            acc = &acc + q;
        }
        acc
    }

    pub fn sum_series(&self, order: usize) -> Series<T> {
        Series::from_polynomial(&self.sum_polynomial(), order)
    }

    /// The truncated sum solves the equation exactly up to −i·φ'·q_{last}, so
    /// the residual coefficients vanish through this order.
    pub fn guaranteed_residual_order(&self) -> usize {
        let dphi_val = self.phi.derivative().valuation().unwrap_or(0);
        let last_val = self
            .partials
            .last()
            .and_then(|q| q.valuation())
            .unwrap_or(0);
        (dphi_val + last_val).saturating_sub(1)
    }
}

/// Residual p − iqφ' − q' of the defining differential equation.
///
/// For a power-of-x series the residual is returned in x. For an
/// inverse-power series it is returned scaled by X^{deg φ'}, a power series
/// in X = 1/x (p must then be a monomial x^m with m < deg φ − 1).
pub fn ode_residual(
    q: &ComplexSeries,
    p: &Polynomial<f64>,
    phi: &Polynomial<f64>,
) -> Result<ComplexSeries> {
    let pc = p.map(|c| Complex64::new(*c, 0.0));
    let phic = phi.map(|c| Complex64::new(*c, 0.0));
    match q.kind() {
        VariableKind::PowerOfX => {
            let s = ode_residual_direct(q.series(), &pc, &phic);
            ComplexSeries::new(s, VariableKind::PowerOfX)
        }
        VariableKind::PowerOfInverseX => {
            let m = match (p.valuation(), p.degree()) {
                (Some(v), Some(d)) if v == d => v,
                _ => {
                    return Err(Error::Domain(
                        "inverse-variable residual needs a monomial amplitude".into(),
                    ))
                }
            };
            let s = scaled_inverse_residual(q.series(), m, &phic)?;
            ComplexSeries::new(s, VariableKind::PowerOfX)
        }
    }
}

/// p − iqφ' − q' over any complex scalar, as series in x.
pub fn ode_residual_direct<T: ComplexScalar>(
    q: &Series<T>,
    p: &Polynomial<T>,
    phi: &Polynomial<T>,
) -> Series<T> {
    let order = q.order().saturating_sub(1);
    let dphi = Series::from_polynomial(&phi.derivative(), order);
    let p_series = Series::from_polynomial(p, order);
    let iq_dphi = q.truncate(order).mul(&dphi).scale(&T::imag_unit());
    p_series.sub(&iq_dphi).sub(&q.derivative())
}
