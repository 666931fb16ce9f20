//! Laurent coefficients of the auxiliary function q(x) as x → ∞.
//!
//! q solves p = iqφ' + q' with p = x^m; the ansatz q = Σ_{t≥1} h_t x^{-t}
//! gives, after comparing powers of X = 1/x,
//!
//!   i·l·α_l·h_t = δ_{t, l-1-m} − i Σ_{j=1}^{l-1} j α_j h_{t-l+j} + (t−l) h_{t−l}
//!
//! with h_t = 0 for t ≤ 0 and l = deg φ. The leading nonzero coefficient sits
//! at t = deg φ' − m.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ComplexScalar;
use crate::series::{ComplexSeries, Series, VariableKind};
use num_complex::Complex64;
use num_traits::Zero;

/// Asymptotic series for the monomial inhomogeneity x^m against the phase φ.
#[derive(Clone, Debug)]
pub struct AsymptoticSeries {
    /// h as an inverse-power series: index j ↔ x^{-j}.
    pub h: ComplexSeries,
    pub phi: Polynomial<f64>,
    pub m: u32,
}

/// The recurrence over any complex coefficient field. `alpha` is φ with zero
/// constant term; needs m < deg φ − 1.
pub fn laurent_core<T: ComplexScalar>(
    m: usize,
    alpha: &Polynomial<T>,
    t_max: usize,
) -> Result<Vec<T>> {
    let l = alpha
        .degree()
        .ok_or_else(|| Error::Domain("phase polynomial must not be zero".into()))?;
    if l < 2 {
        return Err(Error::Domain(
            "asymptotic series needs deg φ ≥ 2".into(),
        ));
    }
    if m + 1 >= l {
        return Err(Error::Domain(format!(
            "asymptotic series needs m < deg φ − 1; got m = {m}, deg φ = {l}"
        )));
    }
    let lead = alpha.coeff(l);
    if lead.is_zero() {
        return Err(Error::Domain("leading phase coefficient is zero".into()));
    }
    let denom = T::imag_unit() * T::from_i64(l as i64) * lead;
    let mut h = vec![T::zero(); t_max + 1];
    for t in 1..=t_max {
        let mut rhs = if t == l - 1 - m { T::one() } else { T::zero() };
        for j in 1..l {
            let idx = t as i64 - l as i64 + j as i64;
            if idx >= 1 {
                let aj = alpha.coeff(j);
                if !aj.is_zero() {
                    rhs = rhs
                        - T::imag_unit() * T::from_i64(j as i64) * aj * h[idx as usize].clone();
                }
            }
        }
        if t > l {
            rhs = rhs + T::from_i64((t - l) as i64) * h[t - l].clone();
        }
        h[t] = rhs / denom.clone();
    }
    Ok(h)
}

/// h_1..h_T in double precision for p = x^m.
pub fn laurent_coeffs(m: u32, phi: &Polynomial<f64>, t_max: usize) -> Result<AsymptoticSeries> {
    let alpha = phi.map(|c| Complex64::new(*c, 0.0));
    let h = laurent_core(m as usize, &alpha, t_max)?;
    Ok(AsymptoticSeries {
        h: ComplexSeries::new(Series::new(h, t_max), VariableKind::PowerOfInverseX)?,
        phi: phi.clone(),
        m,
    })
}

/// Combined h-series for a general amplitude polynomial p (by linearity);
/// needs deg p < deg φ − 1.
pub fn laurent_for_poly(
    p: &Polynomial<f64>,
    phi: &Polynomial<f64>,
    t_max: usize,
) -> Result<ComplexSeries> {
    let alpha = phi.map(|c| Complex64::new(*c, 0.0));
    let mut total = vec![Complex64::zero(); t_max + 1];
    for (m, c) in p.coeffs().iter().enumerate() {
        if *c == 0.0 {
            continue;
        }
        let h = laurent_core(m, &alpha, t_max)?;
        for (tot, hv) in total.iter_mut().zip(h) {
            *tot += c * hv;
        }
    }
    ComplexSeries::new(Series::new(total, t_max), VariableKind::PowerOfInverseX)
}

/// Residual of the defining equation, scaled by X^{deg φ'} so it is a power
/// series in X: X^{l-1}·(p − iqφ' − q_x') with q = Σ h_j X^j. The recurrence
/// guarantees zeros through order T.
pub fn scaled_inverse_residual<T: ComplexScalar>(
    h: &Series<T>,
    m: usize,
    alpha: &Polynomial<T>,
) -> Result<Series<T>> {
    let l = alpha
        .degree()
        .ok_or_else(|| Error::Domain("phase polynomial must not be zero".into()))?;
    if m + 1 >= l {
        return Err(Error::Domain("needs m < deg φ − 1".into()));
    }
    let order = h.order();
    // A = X^{l-1} p(1/X) = X^{l-1-m}
    let mut a = vec![T::zero(); l - m];
    a[l - 1 - m] = T::one();
    let a = Series::new(a, order);
    // B = X^{l-1} φ'(1/X) = Σ_j j α_j X^{l-j}
    let mut b = vec![T::zero(); l];
    for j in 1..=l {
        b[l - j] = T::from_i64(j as i64) * alpha.coeff(j);
    }
    let b = Series::new(b, order);
    // q_x' = -X² dq/dX, so the scaled -q_x' contribution is +X^{l+1} dq/dX
    let dq = h.derivative();
    let mut shifted = vec![T::zero(); l + 1];
    shifted.extend(dq.coeffs().iter().cloned());
    let shifted = Series::new(shifted, order);
    let iq_b = h.mul(&b).scale(&T::imag_unit());
    Ok(a.sub(&iq_b).add(&shifted))
}
