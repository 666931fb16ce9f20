//! The complete integral I_{p,φ}(∞) and the series-matching estimate for it.
//!
//! The closed route expands p·e^{i(φ − α_l x^l)} as a Taylor series t and sums
//!
//!   l·I(∞) = Σ_j t_j Γ((1+j)/l) (i/α_l)^{(1+j)/l}
//!
//! which converges absolutely since Γ((1+j)/l)/j! → 0. The matching route
//! instead estimates the constant gap between the origin-anchored q-series
//! and the infinity-anchored asymptotic series on a scan window.

use crate::error::{Error, Result};
use crate::general::laurent::laurent_for_poly;
use crate::general::qseries::q_iterate;
use crate::poly::Polynomial;
use crate::power::log_gamma;
use crate::series::ComplexSeries;
use num_complex::Complex64;
use num_traits::Zero;

#[derive(Clone, Copy, Debug)]
pub struct CompleteIntegral {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_estimate: f64,
}

const LOG_OVERFLOW: f64 = 700.0;
const LOG_UNDERFLOW: f64 = -745.0;

/// I_{p,φ}(∞) by Taylor expansion of everything below the top phase power.
pub fn complete_general(
    p: &Polynomial<f64>,
    phi: &Polynomial<f64>,
    max_terms: usize,
    tol: f64,
) -> Result<CompleteIntegral> {
    let l = phi
        .degree()
        .ok_or_else(|| Error::Domain("phase polynomial must not be zero".into()))?;
    if l < 2 {
        return Err(Error::Domain(
            "complete_general needs deg φ ≥ 2 (linear phases have a closed form)".into(),
        ));
    }
    if p.is_zero() {
        return Ok(CompleteIntegral {
            value: Complex64::zero(),
            terms_used: 0,
            tail_estimate: 0.0,
        });
    }
    let al = phi.coeff(l);
    let prefactor = Complex64::new(0.0, phi.coeff(0)).exp();
    // e = exp(i Σ_{1≤j<l} α_j x^j) as a power series, e_j from e' = ψ'·e
    let mut e = vec![Complex64::zero(); max_terms];
    e[0] = Complex64::new(1.0, 0.0);
    for j in 1..max_terms {
        let mut acc = Complex64::zero();
        for k in 1..=j.min(l - 1) {
            let ak = phi.coeff(k);
            if ak != 0.0 {
                acc += k as f64 * Complex64::new(0.0, ak) * e[j - k];
            }
        }
        e[j] = acc / j as f64;
    }

    let theta = if al > 0.0 {
        std::f64::consts::FRAC_PI_2
    } else {
        -std::f64::consts::FRAC_PI_2
    };
    let ln_inv_al = -al.abs().ln();

    let mut sum = Complex64::zero();
    let mut abs_sum = 0.0;
    let mut prev_mag = 0.0;
    let mut last_mag = 0.0;
    let mut small_streak = 0;
    let mut used = max_terms;
    let mut stopped_early = false;
    for j in 0..max_terms {
        let mut tj = Complex64::zero();
        for (k, pk) in p.coeffs().iter().enumerate() {
            if *pk != 0.0 && k <= j {
                tj += pk * e[j - k];
            }
        }
        let expo = (1 + j) as f64 / l as f64;
        let mag_t = tj.norm();
        let term = if mag_t == 0.0 {
            Complex64::zero()
        } else {
            let log_mag = mag_t.ln() + log_gamma(expo)? + expo * ln_inv_al;
            if log_mag > LOG_OVERFLOW {
                return Err(Error::NonFinite("complete integral term overflow"));
            }
            if log_mag < LOG_UNDERFLOW {
                Complex64::zero()
            } else {
                let unit = tj / mag_t * Complex64::new(0.0, expo * theta).exp();
                log_mag.exp() * unit
            }
        };
        sum += term;
        let mag = term.norm();
        abs_sum += mag;
        if mag > 0.0 {
            prev_mag = last_mag;
            last_mag = mag;
        }
        if j > l && mag < 0.01 * tol * (sum.norm() + 1.0) {
            small_streak += 1;
            if small_streak >= 4 {
                used = j + 1;
                stopped_early = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    let ratio = if prev_mag > 0.0 { last_mag / prev_mag } else { 0.0 };
    let mut tail = if ratio < 1.0 {
        last_mag * ratio / (1.0 - ratio)
    } else {
        last_mag
    };
    tail += f64::EPSILON * abs_sum;
    tail /= l as f64;
    if !stopped_early && tail > tol {
        return Err(Error::NoConvergence {
            what: "complete integral series",
            iterations: max_terms,
        });
    }
    let value = prefactor * sum / l as f64;
    if !value.is_finite() {
        return Err(Error::NonFinite("complete integral sum"));
    }
    Ok(CompleteIntegral {
        value,
        terms_used: used,
        tail_estimate: tail,
    })
}

/// Sum the inverse-power tail at x truncated at the smallest term: the term
/// magnitudes may wiggle with the parity structure of the coefficients, so
/// the cut sits at the global minimum over the allowed indices rather than
/// at the first local growth. The error estimate stacks the next three
/// omitted magnitudes, since several terms near the optimum share its size.
pub fn asymptotic_tail_at(h: &ComplexSeries, x: f64, t_cap: usize) -> (Complex64, f64) {
    let inv = 1.0 / x;
    let mut terms: Vec<(usize, Complex64)> = Vec::new();
    let mut power = 1.0;
    for j in 1..=h.order() {
        power *= inv;
        let c = h.coeff(j);
        if !c.is_zero() {
            terms.push((j, c * power));
        }
    }
    let mut best: Option<(usize, f64)> = None; // position in `terms`, magnitude
    for (pos, (j, t)) in terms.iter().enumerate() {
        if *j > t_cap {
            break;
        }
        let mag = t.norm();
        if best.map(|(_, m)| mag < m).unwrap_or(true) {
            best = Some((pos, mag));
        }
    }
    let Some((cut, min_mag)) = best else {
        let omitted = terms.first().map(|(_, t)| t.norm()).unwrap_or(0.0);
        return (Complex64::zero(), omitted);
    };
    let sum: Complex64 = terms[..=cut].iter().map(|(_, t)| t).sum();
    let after: f64 = terms[cut + 1..].iter().take(3).map(|(_, t)| t.norm()).sum();
    // when the series ran out right at the cut, charge the smallest term
    let omitted = if after > 0.0 { after } else { min_mag };
    (sum, omitted)
}

/// Point-spot estimate of I(∞) by subtracting the asymptotic tail from the
/// q-series on a geometric grid and keeping the point of minimal combined
/// error indicator; the spread of accepted estimates doubles as the error.
pub fn match_infinity(
    p: &Polynomial<f64>,
    phi: &Polynomial<f64>,
    q_depth: usize,
    asym_terms: usize,
    window: (f64, f64),
    grid_points: usize,
) -> Result<CompleteIntegral> {
    let l = phi
        .degree()
        .ok_or_else(|| Error::Domain("phase polynomial must not be zero".into()))?;
    if !(window.0 > 0.0 && window.1 > window.0) || grid_points < 2 {
        return Err(Error::Domain("matching needs 0 < w₀ < w₁ and ≥ 2 grid points".into()));
    }
    // enough Laurent orders to cover `asym_terms` nonzero entries
    let ext = asym_terms * (l + 1) + l + 2;
    let h = laurent_for_poly(p, phi, ext)?;
    let mut nonzero: Vec<usize> = (1..=ext).filter(|&j| !h.coeff(j).is_zero()).collect();
    let next_nonzero = if nonzero.len() > asym_terms {
        Some(nonzero[asym_terms])
    } else {
        None
    };
    nonzero.truncate(asym_terms);

    let pc = p.map(|c| Complex64::new(*c, 0.0));
    let phic = phi.map(|c| Complex64::new(*c, 0.0));
    let qs = q_iterate(&pc, &phic, q_depth);

    let ratio = (window.1 / window.0).powf(1.0 / (grid_points - 1) as f64);
    let mut best: Option<(f64, Complex64)> = None;
    let mut accepted = Vec::new();
    for i in 0..grid_points {
        let x = window.0 * ratio.powi(i as i32);
        let qd = qs.eval_with_diagnostics(x);
        let est_q = qd.error_estimate();
        if !est_q.is_finite() || est_q > 0.05 * qd.sum.norm().max(1e-300) {
            continue;
        }
        let mut hsum = Complex64::zero();
        for &j in &nonzero {
            hsum += h.coeff(j) * x.powi(-(j as i32));
        }
        let est_h = match next_nonzero {
            Some(j) => h.coeff(j).norm() * x.powi(-(j as i32)),
            None => 0.0,
        };
        let phase = Complex64::new(0.0, phi.eval(&x)).exp();
        let estimate = phase * (qd.sum - hsum);
        let combined = est_q + est_h;
        accepted.push(estimate);
        if best.map(|(c, _)| combined < c).unwrap_or(true) {
            best = Some((combined, estimate));
        }
    }
    let (combined, value) = best.ok_or(Error::NoConvergence {
        what: "matching window scan (no point where both series converge)",
        iterations: grid_points,
    })?;
    let spread = accepted
        .iter()
        .map(|v| (v - value).norm())
        .fold(0.0f64, f64::max);
    Ok(CompleteIntegral {
        value,
        terms_used: q_depth + asym_terms,
        tail_estimate: spread.max(combined),
    })
}
