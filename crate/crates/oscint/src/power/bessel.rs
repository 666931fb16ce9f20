//! Bessel J of fractional order by the ascending power series.
//!
//! Only small arguments are needed here: the Neumann route is used for small
//! upper limits, so |z| ≤ 30 suffices and no Hankel asymptotics are required.

use super::gamma::log_gamma;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 300;

/// J_ν(z) for ν ≥ 0, 0 ≤ z ≤ 30, via Σ_k (-1)^k (z/2)^{ν+2k} / (k! Γ(ν+k+1)),
/// each term scaled through log-Γ.
pub fn bessel_j(nu: f64, z: f64) -> Result<f64> {
    if !(nu >= 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("bessel_j needs ν ≥ 0, got ν = {nu}")));
    }
    if z < 0.0 || z > 30.0 {
        return Err(Error::Domain(format!(
            "bessel_j ascending series limited to 0 ≤ z ≤ 30, got z = {z}"
        )));
    }
    if z == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let log_half_z = (z / 2.0).ln();
    let mut sum = 0.0;
    let mut log_kfact = 0.0; // ln k!
    for k in 0..MAX_TERMS {
        if k > 0 {
            log_kfact += (k as f64).ln();
        }
        let log_mag = (nu + 2.0 * k as f64) * log_half_z - log_kfact - log_gamma(nu + k as f64 + 1.0)?;
        let term = if k % 2 == 0 { log_mag.exp() } else { -log_mag.exp() };
        sum += term;
        if term.abs() < f64::EPSILON * sum.abs().max(1e-290) && k as f64 > z {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        what: "bessel_j ascending series",
        iterations: MAX_TERMS,
    })
}
