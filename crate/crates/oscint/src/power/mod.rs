//! Evaluation routes for the pure-power kernels ∫₀ᵘ x^m e^{i c x^n} dx.
//!
//! Small |c|u^n goes through the Taylor series (or the Kummer form, which
//! sums the same function after splitting off the main phasor); large |c|u^n
//! through the incomplete-gamma continued fraction. The complete integral and
//! the Neumann-Bessel expansion with exact rational coefficients round out
//! the routes.

pub mod bessel;
pub mod gamma;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

pub use bessel::bessel_j;
pub use gamma::{gamma, log_gamma};

/// x^m e^{i c x^n} with m ≥ 0, n ≥ 1, c ≠ 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerKernelSpec {
    pub m: u32,
    pub n: u32,
    pub c: f64,
}

impl PowerKernelSpec {
    pub fn new(m: u32, n: u32, c: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("power kernel needs n ≥ 1".into()));
        }
        if c == 0.0 || !c.is_finite() {
            return Err(Error::Domain(format!("power kernel needs finite c ≠ 0, got {c}")));
        }
        Ok(PowerKernelSpec { m, n, c })
    }
}

/// Value plus a first-omitted-term style error estimate.
#[derive(Clone, Copy, Debug)]
pub struct KernelValue {
    pub value: Complex64,
    pub error_estimate: f64,
}

const TAYLOR_MAX_TERMS: usize = 400;
const CF_MAX_ITER: usize = 1000;
const CF_TINY: f64 = 1e-300;
const CF_TOL: f64 = 1e-15;

/// Route dispatch threshold on |c|·u^n: both sides converge in ≲ 60 terms there.
const TAYLOR_CF_SPLIT: f64 = 8.0;

/// Partial Taylor sum of ∫₀ᵘ x^m e^{icx^n} dx through term index L:
/// Σ_l (ic)^l u^{m+nl+1} / (l! (m+nl+1)).
pub fn taylor_partial(spec: &PowerKernelSpec, u: f64, max_terms: usize) -> Result<KernelValue> {
    if max_terms < 1 {
        return Err(Error::Domain("taylor_partial needs at least one term".into()));
    }
    if u == 0.0 {
        return Ok(KernelValue {
            value: Complex64::zero(),
            error_estimate: 0.0,
        });
    }
    let m = spec.m as f64;
    let n = spec.n as f64;
    let base = u.powf(m + 1.0);
    let step = Complex64::new(0.0, spec.c) * u.powi(spec.n as i32);
    if !base.is_finite() || !step.is_finite() {
        return Err(Error::NonFinite("taylor_partial power of u"));
    }
    let mut cur = Complex64::one(); // (ic)^l u^{nl} / l!
    let mut sum = Complex64::zero();
    let mut small_streak = 0;
    let mut l = 0usize;
    while l < max_terms {
        let term = cur * base / (m + n * l as f64 + 1.0);
        if !term.is_finite() {
            return Err(Error::NonFinite("taylor_partial term overflow"));
        }
        sum += term;
        if term.norm() < f64::EPSILON * sum.norm() {
            small_streak += 1;
            if small_streak >= 2 {
                l += 1;
                break;
            }
        } else {
            small_streak = 0;
        }
        cur *= step / (l as f64 + 1.0);
        l += 1;
    }
    let omitted = (cur * base / (m + n * l as f64 + 1.0)).norm();
    if !omitted.is_finite() {
        return Err(Error::NonFinite("taylor_partial tail estimate"));
    }
    Ok(KernelValue {
        value: sum,
        error_estimate: omitted,
    })
}

/// Slow auxiliary factor V with ∫₀ᵘ x^m e^{ix^n} dx = V_{n,m}(u)·e^{iu^n}:
/// V_{n,m}(u) = u^{m+1}/(m+1) Σ_k (-iu^n)^k / (1+(m+1)/n)_k.
pub fn kummer_v(n: u32, m: u32, u: f64, max_terms: usize) -> Result<Complex64> {
    if u < 0.0 {
        return Err(Error::Domain("kummer_v needs u ≥ 0".into()));
    }
    if u == 0.0 {
        return Ok(Complex64::zero());
    }
    let b = 1.0 + (m as f64 + 1.0) / n as f64;
    let w = Complex64::new(0.0, -u.powi(n as i32));
    let mut term = Complex64::one();
    let mut sum = term;
    for k in 1..max_terms.max(2) {
        term *= w / (b + k as f64 - 1.0);
        sum += term;
        if term.norm() < f64::EPSILON * sum.norm() {
            return Ok(sum * u.powi(m as i32 + 1) / (m as f64 + 1.0));
        }
    }
    Err(Error::NoConvergence {
        what: "kummer_v series",
        iterations: max_terms,
    })
}

/// Neumann-Bessel expansion ∫₀ᵘ sin(x^n) dx = d_n Σ_s ξ_{n,s} J_{2s+ν}(u^n),
/// ν = 1 + 1/n, with exact rational ξ.
#[derive(Clone, Debug)]
pub struct NeumannExpansion {
    pub n: u32,
    pub d_n: f64,
    pub xi: Vec<BigRational>,
    /// Order base ν = 1 + 1/n; the s-th term has order 2s + ν.
    pub nu: BigRational,
}

fn rational_prefactor(n: u32) -> BigRational {
    // 2^ν Γ(ν) / d_n, rational by the choice of d_n
    match n {
        2 => BigRational::from_integer(2.into()),
        3 => BigRational::new(4.into(), 9.into()),
        4 => BigRational::new(1.into(), 2.into()),
        5 => BigRational::new(2.into(), 5.into()),
        _ => unreachable!(),
    }
}

fn neumann_prefactor_f64(n: u32) -> f64 {
    let pi = std::f64::consts::PI;
    match n {
        2 => (2.0 * pi).sqrt() / 2.0,
        3 => 2f64.powf(1.0 / 3.0) * pi * 3f64.sqrt() / gamma(2.0 / 3.0).unwrap(),
        4 => 2f64.powf(0.75) * pi / gamma(0.75).unwrap(),
        5 => 2f64.powf(0.2) * pi / ((pi / 5.0).sin() * gamma(0.8).unwrap()),
        _ => unreachable!(),
    }
}

fn neumann_xi_table(n: u32, s_max: usize) -> Vec<BigRational> {
    let nu = BigRational::new(1.into(), (n as i64).into()) + BigRational::one();
    let pref = rational_prefactor(n);
    // Taylor coefficients of f with z^ν f(z) = ∫ sin(x^n)dx, z = x^n:
    // b_{2l} = (-1)^l / ((2nl + n + 1)(2l+1)!), odd b vanish.
    let b = |idx: usize| -> BigRational {
        if idx % 2 == 1 {
            return BigRational::zero();
        }
        let l = idx / 2;
        let mut fact = BigInt::one();
        for i in 2..=(2 * l + 1) {
            fact *= i;
        }
        let den = BigInt::from(2 * (n as usize) * l + n as usize + 1) * fact;
        let num = if l % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        BigRational::new(num, den)
    };
    (0..=s_max)
        .map(|s| {
            // ξ_{n,s} = pref · (ν+2s) Σ_m 4^{s-m} [Π_{i=1}^{2s-m}(1/n + i)] b(2s-2m) / m!
            let mut acc = BigRational::zero();
            for mm in 0..=s {
                let pow4 = BigRational::from_integer(BigInt::from(4).pow((s - mm) as u32));
                let mut prod = BigRational::one();
                for i in 1..=(2 * s - mm) {
                    prod *= BigRational::new(1.into(), (n as i64).into())
                        + BigRational::from_integer(i.into());
                }
                let mut mfact = BigInt::one();
                for i in 2..=mm {
                    mfact *= i;
                }
                acc += pow4 * prod * b(2 * s - 2 * mm) / BigRational::from_integer(mfact);
            }
            let order = nu.clone() + BigRational::from_integer((2 * s).into());
            pref.clone() * order * acc
        })
        .collect()
}

const NEUMANN_CACHED_ORDER: usize = 16;

fn cached_xi(n: u32) -> &'static Vec<BigRational> {
    static TABLES: [OnceLock<Vec<BigRational>>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    TABLES[(n - 2) as usize].get_or_init(|| neumann_xi_table(n, NEUMANN_CACHED_ORDER))
}

/// Exact expansion coefficients ξ_{n,0..S} and the prefactor d_n for n in 2..=5.
pub fn neumann_coeffs(n: u32, s_max: usize) -> Result<NeumannExpansion> {
    if !(2..=5).contains(&n) {
        return Err(Error::Domain(format!(
            "neumann expansion implemented for n in 2..=5, got {n}"
        )));
    }
    let xi = if s_max <= NEUMANN_CACHED_ORDER {
        cached_xi(n)[..=s_max].to_vec()
    } else {
        neumann_xi_table(n, s_max)
    };
    Ok(NeumannExpansion {
        n,
        d_n: neumann_prefactor_f64(n),
        xi,
        nu: BigRational::new(1.into(), (n as i64).into()) + BigRational::one(),
    })
}

/// Partial sum of the expansion at upper limit u; converges poorly once u^n
/// grows, so the argument range is capped with the Bessel series range.
pub fn neumann_eval(exp: &NeumannExpansion, u: f64) -> Result<(f64, f64)> {
    if u < 0.0 {
        return Err(Error::Domain("neumann_eval needs u ≥ 0".into()));
    }
    if u == 0.0 {
        return Ok((0.0, 0.0));
    }
    let z = u.powi(exp.n as i32);
    if z > 30.0 {
        return Err(Error::Domain(format!(
            "neumann_eval argument u^n = {z} beyond the small-argument range"
        )));
    }
    let nu = exp.nu.to_f64().unwrap();
    let mut sum = 0.0;
    let mut last = 0.0;
    for (s, xi) in exp.xi.iter().enumerate() {
        let order = 2.0 * s as f64 + nu;
        last = exp.d_n * xi.to_f64().unwrap() * bessel_j(order, z)?;
        sum += last;
    }
    Ok((sum, last.abs()))
}

/// Upper incomplete gamma Γ(s, z) by the continued fraction
/// z^s e^{-z} / (1+z-s + K_k (k(s-k)) / (2k+1+z-s)), modified Lentz scheme.
pub fn gamma_cf(s: f64, z: Complex64) -> Result<Complex64> {
    if z.is_zero() {
        return Err(Error::Domain("gamma_cf needs z ≠ 0".into()));
    }
    let sc = Complex64::new(s, 0.0);
    let b1 = Complex64::one() + z - sc;
    let mut f = if b1.norm() < CF_TINY { Complex64::new(CF_TINY, 0.0) } else { b1 };
    let mut c = f;
    let mut d = Complex64::zero();
    for k in 2..=CF_MAX_ITER {
        let kf = (k - 1) as f64;
        let a_k = Complex64::new(kf * (s - kf), 0.0);
        let b_k = Complex64::new(2.0 * k as f64 - 1.0, 0.0) + z - sc;
        d = b_k + a_k * d;
        if d.norm() < CF_TINY {
            d = Complex64::new(CF_TINY, 0.0);
        }
        d = d.inv();
        c = b_k + a_k / c;
        if c.norm() < CF_TINY {
            c = Complex64::new(CF_TINY, 0.0);
        }
        let delta = c * d;
        f *= delta;
        if (delta - Complex64::one()).norm() < CF_TOL {
            let prefactor = (sc * z.ln() - z).exp();
            let out = prefactor / f;
            if !out.is_finite() {
                return Err(Error::NonFinite("gamma_cf prefactor"));
            }
            return Ok(out);
        }
    }
    Err(Error::NoConvergence {
        what: "incomplete gamma continued fraction",
        iterations: CF_MAX_ITER,
    })
}

/// Lower incomplete gamma γ(a, z) = Γ(a) − Γ(a, z).
pub fn gamma_lower(a: f64, z: Complex64) -> Result<Complex64> {
    Ok(Complex64::new(gamma(a)?, 0.0) - gamma_cf(a, z)?)
}

/// ∫₀^∞ x^m e^{icx^n} dx = (1/n) (i/c)^{(1+m)/n} Γ((m+1)/n), principal branch.
pub fn complete_power(spec: &PowerKernelSpec) -> Result<Complex64> {
    let expo = (spec.m as f64 + 1.0) / spec.n as f64;
    let base = Complex64::new(0.0, 1.0) / spec.c;
    let value = base.powf(expo) * gamma(expo)? / spec.n as f64;
    if !value.is_finite() {
        return Err(Error::NonFinite("complete_power"));
    }
    Ok(value)
}

/// Exact record of the partial-integration chain that lowers m below n:
/// value(u) = e^{icu^n} Σ_k coeff_k u^{p_k} + residual_coeff · I_{m mod n}(u).
#[derive(Clone, Debug)]
pub struct PowerReduction {
    pub boundary: Vec<(Complex64, u32)>,
    pub residual_coeff: Complex64,
    pub residual: PowerKernelSpec,
}

/// Lower the power m below n by inc ∫x^m e^{icx^n} = x^{m-n+1}e^{icx^n} − (m−n+1)∫x^{m-n}e^{icx^n}.
pub fn reduce_power_m(spec: &PowerKernelSpec) -> PowerReduction {
    let inc = Complex64::new(0.0, spec.n as f64 * spec.c);
    let mut boundary = Vec::new();
    let mut coeff = Complex64::one();
    let mut m = spec.m;
    while m >= spec.n {
        let drop = m - spec.n + 1; // power of the boundary term
        boundary.push((coeff / inc, drop));
        coeff *= -Complex64::new(drop as f64, 0.0) / inc;
        m -= spec.n;
    }
    PowerReduction {
        boundary,
        residual_coeff: coeff,
        residual: PowerKernelSpec {
            m,
            n: spec.n,
            c: spec.c,
        },
    }
}

impl PowerReduction {
    /// Reassemble the integral value given the residual kernel's value at u.
    pub fn assemble(&self, u: f64, residual_value: Complex64) -> Complex64 {
        let phase = Complex64::new(0.0, self.residual.c * u.powi(self.residual.n as i32)).exp();
        let mut b = Complex64::zero();
        for (coeff, p) in &self.boundary {
            b += coeff * u.powi(*p as i32);
        }
        phase * b + self.residual_coeff * residual_value
    }
}

/// Which route evaluated a power kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerRoute {
    Taylor,
    GammaCf,
}

/// Full dispatcher for ∫₀ᵘ x^m e^{icx^n} dx at any finite u (sign included):
/// reflection for u < 0, power lowering for m ≥ n, then Taylor or continued
/// fraction on |c| u^n.
pub fn eval_power_kernel(spec: &PowerKernelSpec, u: f64) -> Result<(KernelValue, PowerRoute)> {
    if !u.is_finite() {
        return Err(Error::Domain("eval_power_kernel needs finite u".into()));
    }
    if u == 0.0 {
        return Ok((
            KernelValue {
                value: Complex64::zero(),
                error_estimate: 0.0,
            },
            PowerRoute::Taylor,
        ));
    }
    if u < 0.0 {
        // ∫₀ᵘ = (-1)^{m+1} ∫₀^{-u} x^m e^{i(-1)^n c x^n} dx
        let reflected = PowerKernelSpec {
            m: spec.m,
            n: spec.n,
            c: if spec.n % 2 == 0 { spec.c } else { -spec.c },
        };
        let (kv, route) = eval_power_kernel(&reflected, -u)?;
        let sign = if spec.m % 2 == 0 { -1.0 } else { 1.0 };
        return Ok((
            KernelValue {
                value: sign * kv.value,
                error_estimate: kv.error_estimate,
            },
            route,
        ));
    }
    if spec.m >= spec.n {
        let red = reduce_power_m(spec);
        let (res, route) = eval_power_kernel(&red.residual, u)?;
        return Ok((
            KernelValue {
                value: red.assemble(u, res.value),
                error_estimate: res.error_estimate * red.residual_coeff.norm()
                    + f64::EPSILON * red.assemble(u, res.value).norm(),
            },
            route,
        ));
    }
    let arg = spec.c.abs() * u.powi(spec.n as i32);
    if arg <= TAYLOR_CF_SPLIT {
        let kv = taylor_partial(spec, u, TAYLOR_MAX_TERMS)?;
        Ok((kv, PowerRoute::Taylor))
    } else {
        let a = (spec.m as f64 + 1.0) / spec.n as f64;
        let w = Complex64::new(0.0, -spec.c) * u.powi(spec.n as i32);
        let value = Complex64::new(0.0, -spec.c).powf(-a) * gamma_lower(a, w)? / spec.n as f64;
        if !value.is_finite() {
            return Err(Error::NonFinite("gamma route power kernel"));
        }
        Ok((
            KernelValue {
                value,
                error_estimate: 10.0 * CF_TOL * value.norm().max(1.0),
            },
            PowerRoute::GammaCf,
        ))
    }
}
