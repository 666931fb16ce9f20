//! Brute-force validator: adaptive Gauss–Kronrod quadrature of
//! p(x)·e^{iφ(x)} on [0, u]. Used by tests and the `check` command only,
//! never by the main evaluator.

use crate::error::{Error, Result};
use crate::general::{ProblemSpec, UpperLimit};
use crate::poly::Polynomial;
use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// 15-point Kronrod abscissae (positive half), 7-point Gauss pairs embedded.
const XGK: [f64; 8] = [
    0.9914553711208126392068547,
    0.9491079123427585245261897,
    0.8648644233597690727897128,
    0.7415311855993944398638648,
    0.5860872354676911302941448,
    0.4058451513773971669066064,
    0.2077849550078984676006894,
    0.0,
];

const WGK: [f64; 8] = [
    0.0229353220105292249637320,
    0.0630920926299785532907007,
    0.1047900103222501838398763,
    0.1406532597155259187451896,
    0.1690047266392679028265834,
    0.1903505780647854099132564,
    0.2044329400752988924141620,
    0.2094821410847278280129992,
];

const WG: [f64; 4] = [
    0.1294849661688696932706114,
    0.2797053914892766679014678,
    0.3818300505051189449503698,
    0.4179591836734693877551020,
];

/// Hard cap on the phase-milestone pre-splitting; beyond this the oracle
/// refuses rather than grind (desk-scale tool, not a production path).
const MILESTONE_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug)]
pub struct OracleResult {
    pub value: Complex64,
    pub abs_error: f64,
    pub subdivisions: usize,
}

struct Interval {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
    }
}

fn kronrod_15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut res_abs = f_center.norm() * WGK[7];
    let mut samples = [Complex64::new(0.0, 0.0); 15];
    samples[7] = f_center;
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        samples[j] = f1;
        samples[14 - j] = f2;
        kronrod += (f1 + f2) * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut res_asc = (f_center - mean).norm() * WGK[7];
    for j in 0..7 {
        res_asc += ((samples[j] - mean).norm() + (samples[14 - j] - mean).norm()) * WGK[j];
    }
    let abs_half = half.abs();
    res_asc *= abs_half;
    res_abs *= abs_half;
    let value = kronrod * half;
    let raw = ((kronrod - gauss) * half).norm();
    // QUADPACK-style rescaling of the raw Kronrod-Gauss difference
    let mut err = raw;
    if res_asc != 0.0 && raw != 0.0 {
        let scale = (200.0 * raw / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

/// Real roots of a polynomial inside (a, b) by sign scanning plus bisection;
/// split hints only, so missing a tangent root is harmless.
fn roots_in_interval(p: &Polynomial<f64>, a: f64, b: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    if p.degree().is_none() {
        return roots;
    }
    const SAMPLES: usize = 512;
    let mut prev_x = a;
    let mut prev_v = p.eval(&a);
    for i in 1..=SAMPLES {
        let x = a + (b - a) * i as f64 / SAMPLES as f64;
        let v = p.eval(&x);
        if prev_v == 0.0 {
            roots.push(prev_x);
        } else if prev_v.signum() != v.signum() && v != 0.0 {
            let (mut lo, mut hi) = (prev_x, x);
            let mut flo = prev_v;
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let fm = p.eval(&mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if flo.signum() == fm.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_v = v;
    }
    roots
}

/// Solve φ(x) = target on a monotone segment by bisection.
fn solve_monotone(phi: &Polynomial<f64>, a: f64, b: f64, target: f64) -> f64 {
    let (mut lo, mut hi) = (a, b);
    let rising = phi.eval(&b) > phi.eval(&a);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let v = phi.eval(&mid);
        if (v < target) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn initial_breakpoints(phi: &Polynomial<f64>, u: f64) -> Result<Vec<f64>> {
    let mut pts = vec![0.0, u];
    let stationary = roots_in_interval(&phi.derivative(), 0.0, u);
    pts.extend(stationary.iter().copied());
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pts.dedup_by(|x, y| (*x - *y).abs() < 1e-14 * u.max(1.0));

    // phase milestones φ = kπ on each monotone segment
    let mut milestones = Vec::new();
    let mut count = 0usize;
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (pa, pb) = (phi.eval(&a), phi.eval(&b));
        let (lo, hi) = (pa.min(pb), pa.max(pb));
        let k_lo = (lo / std::f64::consts::PI).ceil() as i64;
        let k_hi = (hi / std::f64::consts::PI).floor() as i64;
        if k_hi >= k_lo {
            count += (k_hi - k_lo + 1) as usize;
            if count > MILESTONE_CAP {
                return Err(Error::Budget(format!(
                    "more than {MILESTONE_CAP} phase milestones on [0, {u}]"
                )));
            }
            for k in k_lo..=k_hi {
                milestones.push(solve_monotone(phi, a, b, k as f64 * std::f64::consts::PI));
            }
        }
    }
    pts.extend(milestones);
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pts.dedup_by(|x, y| (*x - *y).abs() < 1e-14 * u.max(1.0));
    Ok(pts)
}

/// Adaptive quadrature of ∫₀ᵘ p(x) e^{iφ(x)} dx with an embedded 15/7-point
/// rule, pre-split at stationary points of the phase and at φ = kπ.
pub fn oracle_integrate(spec: &ProblemSpec, tol: f64, max_subdiv: usize) -> Result<OracleResult> {
    let u = match spec.limit {
        UpperLimit::Finite(u) => u,
        UpperLimit::Infinite => {
            return Err(Error::Domain(
                "the quadrature oracle only handles finite upper limits".into(),
            ))
        }
    };
    if u < 0.0 {
        return Err(Error::Domain("oracle_integrate needs u ≥ 0".into()));
    }
    if u == 0.0 {
        return Ok(OracleResult {
            value: Complex64::new(0.0, 0.0),
            abs_error: 0.0,
            subdivisions: 0,
        });
    }
    let p = spec.p.clone();
    let phi = spec.phi.clone();
    let f = move |x: f64| {
        let amp = p.eval(&x);
        let ph = phi.eval(&x);
        Complex64::new(0.0, ph).exp() * amp
    };

    let pts = initial_breakpoints(&spec.phi, u)?;
    let mut heap = BinaryHeap::new();
    for w in pts.windows(2) {
        let (value, error) = kronrod_15(&f, w[0], w[1]);
        heap.push(Interval {
            a: w[0],
            b: w[1],
            value,
            error,
        });
    }

    let mut total_err: f64 = heap.iter().map(|iv| iv.error).sum();
    while heap.len() < max_subdiv && total_err > tol {
        let worst = heap.pop().expect("heap never empty here");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval at floating-point resolution; keep as is
            heap.push(worst);
            break;
        }
        total_err -= worst.error;
        let (v1, e1) = kronrod_15(&f, worst.a, mid);
        let (v2, e2) = kronrod_15(&f, mid, worst.b);
        total_err += e1 + e2;
        heap.push(Interval {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Interval {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
    }

    let subdivisions = heap.len();
    let mut value = Complex64::new(0.0, 0.0);
    let mut abs_error = 0.0;
    for iv in heap {
        value += iv.value;
        abs_error += iv.error;
    }
    if !value.is_finite() {
        return Err(Error::NonFinite("oracle_integrate"));
    }
    Ok(OracleResult {
        value,
        abs_error,
        subdivisions,
    })
}
