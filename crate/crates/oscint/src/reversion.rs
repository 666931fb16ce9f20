//! Series reversion of phase polynomials: the multinomial recurrence, the
//! perturbative iteration, and the closed-form coefficient families that act
//! as independent oracles for both.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::series::{ComplexSeries, Series, VariableKind};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReversionMethod {
    Multinomial,
    Perturbative,
}

/// β of x = Σ β_j y^j, the reversion of y = Σ α_j x^j.
#[derive(Clone, Debug)]
pub struct ReversionResult<T: Scalar> {
    pub beta: Series<T>,
    pub method: ReversionMethod,
    pub input_alpha: Polynomial<T>,
}

fn check_revertible<T: Scalar>(alpha: &Polynomial<T>) -> Result<T> {
    if !alpha.coeff(0).is_zero() {
        return Err(Error::Domain(
            "reversion needs a zero constant term; move it out first".into(),
        ));
    }
    let a1 = alpha.coeff(1);
    if a1.is_zero() {
        return Err(Error::Domain(
            "reversion needs a nonzero linear coefficient".into(),
        ));
    }
    Ok(a1)
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Σ over (t₁,…,t_m) with Σtᵢ = j, Σ i·tᵢ = t of multinomial(j; t₁…t_m)·Π βᵢ^{tᵢ},
/// m = t - j + 1.
fn partition_sum<T: Scalar>(beta: &[T], j: usize, t: usize) -> T {
    let m = t - j + 1;
    let mut total = T::zero();
    // descend over i = 1..=m choosing each multiplicity
    fn descend<T: Scalar>(
        beta: &[T],
        i: usize,
        m: usize,
        rem_j: usize,
        rem_t: usize,
        fact_den: i64,
        prod: T,
        total: &mut T,
    ) {
        if rem_j == 0 {
            if rem_t == 0 {
                *total = total.clone() + prod * T::from_i64(fact_den);
            }
            return;
        }
        if i > m || rem_t < rem_j * i || rem_t > rem_j * m {
            return;
        }
        let max_here = (rem_t / i).min(rem_j);
        let mut power = T::one();
        for cnt in 0..=max_here {
            if cnt > 0 {
                power = power * beta[i].clone();
            }
            descend(
                beta,
                i + 1,
                m,
                rem_j - cnt,
                rem_t - cnt * i,
                fact_den / factorial(cnt),
                prod.clone() * power.clone(),
                total,
            );
        }
    }
    descend(beta, 1, m, j, t, factorial(j), T::one(), &mut total);
    total
}

/// Reversion by the t-indexed recurrence with multinomial coefficients over
/// the partitions t₁+2t₂+⋯+m·t_m = t, t₁+⋯+t_m = j.
pub fn revert_multinomial<T: Scalar>(
    alpha: &Polynomial<T>,
    t_max: usize,
) -> Result<ReversionResult<T>> {
    let a1 = check_revertible(alpha)?;
    let l = alpha.degree().unwrap_or(1);
    let mut beta = vec![T::zero(); t_max + 1];
    if t_max >= 1 {
        beta[1] = T::one() / a1.clone();
    }
    for t in 2..=t_max {
        let mut rhs = T::zero();
        for j in 2..=t.min(l) {
            let aj = alpha.coeff(j);
            if aj.is_zero() {
                continue;
            }
            rhs = rhs + aj * partition_sum(&beta, j, t);
        }
        beta[t] = -rhs / a1.clone();
    }
    Ok(ReversionResult {
        beta: Series::new(beta, t_max),
        method: ReversionMethod::Multinomial,
        input_alpha: alpha.clone(),
    })
}

/// Reversion by the perturbative iteration x ← y − Σ_{j≥2} α_j x^j, with
/// α₁ ≠ 1 handled by pre-scaling rather than changing the loop.
pub fn revert_perturbative<T: Scalar>(
    alpha: &Polynomial<T>,
    t_max: usize,
    max_iter: usize,
) -> Result<ReversionResult<T>> {
    let a1 = check_revertible(alpha)?;
    let l = alpha.degree().unwrap_or(1);
    // monic rescale: solve ŷ = x + Σ (α_j/α₁) x^j, then β_j = β̂_j / α₁^j
    let ahat: Vec<T> = (2..=l).map(|j| alpha.coeff(j) / a1.clone()).collect();
    let y = Series::new(vec![T::zero(), T::one()], t_max);
    let mut x = y.clone();
    let mut converged = false;
    for _ in 0..max_iter {
        let mut next = y.clone();
        let mut power = x.mul(&x); // x^2
        for (idx, c) in ahat.iter().enumerate() {
            if !c.is_zero() {
                next = next.sub(&power.scale(c));
            }
            if idx + 2 < l {
                power = power.mul(&x);
            }
        }
        if next == x {
            converged = true;
            break;
        }
        x = next;
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "perturbative reversion",
            iterations: max_iter,
        });
    }
    let mut scale = T::one();
    let beta: Vec<T> = (0..=t_max)
        .map(|j| {
            if j > 0 {
                scale = scale.clone() / a1.clone();
            }
            x.coeff(j) * scale.clone()
        })
        .collect();
    Ok(ReversionResult {
        beta: Series::new(beta, t_max),
        method: ReversionMethod::Perturbative,
        input_alpha: alpha.clone(),
    })
}

// ---------------------------------------------------------------------------
// Coefficient families for the local expansions around x₀ ≠ 0.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalExpansionKind {
    /// Central binomial coefficients C(2l, l): 1, 2, 6, 20, 70, ...
    Quadratic,
    /// κ: 1, 5, 66, 1122, ... with n(2n+1)κ_n = 3(6n−1)(3n−2)κ_{n−1}
    CubicKappa,
    /// λ: 1, 10, 154, 2805, ... with (n+1)(2n+1)λ_n = 3(6n−1)(3n+1)λ_{n−1}
    CubicLambda,
    /// η: 1, 3, 14, 77, 462, ... with jη_j + 2(5−4j)η_{j−1} = 0
    QuarticEta,
}

#[derive(Clone, Debug)]
pub struct LocalExpansionCoeffs {
    pub kind: LocalExpansionKind,
    pub values: Vec<BigRational>,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// The first `count` members of a local-expansion coefficient family, each
/// generated exactly from its two-term recurrence.
pub fn local_coeffs(kind: LocalExpansionKind, count: usize) -> LocalExpansionCoeffs {
    let mut values = Vec::with_capacity(count);
    if count > 0 {
        values.push(BigRational::one());
    }
    for idx in 1..count {
        let k = idx as i64;
        let step = match kind {
            LocalExpansionKind::Quadratic => ratio(2 * (2 * k - 1), k),
            LocalExpansionKind::CubicKappa => ratio(3 * (6 * k - 1) * (3 * k - 2), k * (2 * k + 1)),
            LocalExpansionKind::CubicLambda => {
                ratio(3 * (6 * k - 1) * (3 * k + 1), (k + 1) * (2 * k + 1))
            }
            // η is indexed from 1: η_j = 2(4j−5)/j · η_{j−1}
            LocalExpansionKind::QuarticEta => {
                let j = k + 1;
                ratio(2 * (4 * j - 5), j)
            }
        };
        let prev = values.last().unwrap().clone();
        values.push(prev * step);
    }
    LocalExpansionCoeffs { kind, values }
}

/// κ_n by the closed form 27^n (5/6)_n (1/3)_n / [n! (3/2)_n].
pub fn kappa_closed_form(n: usize) -> BigRational {
    let poch = |a: BigRational, cnt: usize| -> BigRational {
        let mut acc = BigRational::one();
        for i in 0..cnt {
            acc *= a.clone() + BigRational::from_integer(i.into());
        }
        acc
    };
    let mut p27 = BigRational::one();
    for _ in 0..n {
        p27 *= BigRational::from_integer(27.into());
    }
    let num = p27 * poch(ratio(5, 6), n) * poch(ratio(1, 3), n);
    let den = BigRational::from_integer(factorial(n).into()) * poch(ratio(3, 2), n);
    num / den
}

/// The dε/dy series of the local substitution near x₀ for chirp powers
/// n = 2, 3, 4, for use against the kernel e^{i·n·x₀^{n−1}·y}.
pub fn local_expansion(n: u32, x0: f64, t_max: usize) -> Result<ComplexSeries> {
    if x0 == 0.0 {
        return Err(Error::Domain("local expansion needs x₀ ≠ 0".into()));
    }
    let coeffs: Vec<Complex64> = match n {
        2 => {
            let binom = local_coeffs(LocalExpansionKind::Quadratic, t_max + 1).values;
            (0..=t_max)
                .map(|l| {
                    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                    Complex64::new(
                        sign * binom[l].to_f64().unwrap() / (2.0 * x0).powi(l as i32),
                        0.0,
                    )
                })
                .collect()
        }
        3 => {
            let kap = local_coeffs(LocalExpansionKind::CubicKappa, t_max / 2 + 1).values;
            let lam = local_coeffs(LocalExpansionKind::CubicLambda, t_max / 2 + 1).values;
            (0..=t_max)
                .map(|idx| {
                    let j = idx / 2;
                    let v = if idx % 2 == 0 {
                        (2 * j + 1) as f64 * kap[j].to_f64().unwrap()
                            / (3f64.powi(j as i32) * x0.powi(2 * j as i32))
                    } else {
                        -((2 * j + 2) as f64) * lam[j].to_f64().unwrap()
                            / (3f64.powi(j as i32) * x0.powi(2 * j as i32 + 1))
                    };
                    Complex64::new(v, 0.0)
                })
                .collect()
        }
        4 => {
            // values[j] holds η_{j+1}
            let eta = local_coeffs(LocalExpansionKind::QuarticEta, t_max + 1).values;
            (0..=t_max)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                    Complex64::new(
                        sign * (j + 1) as f64 * eta[j].to_f64().unwrap()
                            / (2.0 * x0).powi(j as i32),
                        0.0,
                    )
                })
                .collect()
        }
        _ => {
            return Err(Error::Domain(format!(
                "local expansion implemented for n in 2..=4, got {n}"
            )))
        }
    };
    ComplexSeries::new(Series::new(coeffs, t_max), VariableKind::PowerOfX)
}

// ---------------------------------------------------------------------------
// Catalog of phase polynomials whose reversion coefficients satisfy known
// annihilator recurrences. Three of the published recurrences carry misprints
// (fixed here): x+2x²+x³ needs 2j(2j−1) not 2j(j−1); x+x³+x⁴ needs
// 870j²−3465j+3347; x+x²+2x³ needs 12(3j−5)(3j−7). Each corrected form is
// pinned by the composition identity in the test suite.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum ReversionFamily {
    /// y = x + k·x²
    XPlusKX2 { k: BigRational },
    XPlusX3,
    XPlusX4,
    XPlusX5,
    XPlus2X3,
    XPlus2X4,
    XPlusX2PlusX4,
    XPlusX3PlusX4,
    XPlus2X2PlusX3,
    XPlusX2Plus2X3,
}

impl ReversionFamily {
    pub fn all_unit() -> Vec<ReversionFamily> {
        use ReversionFamily::*;
        vec![
            XPlusKX2 {
                k: BigRational::one(),
            },
            XPlusX3,
            XPlusX4,
            XPlusX5,
            XPlus2X3,
            XPlus2X4,
            XPlusX2PlusX4,
            XPlusX3PlusX4,
            XPlus2X2PlusX3,
            XPlusX2Plus2X3,
        ]
    }

    pub fn phase(&self) -> Polynomial<BigRational> {
        use ReversionFamily::*;
        let c = |v: i64| BigRational::from_integer(v.into());
        let coeffs = match self {
            XPlusKX2 { k } => vec![c(0), c(1), k.clone()],
            XPlusX3 => vec![c(0), c(1), c(0), c(1)],
            XPlusX4 => vec![c(0), c(1), c(0), c(0), c(1)],
            XPlusX5 => vec![c(0), c(1), c(0), c(0), c(0), c(1)],
            XPlus2X3 => vec![c(0), c(1), c(0), c(2)],
            XPlus2X4 => vec![c(0), c(1), c(0), c(0), c(2)],
            XPlusX2PlusX4 => vec![c(0), c(1), c(1), c(0), c(1)],
            XPlusX3PlusX4 => vec![c(0), c(1), c(0), c(1), c(1)],
            XPlus2X2PlusX3 => vec![c(0), c(1), c(2), c(1)],
            XPlusX2Plus2X3 => vec![c(0), c(1), c(1), c(2)],
        };
        Polynomial::new(coeffs)
    }

    /// Index stride of the nonvanishing β: β_{stride·k − (stride−1)} = γ_k.
    pub fn stride(&self) -> usize {
        use ReversionFamily::*;
        match self {
            XPlusX3 | XPlus2X3 => 2,
            XPlusX4 | XPlus2X4 => 3,
            XPlusX5 => 4,
            _ => 1,
        }
    }

    /// Annihilator coefficients [c₀(j), c₁(j), …] on γ_j, γ_{j−1}, … in the
    /// compressed index, and the first j where the recurrence applies.
    fn recurrence(&self, j: i64) -> (Vec<BigRational>, usize) {
        use ReversionFamily::*;
        let r = |v: i64| BigRational::from_integer(v.into());
        match self {
            XPlusKX2 { k } => (
                vec![r(j), r(2 * (2 * j - 3)) * k.clone()],
                2,
            ),
            XPlusX3 => (
                vec![
                    r((2 * j - 1) * (2 * j - 2)),
                    r(3 * (3 * j - 4) * (3 * j - 5)),
                ],
                2,
            ),
            XPlus2X3 => (
                vec![r((2 * j - 1) * (j - 1)), r(3 * (3 * j - 4) * (3 * j - 5))],
                2,
            ),
            XPlusX4 => (
                vec![
                    r((3 * j - 3) * (3 * j - 4) * (3 * j - 2)),
                    r(4 * (4 * j - 5) * (4 * j - 7) * (4 * j - 6)),
                ],
                2,
            ),
            XPlus2X4 => (
                vec![
                    r((3 * j - 3) * (3 * j - 4) * (3 * j - 2)),
                    r(8 * (4 * j - 5) * (4 * j - 7) * (4 * j - 6)),
                ],
                2,
            ),
            XPlusX5 => (
                vec![
                    r((4 * j - 4) * (4 * j - 5) * (4 * j - 3) * (4 * j - 6)),
                    r(5 * (5 * j - 9) * (5 * j - 8) * (5 * j - 7) * (5 * j - 6)),
                ],
                2,
            ),
            XPlus2X2PlusX3 => (
                vec![r(2 * j * (2 * j - 1)), r(3 * (3 * j - 2) * (3 * j - 4))],
                2,
            ),
            XPlusX2Plus2X3 => (
                vec![
                    r(7 * j * (j - 1)),
                    r(16 * (j - 1) * (2 * j - 3)),
                    r(12 * (3 * j - 5) * (3 * j - 7)),
                ],
                3,
            ),
            XPlusX2PlusX4 => (
                vec![
                    r(1147 * j * (j - 1) * (j - 2)),
                    r(8 * (j - 1) * (j - 2) * (647 * j - 738)),
                    r(4 * (j - 2) * (224 * j * j + 1504 * j - 5157)),
                    r(8 * (800 * j * j * j - 5040 * j * j + 8746 * j - 2655)),
                    r(-192 * (4 * j - 15) * (2 * j - 7) * (4 * j - 17)),
                ],
                5,
            ),
            XPlusX3PlusX4 => (
                vec![
                    r(124 * j * (j - 1) * (j - 2)),
                    r((j - 1) * (j - 2) * (7 * j - 88)),
                    r((j - 2) * (870 * j * j - 3465 * j + 3347)),
                    r(1243 * j * j * j - 9870 * j * j + 25869 * j - 22490),
                    r(8 * (4 * j - 15) * (2 * j - 7) * (4 * j - 17)),
                ],
                5,
            ),
        }
    }

    /// First compressed index at which the recurrence holds.
    pub fn min_recurrence_index(&self) -> usize {
        self.recurrence(10).1
    }

    /// Σ cᵢ(j)·γ_{j−i} over the compressed coefficients γ; zero when the
    /// recurrence is satisfied. `gamma[k]` holds γ_{k+1}.
    pub fn recurrence_residual(&self, gamma: &[BigRational], j: usize) -> Option<BigRational> {
        let (coeffs, min_j) = self.recurrence(j as i64);
        if j < min_j || j > gamma.len() {
            return None;
        }
        let mut acc = BigRational::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let idx = j as i64 - i as i64;
            let g = if idx >= 1 {
                gamma[(idx - 1) as usize].clone()
            } else {
                BigRational::zero()
            };
            acc += c.clone() * g;
        }
        Some(acc)
    }

    /// Extract the compressed sequence γ from β (drops the structurally zero
    /// entries of the strided families).
    pub fn compress(&self, beta: &Series<BigRational>) -> Vec<BigRational> {
        let s = self.stride();
        let mut out = Vec::new();
        let mut idx = 1usize;
        while idx <= beta.order() {
            out.push(beta.coeff(idx));
            idx += s;
        }
        out
    }

    /// Generate the compressed sequence from universal low-order seeds plus
    /// this family's recurrence; independent of the reversion algorithms.
    pub fn generate(&self, count: usize) -> Vec<BigRational> {
        let phase = self.phase();
        let a2 = phase.coeff(2);
        let a3 = phase.coeff(3);
        let a4 = phase.coeff(4);
        // classical low-order reversion coefficients for α₁ = 1
        let seeds_full = [
            BigRational::one(),
            -a2.clone(),
            ratio(2, 1) * a2.clone() * a2.clone() - a3.clone(),
            ratio(5, 1) * a2.clone() * a3 - a4 - ratio(5, 1) * a2.clone() * a2.clone() * a2,
        ];
        let stride = self.stride();
        let n_seeds = self.min_recurrence_index() - 1;
        let mut gamma: Vec<BigRational> = (0..n_seeds.min(count))
            .map(|k| seeds_full[k * stride].clone())
            .collect();
        for j in (n_seeds + 1)..=count {
            let (coeffs, _) = self.recurrence(j as i64);
            let mut acc = BigRational::zero();
            for (i, c) in coeffs.iter().enumerate().skip(1) {
                let idx = j as i64 - i as i64;
                if idx >= 1 {
                    acc += c.clone() * gamma[(idx - 1) as usize].clone();
                }
            }
            gamma.push(-acc / coeffs[0].clone());
        }
        gamma
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(coeffs: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(coeffs.iter().map(|&c| r(c)).collect())
    }

    #[test]
    fn identity_reversion() {
        let alpha = poly(&[0, 1]);
        let rev = revert_multinomial(&alpha, 6).unwrap();
        assert_eq!(rev.beta.coeff(1), r(1));
        for j in 2..=6 {
            assert!(rev.beta.coeff(j).is_zero());
        }
    }

    #[test]
    fn quadratic_catalan_numbers() {
        // y = x + x²: β = 1, -1, 2, -5, 14 (signed Catalan numbers)
        let alpha = poly(&[0, 1, 1]);
        let rev = revert_multinomial(&alpha, 5).unwrap();
        let expect = [1, -1, 2, -5, 14];
        for (j, &e) in expect.iter().enumerate() {
            assert_eq!(rev.beta.coeff(j + 1), r(e), "beta_{}", j + 1);
        }
    }

    #[test]
    fn odd_phase_stride() {
        // y = x + x³: nonzero β at odd indices, 1, -1, 3, -12
        let alpha = poly(&[0, 1, 0, 1]);
        let rev = revert_multinomial(&alpha, 7).unwrap();
        assert_eq!(rev.beta.coeff(1), r(1));
        assert_eq!(rev.beta.coeff(3), r(-1));
        assert_eq!(rev.beta.coeff(5), r(3));
        assert_eq!(rev.beta.coeff(7), r(-12));
        for j in [2, 4, 6] {
            assert!(rev.beta.coeff(j).is_zero(), "even beta_{j} must vanish");
        }
    }

    #[test]
    fn methods_agree() {
        for coeffs in [
            vec![0, 1, 1],
            vec![0, 1, 0, 2],
            vec![0, 2, 1, 1],
            vec![0, 1, 2, 1],
            vec![0, 3, 0, 0, 1],
        ] {
            let alpha = poly(&coeffs);
            let a = revert_multinomial(&alpha, 9).unwrap();
            let b = revert_perturbative(&alpha, 9, 20).unwrap();
            assert_eq!(a.beta, b.beta, "alpha = {coeffs:?}");
        }
    }

    #[test]
    fn composition_recovers_identity() {
        let alpha = poly(&[0, 1, 2, 1]);
        let t = 10;
        let rev = revert_multinomial(&alpha, t).unwrap();
        let alpha_series = Series::from_polynomial(&alpha, t);
        let composed = alpha_series.compose(&rev.beta).unwrap();
        assert_eq!(composed.coeff(1), r(1));
        for j in 2..=t {
            assert!(composed.coeff(j).is_zero(), "order {j} must cancel");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(revert_multinomial(&poly(&[1, 1]), 4).is_err());
        assert!(revert_multinomial(&poly(&[0, 0, 1]), 4).is_err());
        assert!(revert_perturbative(&poly(&[0, 0, 1]), 4, 10).is_err());
    }

    #[test]
    fn perturbative_rescaling() {
        // α₁ = 2: β₁ = 1/2 and the composition still telescopes
        let alpha = poly(&[0, 2, 0, 1]);
        let rev = revert_perturbative(&alpha, 8, 20).unwrap();
        assert_eq!(rev.beta.coeff(1), BigRational::new(1.into(), 2.into()));
        let composed = Series::from_polynomial(&alpha, 8)
            .compose(&rev.beta)
            .unwrap();
        assert_eq!(composed.coeff(1), r(1));
        for j in 2..=8 {
            assert!(composed.coeff(j).is_zero());
        }
    }

    #[test]
    fn local_sequences() {
        let kap = local_coeffs(LocalExpansionKind::CubicKappa, 4).values;
        assert_eq!(kap, vec![r(1), r(5), r(66), r(1122)]);
        let lam = local_coeffs(LocalExpansionKind::CubicLambda, 4).values;
        assert_eq!(lam, vec![r(1), r(10), r(154), r(2805)]);
        // λ_n = (1+3n)/(1+n)·κ_n
        for n in 0..4 {
            assert_eq!(
                lam[n],
                kap[n].clone() * BigRational::new((1 + 3 * n as i64).into(), (1 + n as i64).into())
            );
        }
        let eta = local_coeffs(LocalExpansionKind::QuarticEta, 8).values;
        assert_eq!(
            eta,
            vec![r(1), r(3), r(14), r(77), r(462), r(2926), r(19228), r(129789)]
        );
        let binom = local_coeffs(LocalExpansionKind::Quadratic, 5).values;
        assert_eq!(binom, vec![r(1), r(2), r(6), r(20), r(70)]);
        for n in 0..6 {
            assert_eq!(kappa_closed_form(n), local_coeffs(LocalExpansionKind::CubicKappa, n + 1).values[n]);
        }
    }

    #[test]
    fn local_expansion_values() {
        // n = 2, x₀ = 1: 1, -1, 3/2, -5/2, 35/8
        let s = local_expansion(2, 1.0, 4).unwrap();
        let expect = [1.0, -1.0, 1.5, -2.5, 35.0 / 8.0];
        for (j, e) in expect.iter().enumerate() {
            assert!((s.coeff(j).re - e).abs() < 1e-15, "j = {j}");
            assert_eq!(s.coeff(j).im, 0.0);
        }
        // n = 4, x₀ = 2: 1, -6/4, 42/16
        let s = local_expansion(4, 2.0, 3).unwrap();
        let expect = [1.0, -1.5, 42.0 / 16.0];
        for (j, e) in expect.iter().enumerate() {
            assert!((s.coeff(j).re - e).abs() < 1e-15, "j = {j}");
        }
        assert!(local_expansion(3, 0.0, 3).is_err());
        assert!(local_expansion(5, 1.0, 3).is_err());
    }

    #[test]
    fn local_expansion_matches_direct_reversion() {
        // the dε/dy coefficients are (j+1)·β_{j+1} of the substitution series
        let x0 = BigRational::new(3.into(), 2.into());
        // n = 3: y = ε + ε²/x₀ + ε³/(3x₀²)
        let sub = Polynomial::new(vec![
            r(0),
            r(1),
            r(1) / x0.clone(),
            r(1) / (r(3) * x0.clone() * x0.clone()),
        ]);
        let rev = revert_multinomial(&sub, 9).unwrap();
        let s = local_expansion(3, 1.5, 8).unwrap();
        for j in 0..=8 {
            let expect = (rev.beta.coeff(j + 1) * r(j as i64 + 1)).to_f64().unwrap();
            assert!(
                (s.coeff(j).re - expect).abs() < 1e-12 * expect.abs().max(1.0),
                "j = {j}: {} vs {expect}",
                s.coeff(j).re
            );
        }
    }

    #[test]
    fn family_generation_matches_reversion() {
        for family in ReversionFamily::all_unit() {
            let phase = family.phase();
            let rev = revert_multinomial(&phase, 12).unwrap();
            let gamma = family.compress(&rev.beta);
            let generated = family.generate(gamma.len());
            assert_eq!(gamma, generated, "family {family:?}");
        }
    }

    #[test]
    fn family_recurrence_residuals_vanish() {
        for family in ReversionFamily::all_unit() {
            let rev = revert_multinomial(&family.phase(), 12).unwrap();
            let gamma = family.compress(&rev.beta);
            for j in family.min_recurrence_index()..=gamma.len() {
                let resid = family.recurrence_residual(&gamma, j).unwrap();
                assert!(resid.is_zero(), "family {family:?} index {j}: {resid}");
            }
        }
    }

    #[test]
    fn quadratic_family_with_parameter() {
        // β_j = C(2j-2, j-1)(−k)^{j−1}/j for y = x + kx²
        let k = BigRational::new(3.into(), 2.into());
        let fam = ReversionFamily::XPlusKX2 { k: k.clone() };
        let rev = revert_multinomial(&fam.phase(), 8).unwrap();
        let mut binom = BigRational::one();
        for j in 1..=8usize {
            if j > 1 {
                let jj = j as i64;
                binom = binom * r(2 * jj - 2) * r(2 * jj - 3) / (r(jj - 1) * r(jj - 1));
            }
            let expect = binom.clone() * (-k.clone()).pow(j as i32 - 1) / r(j as i64);
            assert_eq!(rev.beta.coeff(j), expect, "j = {j}");
        }
    }
}
