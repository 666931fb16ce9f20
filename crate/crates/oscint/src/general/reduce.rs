//! Problem reductions applied before any series machinery runs:
//! constant-phase extraction, the odd-p/even-φ substitution y = x², lowering
//! deg p below deg φ' by polynomial division plus partial integration, and
//! completing the square for quadratic phases.

use crate::error::{Error, Result};
use crate::general::{ProblemSpec, UpperLimit};
use crate::poly::Polynomial;
use num_complex::Complex64;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct WeightedProblem {
    pub weight: Complex64,
    pub spec: ProblemSpec,
}

/// prefactor · (Σ weightₖ·I(subproblemₖ) + boundary) equals the original
/// integral; the reassembly identity is exercised against the quadrature
/// oracle in the tests.
#[derive(Clone, Debug)]
pub struct ReducedProblem {
    pub prefactor: Complex64,
    pub boundary: Complex64,
    pub subproblems: Vec<WeightedProblem>,
}

fn strip_constant(phi: &Polynomial<f64>) -> (f64, Polynomial<f64>) {
    let a0 = phi.coeff(0);
    if a0 == 0.0 {
        return (0.0, phi.clone());
    }
    let mut coeffs = phi.coeffs().to_vec();
    coeffs[0] = 0.0;
    (a0, Polynomial::new(coeffs))
}

fn is_pure_power(phi: &Polynomial<f64>) -> bool {
    match phi.degree() {
        Some(d) => phi.coeffs().iter().take(d).all(|c| *c == 0.0),
        None => false,
    }
}

pub fn reduce(spec: &ProblemSpec) -> Result<ReducedProblem> {
    let (a0, phi) = strip_constant(&spec.phi);
    let mut out = ReducedProblem {
        prefactor: Complex64::new(0.0, a0).exp(),
        boundary: Complex64::zero(),
        subproblems: Vec::new(),
    };
    descend(&spec.p, &phi, spec.limit, Complex64::new(1.0, 0.0), &mut out)?;
    Ok(out)
}

fn push(out: &mut ReducedProblem, p: Polynomial<f64>, phi: Polynomial<f64>, limit: UpperLimit, weight: Complex64) {
    out.subproblems.push(WeightedProblem {
        weight,
        spec: ProblemSpec {
            p,
            phi,
            limit,
        },
    });
}

fn descend(
    p: &Polynomial<f64>,
    phi: &Polynomial<f64>,
    limit: UpperLimit,
    weight: Complex64,
    out: &mut ReducedProblem,
) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    // substitutions may reintroduce a constant phase term
    let (a0, phi) = strip_constant(phi);
    let weight = weight * Complex64::new(0.0, a0).exp();
    let l = phi
        .degree()
        .ok_or_else(|| Error::Domain("phase reduced to a constant".into()))?;

    // odd p against an even phase: substitute y = x²
    let even_phi = phi.even_part_in_square();
    let mut p = p.clone();
    if let Some(phi_y) = even_phi {
        let (p_even, p_odd) = p.split_parity();
        if !p_odd.is_zero() {
            let g = p_odd.odd_part_in_square().expect("odd split");
            let new_limit = match limit {
                UpperLimit::Finite(u) => UpperLimit::Finite(u * u),
                UpperLimit::Infinite => UpperLimit::Infinite,
            };
            descend(&g, &phi_y, new_limit, weight * 0.5, out)?;
            if p_even.is_zero() {
                return Ok(());
            }
            p = p_even;
        }
    }

    if is_pure_power(&phi) {
        push(out, p, phi, limit, weight);
        return Ok(());
    }

    // lower deg p below deg φ' by division and partial integration
    if let UpperLimit::Finite(u) = limit {
        let dphi = phi.derivative();
        let need = dphi.degree().unwrap_or(0);
        if p.degree().unwrap_or(0) >= need {
            let (pbar, r) = p.div_rem(&dphi)?;
            let phase_u = Complex64::new(0.0, phi.eval(&u)).exp();
            let jump = pbar.eval(&u) * phase_u - pbar.eval(&0.0);
            out.boundary += weight * Complex64::new(0.0, -1.0) * jump;
            descend(&r, &phi, limit, weight, out)?;
            descend(
                &pbar.derivative(),
                &phi,
                limit,
                weight * Complex64::new(0.0, 1.0),
                out,
            )?;
            return Ok(());
        }
    }

    // quadratic phase: complete the square, leaving pure-power kernels
    if l == 2 {
        let a2 = phi.coeff(2);
        let a1 = phi.coeff(1);
        let b = a1 / (2.0 * a2);
        let w = weight * Complex64::new(0.0, -a1 * a1 / (4.0 * a2)).exp();
        let shifted = p.translate(&-b);
        let square = Polynomial::monomial(a2, 2);
        match limit {
            UpperLimit::Finite(u) => {
                push(out, shifted.clone(), square.clone(), UpperLimit::Finite(u + b), w);
                push(out, shifted, square, UpperLimit::Finite(b), -w);
            }
            UpperLimit::Infinite => {
                push(out, shifted.clone(), square.clone(), UpperLimit::Infinite, w);
                push(out, shifted, square, UpperLimit::Finite(b), -w);
            }
        }
        return Ok(());
    }

    push(out, p, phi, limit, weight);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_integrate;

    fn spec(p: &str, phi: &str, u: f64) -> ProblemSpec {
        ProblemSpec::new(
            Polynomial::<f64>::parse(p).unwrap(),
            Polynomial::<f64>::parse(phi).unwrap(),
            UpperLimit::Finite(u),
        )
        .unwrap()
    }

    /// reassemble via the oracle on every subproblem
    fn reassemble(red: &ReducedProblem) -> Complex64 {
        let mut acc = red.boundary;
        for wp in &red.subproblems {
            let u = match wp.spec.limit {
                UpperLimit::Finite(u) => u,
                UpperLimit::Infinite => panic!("finite test"),
            };
            // oracle needs u ≥ 0; fold a negative limit by parity of the integrand
            let r = if u >= 0.0 {
                oracle_integrate(&wp.spec, 1e-13, 4000).unwrap().value
            } else {
                let reflected = ProblemSpec {
                    p: Polynomial::new(
                        wp.spec
                            .p
                            .coeffs()
                            .iter()
                            .enumerate()
                            .map(|(k, c)| if k % 2 == 0 { -c } else { *c })
                            .collect(),
                    ),
                    phi: Polynomial::new(
                        wp.spec
                            .phi
                            .coeffs()
                            .iter()
                            .enumerate()
                            .map(|(k, c)| if k % 2 == 1 { -c } else { *c })
                            .collect(),
                    ),
                    limit: UpperLimit::Finite(-u),
                };
                oracle_integrate(&reflected, 1e-13, 4000).unwrap().value
            };
            acc += wp.weight * r;
        }
        red.prefactor * acc
    }

    #[test]
    fn constant_term_becomes_prefactor() {
        let red = reduce(&spec("1", "2+x^3", 1.0)).unwrap();
        assert!((red.prefactor - Complex64::new(0.0, 2.0).exp()).norm() < 1e-15);
        assert_eq!(red.subproblems.len(), 1);
        assert_eq!(red.subproblems[0].spec.phi.coeff(0), 0.0);
        let direct = oracle_integrate(&spec("1", "2+x^3", 1.0), 1e-13, 4000)
            .unwrap()
            .value;
        assert!((reassemble(&red) - direct).norm() < 1e-11);
    }

    #[test]
    fn odd_amplitude_even_phase_substitutes() {
        // p = x, φ = x⁴ → ½·(m=0, n=2) on [0, u²]
        let red = reduce(&spec("x", "x^4", 1.4)).unwrap();
        assert_eq!(red.subproblems.len(), 1);
        let wp = &red.subproblems[0];
        assert!((wp.weight - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert_eq!(wp.spec.phi.degree(), Some(2));
        match wp.spec.limit {
            UpperLimit::Finite(u) => assert!((u - 1.96).abs() < 1e-12),
            _ => panic!(),
        }
        let direct = oracle_integrate(&spec("x", "x^4", 1.4), 1e-13, 4000)
            .unwrap()
            .value;
        assert!((reassemble(&red) - direct).norm() < 1e-11);
    }

    #[test]
    fn division_reduction_with_boundary_terms() {
        // p = x³, φ = x + x⁴: p̄ = ¼, r = −¼
        let s = spec("x^3", "x+x^4", 1.5);
        let red = reduce(&s).unwrap();
        assert!(red.boundary.norm() > 0.0);
        for wp in &red.subproblems {
            let dp = wp.spec.p.degree().unwrap_or(0);
            let dphi = wp.spec.phi.derivative().degree().unwrap();
            assert!(dp < dphi, "deg p must drop below deg φ'");
        }
        let direct = oracle_integrate(&s, 1e-13, 6000).unwrap().value;
        assert!((reassemble(&red) - direct).norm() < 1e-11);
    }

    #[test]
    fn quadratic_completes_square() {
        let s = spec("1+x", "x+x^2", 1.1);
        let red = reduce(&s).unwrap();
        assert_eq!(red.subproblems.len(), 2);
        for wp in &red.subproblems {
            assert!(is_pure_power(&wp.spec.phi));
            assert_eq!(wp.spec.phi.degree(), Some(2));
        }
        let direct = oracle_integrate(&s, 1e-13, 6000).unwrap().value;
        assert!((reassemble(&red) - direct).norm() < 1e-10);
    }

    #[test]
    fn mixed_reductions_reassemble() {
        for (p, phi, u) in [
            ("x^4+x", "x^2+x^4", 1.3),
            ("x^5", "x+x^3", 1.2),
            ("1+x+x^2", "2x+x^2", 0.9),
            ("x^2", "1+x+x^4", 1.6),
        ] {
            let s = spec(p, phi, u);
            let red = reduce(&s).unwrap();
            let direct = oracle_integrate(&s, 1e-13, 8000).unwrap().value;
            assert!(
                (reassemble(&red) - direct).norm() < 1e-10,
                "p={p} phi={phi} u={u}"
            );
        }
    }
}
