//! Randomized problem generation for validation runs: random polynomial
//! phases and amplitudes with the upper limit kept inside the window where
//! double-precision series evaluation is meaningful.

use crate::general::{ProblemSpec, UpperLimit};
use crate::poly::Polynomial;
use rand::Rng;

/// Σ_j |α_j| u^j, the growth scale that drives both the q-iteration depth
/// and the rounding floor; e^budget is the worst-case term size.
pub fn oscillation_budget(phi: &Polynomial<f64>, u: f64) -> f64 {
    phi.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| c.abs() * u.powi(j as i32))
        .sum()
}

/// A random finite-u problem: deg φ ≤ 5 with coefficients in [−2, 2] and the
/// leading one bounded away from zero, deg p ≤ 3 with coefficients in
/// [−2, 2], u in [0.1, 2.5] shortened where needed to keep the oscillation
/// budget under `max_budget`.
pub fn random_problem(rng: &mut impl Rng, max_budget: f64) -> ProblemSpec {
    let deg_phi = rng.gen_range(1..=5usize);
    let mut phi = vec![0.0; deg_phi + 1];
    for c in phi.iter_mut().take(deg_phi) {
        *c = rng.gen_range(-2.0..=2.0);
    }
    loop {
        let lead: f64 = rng.gen_range(-2.0..=2.0);
        if lead.abs() >= 0.25 {
            phi[deg_phi] = lead;
            break;
        }
    }
    let phi = Polynomial::new(phi);

    let deg_p = rng.gen_range(0..=3usize);
    let mut p = vec![0.0; deg_p + 1];
    for c in p.iter_mut() {
        *c = rng.gen_range(-2.0..=2.0);
    }
    if p.iter().all(|c| *c == 0.0) {
        p[0] = 1.0;
    }

    // largest admissible u: the budget grows monotonically in u
    let mut u_cap: f64 = 2.5;
    if oscillation_budget(&phi, u_cap) > max_budget {
        let (mut lo, mut hi) = (0.1, u_cap);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if oscillation_budget(&phi, mid) > max_budget {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        u_cap = lo.max(0.1);
    }
    let u = rng.gen_range(0.1..=u_cap.max(0.1 + 1e-9));
    ProblemSpec::new(Polynomial::new(p), phi, UpperLimit::Finite(u))
        .expect("construction respects the invariants")
}
