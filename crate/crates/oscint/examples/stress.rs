//! Sweep many random problems, measuring true error against the reported
//! estimate; prints the worst ratios.

use oscint::*;
use rand::SeedableRng;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let per_seed: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(60);
    let seeds: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    let budget: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(14.0);
    let deep = args.get(4).map(|s| s == "deep").unwrap_or(false);
    let cfg = if deep {
        EvalConfig { q_depth: 70, laurent_order: 14, complete_terms: 600, tol: 1e-11, ..Default::default() }
    } else {
        EvalConfig::default()
    };
    let mut worst_ratio = 0.0f64;
    let mut worst_label = String::new();
    let mut fails = 0usize;
    let mut dead = 0usize;
    let mut max_delta_over_floor = 0.0f64;
    for seed in 1..=seeds {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for i in 0..per_seed {
            let spec = sampling::random_problem(&mut rng, budget);
            let o = match oracle_integrate(&spec, 1e-12, 20_000) { Ok(o) => o, Err(e) => { println!("oracle fail: {e}"); continue } };
            match evaluate(&spec, &cfg) {
                Ok(r) => {
                    let delta = (r.value - o.value).norm();
                    let allowed = (r.error_estimate + o.abs_error).max(1e-8);
                    let ratio = delta / allowed;
                    if ratio > worst_ratio {
                        worst_ratio = ratio;
                        worst_label = format!("seed {seed} #{i} {} | {} | {:?} method {} delta {delta:.2e} est {:.2e}", spec.p, spec.phi, spec.limit, r.method, r.error_estimate);
                    }
                    if delta > allowed { fails += 1; println!("FAIL {}", worst_label); }
                    max_delta_over_floor = max_delta_over_floor.max(delta);
                }
                Err(Error::DeadZone { u, q_estimate, asym_estimate }) => {
                    dead += 1;
                    println!("DEAD seed {seed} #{i} u={u:.3} q={q_estimate:.1e} a={asym_estimate:.1e} {} | {}", spec.p, spec.phi);
                }
                Err(e) => { dead += 1; println!("ERR seed {seed} #{i}: {e} {} | {}", spec.p, spec.phi); }
            }
        }
    }
    println!("== {} draws, {fails} failures, {dead} dead; worst ratio {worst_ratio:.3}", per_seed * seeds as usize);
    println!("worst: {worst_label}");
    println!("max abs delta: {max_delta_over_floor:.2e}");
}
