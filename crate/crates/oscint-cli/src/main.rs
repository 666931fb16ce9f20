//! Command-line front end: evaluate oscillatory integrals, reproduce the
//! published coefficient and complete-integral tables, emit curve data, and
//! cross-check the evaluator against the quadrature oracle.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical non-convergence or a
//! failed table reproduction.

mod decimal;
mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use num_rational::BigRational;
use oscint::{
    complete_general, evaluate, neumann_coeffs, oracle_integrate, revert_multinomial,
    revert_perturbative, EvalConfig, Polynomial, ProblemSpec, UpperLimit,
};
use output::{csv_row, fmt17, fmt_complex, human_table, Format};
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::json;
use std::path::PathBuf;

/// Absolute tolerance for table reproduction.
const TABLE_TOL: f64 = 1e-12;

#[derive(Parser)]
#[command(name = "oscint", version, about = "Oscillatory integrals of polynomials against polynomial-phase chirps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct ConfigArgs {
    /// Config file with key=value lines (q_depth, laurent_order,
    /// complete_terms, tol, window_min, window_max, window_points);
    /// flags beat the file, the file beats the defaults
    #[arg(long)]
    config: Option<PathBuf>,
    /// q-iteration depth K
    #[arg(long)]
    q_depth: Option<usize>,
    /// Laurent truncation order T
    #[arg(long)]
    laurent_order: Option<usize>,
    /// complete-integral term budget J
    #[arg(long)]
    complete_terms: Option<usize>,
    /// target tolerance
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    window_min: Option<f64>,
    #[arg(long)]
    window_max: Option<f64>,
    #[arg(long)]
    window_points: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ∫₀ᵘ p(x)·e^{iφ(x)} dx at a finite upper limit
    Eval {
        /// amplitude polynomial ("c0,c1,..." or "1+2x^3-x^5")
        #[arg(long)]
        p: String,
        /// phase polynomial
        #[arg(long)]
        phi: String,
        /// upper limit
        #[arg(long)]
        u: f64,
        #[arg(long, default_value = "human")]
        format: Format,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Complete integral: upper limit ∞
    Complete {
        #[arg(long)]
        p: String,
        #[arg(long)]
        phi: String,
        #[arg(long, default_value = "human")]
        format: Format,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Exact Neumann-Bessel expansion coefficients ξ_{n,s} with prefactor d_n
    NeumannTable {
        /// phase power n in 2..=5
        #[arg(long)]
        n: u32,
        /// number of rows (s = 0..terms-1)
        #[arg(long, default_value_t = 11)]
        terms: usize,
        #[arg(long, default_value = "human")]
        format: Format,
    },
    /// Series reversion coefficients of a phase polynomial, as exact fractions
    ReversionTable {
        /// polynomial with zero constant term and nonzero linear coefficient
        #[arg(long)]
        alpha: String,
        /// highest coefficient index
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// multinomial or perturbative
        #[arg(long, default_value = "multinomial")]
        method: String,
        #[arg(long, default_value = "human")]
        format: Format,
    },
    /// Recompute the published reference tables and compare entry by entry
    PaperTables {
        /// infinity, neumann, or all
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long, default_value = "human")]
        format: Format,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Sample the integral on a grid of upper limits
    Curve {
        #[arg(long)]
        p: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        u_max: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// real, imag, or both
        #[arg(long, default_value = "both")]
        part: String,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Evaluator-vs-oracle deltas, for one problem or a random batch
    Check {
        #[arg(long, required_unless_present = "random")]
        p: Option<String>,
        #[arg(long, required_unless_present = "random")]
        phi: Option<String>,
        #[arg(long, required_unless_present = "random")]
        u: Option<f64>,
        /// run this many random problems instead of one explicit problem
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "human")]
        format: Format,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
}

enum AppError {
    Usage(String),
    Numeric(String),
}

impl From<oscint::Error> for AppError {
    fn from(e: oscint::Error) -> Self {
        match e {
            oscint::Error::Parse(_) | oscint::Error::Domain(_) => AppError::Usage(e.to_string()),
            _ => AppError::Numeric(e.to_string()),
        }
    }
}

fn main() {
    if let Ok(v) = std::env::var("OSCINT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            std::process::exit(code);
        }
    };
    match run(cli.command) {
        Ok(()) => {}
        Err(AppError::Usage(m)) => {
            eprintln!("error: {m}");
            std::process::exit(1);
        }
        Err(AppError::Numeric(m)) => {
            eprintln!("error: {m}");
            std::process::exit(2);
        }
    }
}

fn build_config(args: &ConfigArgs) -> Result<EvalConfig, AppError> {
    let mut cfg = EvalConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AppError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                AppError::Usage(format!("config line {} is not key=value", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            let bad =
                |e: String| AppError::Usage(format!("config line {}: {e}", lineno + 1));
            match key {
                "q_depth" => cfg.q_depth = value.parse().map_err(|e| bad(format!("{e}")))?,
                "laurent_order" => {
                    cfg.laurent_order = value.parse().map_err(|e| bad(format!("{e}")))?
                }
                "complete_terms" => {
                    cfg.complete_terms = value.parse().map_err(|e| bad(format!("{e}")))?
                }
                "tol" => cfg.tol = value.parse().map_err(|e| bad(format!("{e}")))?,
                "window_min" => cfg.window.0 = value.parse().map_err(|e| bad(format!("{e}")))?,
                "window_max" => cfg.window.1 = value.parse().map_err(|e| bad(format!("{e}")))?,
                "window_points" => {
                    cfg.window_points = value.parse().map_err(|e| bad(format!("{e}")))?
                }
                other => return Err(bad(format!("unknown key '{other}'"))),
            }
        }
    }
    if let Some(v) = args.q_depth {
        cfg.q_depth = v;
    }
    if let Some(v) = args.laurent_order {
        cfg.laurent_order = v;
    }
    if let Some(v) = args.complete_terms {
        cfg.complete_terms = v;
    }
    if let Some(v) = args.tol {
        cfg.tol = v;
    }
    if let Some(v) = args.window_min {
        cfg.window.0 = v;
    }
    if let Some(v) = args.window_max {
        cfg.window.1 = v;
    }
    if let Some(v) = args.window_points {
        cfg.window_points = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn parse_poly(text: &str, what: &str) -> Result<Polynomial<f64>, AppError> {
    Polynomial::<f64>::parse(text)
        .map_err(|e| AppError::Usage(format!("{what} '{text}': {e}")))
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Eval { p, phi, u, format, cfg } => {
            let cfg = build_config(&cfg)?;
            let spec = ProblemSpec::new(
                parse_poly(&p, "amplitude")?,
                parse_poly(&phi, "phase")?,
                UpperLimit::Finite(u),
            )?;
            let r = evaluate(&spec, &cfg)?;
            print_result(format, r.value, r.error_estimate, &r.method.to_string());
            Ok(())
        }
        Command::Complete { p, phi, format, cfg } => {
            let cfg = build_config(&cfg)?;
            let spec = ProblemSpec::new(
                parse_poly(&p, "amplitude")?,
                parse_poly(&phi, "phase")?,
                UpperLimit::Infinite,
            )?;
            let r = evaluate(&spec, &cfg)?;
            print_result(format, r.value, r.error_estimate, &r.method.to_string());
            Ok(())
        }
        Command::NeumannTable { n, terms, format } => neumann_table(n, terms, format),
        Command::ReversionTable { alpha, order, method, format } => {
            reversion_table(&alpha, order, &method, format)
        }
        Command::PaperTables { which, format, cfg } => {
            let cfg = build_config(&cfg)?;
            paper_tables(&which, format, &cfg)
        }
        Command::Curve { p, phi, u_max, samples, part, format, cfg } => {
            let cfg = build_config(&cfg)?;
            curve(&p, &phi, u_max, samples, &part, format, &cfg)
        }
        Command::Check { p, phi, u, random, seed, format, cfg } => {
            let cfg = build_config(&cfg)?;
            match random {
                Some(count) => check_random(count, seed, format, &cfg),
                None => {
                    let (p, phi, u) = (p.unwrap(), phi.unwrap(), u.unwrap());
                    check_one(&p, &phi, u, format, &cfg)
                }
            }
        }
    }
}

fn print_result(format: Format, value: Complex64, estimate: f64, method: &str) {
    match format {
        Format::Human => {
            println!("{}", fmt_complex(value));
            println!("error_estimate: {estimate:.3e}");
            println!("method: {method}");
        }
        Format::Csv => {
            println!("re,im,error_estimate,method");
            println!(
                "{}",
                csv_row(&[
                    fmt17(value.re),
                    fmt17(value.im),
                    format!("{estimate:.3e}"),
                    method.to_string(),
                ])
            );
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "re": value.re,
                    "im": value.im,
                    "error_estimate": estimate,
                    "method": method,
                })
            );
        }
    }
}

fn neumann_table(n: u32, terms: usize, format: Format) -> Result<(), AppError> {
    if terms == 0 {
        return Err(AppError::Usage("terms must be positive".into()));
    }
    let exp = neumann_coeffs(n, terms - 1)?;
    let rows: Vec<(usize, &BigRational)> = exp.xi.iter().enumerate().collect();
    match format {
        Format::Human => {
            println!("d_{n} = {}", fmt17(exp.d_n));
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(s, xi)| {
                    vec![
                        s.to_string(),
                        format!("{}/{}", xi.numer(), xi.denom()),
                        decimal::decimal_expansion(xi, 26),
                    ]
                })
                .collect();
            print!("{}", human_table(&["s", "xi", "decimal"], &body));
        }
        Format::Csv => {
            println!("s,numerator,denominator,decimal");
            for (s, xi) in rows {
                println!(
                    "{}",
                    csv_row(&[
                        s.to_string(),
                        xi.numer().to_string(),
                        xi.denom().to_string(),
                        decimal::decimal_expansion(xi, 26),
                    ])
                );
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(s, xi)| {
                    json!({
                        "s": s,
                        "numerator": xi.numer().to_string(),
                        "denominator": xi.denom().to_string(),
                        "decimal": decimal::decimal_expansion(xi, 26),
                    })
                })
                .collect();
            println!("{}", json!({ "n": n, "d": exp.d_n, "rows": rows }));
        }
    }
    Ok(())
}

fn reversion_table(alpha: &str, order: usize, method: &str, format: Format) -> Result<(), AppError> {
    let alpha_exact = Polynomial::<BigRational>::parse(alpha)
        .map_err(|e| AppError::Usage(format!("alpha '{alpha}': {e}")))?;
    let rev = match method {
        "multinomial" => revert_multinomial(&alpha_exact, order)?,
        "perturbative" => revert_perturbative(&alpha_exact, order, order + 8)?,
        other => {
            return Err(AppError::Usage(format!(
                "unknown method '{other}' (multinomial, perturbative)"
            )))
        }
    };
    let rows: Vec<Vec<String>> = (1..=order)
        .map(|j| {
            let b = rev.beta.coeff(j);
            vec![j.to_string(), b.numer().to_string(), b.denom().to_string()]
        })
        .collect();
    match format {
        Format::Human => {
            println!("reversion of {alpha}");
            print!("{}", human_table(&["index", "numerator", "denominator"], &rows));
        }
        Format::Csv => {
            println!("index,numerator,denominator");
            for row in rows {
                println!("{}", csv_row(&row));
            }
        }
        Format::Json => {
            for row in rows {
                println!(
                    "{}",
                    json!({ "index": row[0].parse::<usize>().unwrap(), "numerator": row[1], "denominator": row[2] })
                );
            }
        }
    }
    Ok(())
}

struct TableRow {
    id: String,
    label: String,
    detail: String,
    delta: f64,
    ok: bool,
}

fn infinity_rows(cfg: &EvalConfig) -> Vec<TableRow> {
    oscint::reference::COMPLETE_INTEGRAL_ROWS
        .par_iter()
        .enumerate()
        .map(|(i, (p, phi, re, im))| {
            let pp = Polynomial::<f64>::parse(p).expect("catalog");
            let ff = Polynomial::<f64>::parse(phi).expect("catalog");
            match complete_general(&pp, &ff, cfg.complete_terms.max(250), TABLE_TOL) {
                Ok(ci) => {
                    let delta = (ci.value.re - re).abs().max((ci.value.im - im).abs());
                    TableRow {
                        id: format!("infinity/{i}"),
                        label: format!("{pp} | {ff}"),
                        detail: fmt_complex(ci.value),
                        delta,
                        ok: delta <= TABLE_TOL,
                    }
                }
                Err(e) => TableRow {
                    id: format!("infinity/{i}"),
                    label: format!("{pp} | {ff}"),
                    detail: format!("error: {e}"),
                    delta: f64::INFINITY,
                    ok: false,
                },
            }
        })
        .collect()
}

fn neumann_rows() -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = [3u32, 4, 5]
        .par_iter()
        .flat_map(|&n| {
            let exp = neumann_coeffs(n, 10).expect("n in range");
            let reference = oscint::reference::neumann_xi_reference(n).unwrap();
            let mut out = Vec::new();
            for (s, (num, den)) in reference.iter().enumerate() {
                let expect = BigRational::new((*num).into(), (*den).into());
                let ok = exp.xi[s] == expect;
                out.push(TableRow {
                    id: format!("neumann/{n}/{s}"),
                    label: format!("xi[{n},{s}]"),
                    detail: format!("{}/{}", exp.xi[s].numer(), exp.xi[s].denom()),
                    delta: if ok { 0.0 } else { f64::INFINITY },
                    ok,
                });
            }
            out
        })
        .collect();
    for (n, d) in oscint::reference::NEUMANN_D {
        let exp = neumann_coeffs(n, 0).expect("n in range");
        let delta = ((exp.d_n - d) / d).abs();
        rows.push(TableRow {
            id: format!("neumann/d{n}"),
            label: format!("d_{n}"),
            detail: fmt17(exp.d_n),
            delta,
            ok: delta <= 1e-12,
        });
    }
    rows
}

fn paper_tables(which: &str, format: Format, cfg: &EvalConfig) -> Result<(), AppError> {
    let rows = match which {
        "infinity" => infinity_rows(cfg),
        "neumann" => neumann_rows(),
        "all" => {
            let mut rows = infinity_rows(cfg);
            rows.extend(neumann_rows());
            rows
        }
        other => {
            return Err(AppError::Usage(format!(
                "unknown table selector '{other}' (infinity, neumann, all)"
            )))
        }
    };
    let failures = rows.iter().filter(|r| !r.ok).count();
    match format {
        Format::Human => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        if r.ok { "ok" } else { "FAIL" }.to_string(),
                        r.id.clone(),
                        r.label.clone(),
                        r.detail.clone(),
                        format!("{:.2e}", r.delta),
                    ]
                })
                .collect();
            print!("{}", human_table(&["status", "id", "case", "value", "delta"], &body));
            println!("{} rows, {} failures", rows.len(), failures);
        }
        Format::Csv => {
            println!("status,id,case,value,delta");
            for r in &rows {
                println!(
                    "{}",
                    csv_row(&[
                        if r.ok { "ok" } else { "FAIL" }.to_string(),
                        r.id.clone(),
                        r.label.clone(),
                        r.detail.clone(),
                        format!("{:.2e}", r.delta),
                    ])
                );
            }
        }
        Format::Json => {
            for r in &rows {
                println!(
                    "{}",
                    json!({
                        "status": if r.ok { "ok" } else { "fail" },
                        "id": r.id,
                        "case": r.label,
                        "value": r.detail,
                        "delta": r.delta,
                    })
                );
            }
        }
    }
    if failures > 0 {
        return Err(AppError::Numeric(format!(
            "{failures} table entries deviate beyond tolerance"
        )));
    }
    Ok(())
}

fn curve(
    p: &str,
    phi: &str,
    u_max: f64,
    samples: usize,
    part: &str,
    format: Format,
    cfg: &EvalConfig,
) -> Result<(), AppError> {
    if samples < 2 {
        return Err(AppError::Usage("samples must be at least 2".into()));
    }
    if !(u_max > 0.0) {
        return Err(AppError::Usage("u-max must be positive".into()));
    }
    let (want_re, want_im) = match part {
        "real" => (true, false),
        "imag" => (false, true),
        "both" => (true, true),
        other => {
            return Err(AppError::Usage(format!(
                "unknown part '{other}' (real, imag, both)"
            )))
        }
    };
    let pp = parse_poly(p, "amplitude")?;
    let ff = parse_poly(phi, "phase")?;
    let points: Vec<(f64, Complex64)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let u = u_max * i as f64 / (samples - 1) as f64;
            let spec = ProblemSpec::new(pp.clone(), ff.clone(), UpperLimit::Finite(u))?;
            let r = evaluate(&spec, cfg)?;
            Ok((u, r.value))
        })
        .collect::<Result<Vec<_>, oscint::Error>>()?;
    let header: Vec<&str> = match (want_re, want_im) {
        (true, true) => vec!["u", "re", "im"],
        (true, false) => vec!["u", "re"],
        (false, true) => vec!["u", "im"],
        _ => unreachable!(),
    };
    let to_cells = |(u, v): &(f64, Complex64)| -> Vec<String> {
        let mut cells = vec![fmt17(*u)];
        if want_re {
            cells.push(fmt17(v.re));
        }
        if want_im {
            cells.push(fmt17(v.im));
        }
        cells
    };
    match format {
        Format::Human => {
            let body: Vec<Vec<String>> = points.iter().map(to_cells).collect();
            print!("{}", human_table(&header, &body));
        }
        Format::Csv => {
            println!("{}", header.join(","));
            for pt in &points {
                println!("{}", csv_row(&to_cells(pt)));
            }
        }
        Format::Json => {
            for (u, v) in &points {
                let mut obj = serde_json::Map::new();
                obj.insert("u".into(), json!(u));
                if want_re {
                    obj.insert("re".into(), json!(v.re));
                }
                if want_im {
                    obj.insert("im".into(), json!(v.im));
                }
                println!("{}", serde_json::Value::Object(obj));
            }
        }
    }
    Ok(())
}

struct CheckRow {
    label: String,
    evaluated: Complex64,
    oracle: Complex64,
    delta: f64,
    budget: f64,
    ok: bool,
}

fn run_check(spec: &ProblemSpec, cfg: &EvalConfig) -> Result<CheckRow, oscint::Error> {
    let r = evaluate(spec, cfg)?;
    let o = oracle_integrate(spec, cfg.tol.min(1e-11), 20_000)?;
    let delta = (r.value - o.value).norm();
    let budget = (r.error_estimate + o.abs_error).max(1e-8);
    let u = match spec.limit {
        UpperLimit::Finite(u) => u,
        UpperLimit::Infinite => f64::INFINITY,
    };
    Ok(CheckRow {
        label: format!("{} | {} | u={u}", spec.p, spec.phi),
        evaluated: r.value,
        oracle: o.value,
        delta,
        budget,
        ok: delta <= budget,
    })
}

fn emit_check_rows(rows: &[CheckRow], format: Format) -> Result<(), AppError> {
    let failures = rows.iter().filter(|r| !r.ok).count();
    match format {
        Format::Human => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        if r.ok { "ok" } else { "FAIL" }.to_string(),
                        r.label.clone(),
                        fmt_complex(r.evaluated),
                        fmt_complex(r.oracle),
                        format!("{:.2e}", r.delta),
                        format!("{:.2e}", r.budget),
                    ]
                })
                .collect();
            print!(
                "{}",
                human_table(&["status", "case", "evaluated", "oracle", "delta", "budget"], &body)
            );
        }
        Format::Csv => {
            println!("status,case,eval_re,eval_im,oracle_re,oracle_im,delta,budget");
            for r in rows {
                println!(
                    "{}",
                    csv_row(&[
                        if r.ok { "ok" } else { "FAIL" }.to_string(),
                        r.label.clone(),
                        fmt17(r.evaluated.re),
                        fmt17(r.evaluated.im),
                        fmt17(r.oracle.re),
                        fmt17(r.oracle.im),
                        format!("{:.2e}", r.delta),
                        format!("{:.2e}", r.budget),
                    ])
                );
            }
        }
        Format::Json => {
            for r in rows {
                println!(
                    "{}",
                    json!({
                        "status": if r.ok { "ok" } else { "fail" },
                        "case": r.label,
                        "eval": { "re": r.evaluated.re, "im": r.evaluated.im },
                        "oracle": { "re": r.oracle.re, "im": r.oracle.im },
                        "delta": r.delta,
                        "budget": r.budget,
                    })
                );
            }
        }
    }
    if failures > 0 {
        return Err(AppError::Numeric(format!(
            "{failures} checks beyond the error budget"
        )));
    }
    Ok(())
}

fn check_one(p: &str, phi: &str, u: f64, format: Format, cfg: &EvalConfig) -> Result<(), AppError> {
    let spec = ProblemSpec::new(
        parse_poly(p, "amplitude")?,
        parse_poly(phi, "phase")?,
        UpperLimit::Finite(u),
    )?;
    let row = run_check(&spec, cfg)?;
    emit_check_rows(&[row], format)
}

/// Budget cap for random draws; e^budget is the worst-case series term, so
/// this keeps the draws inside the double-precision window.
const RANDOM_BUDGET: f64 = 14.0;

fn check_random(count: usize, seed: u64, format: Format, cfg: &EvalConfig) -> Result<(), AppError> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let specs: Vec<ProblemSpec> = (0..count)
        .map(|_| oscint::sampling::random_problem(&mut rng, RANDOM_BUDGET))
        .collect();
    let rows: Vec<CheckRow> = specs
        .par_iter()
        .map(|spec| {
            run_check(spec, cfg).unwrap_or_else(|e| CheckRow {
                label: format!("{} | {} | {:?}: {e}", spec.p, spec.phi, spec.limit),
                evaluated: Complex64::new(f64::NAN, f64::NAN),
                oracle: Complex64::new(f64::NAN, f64::NAN),
                delta: f64::INFINITY,
                budget: 0.0,
                ok: false,
            })
        })
        .collect();
    emit_check_rows(&rows, format)
}
