//! `norlund` — batch front end for the exact engine.
//!
//! Subcommands compute Bernoulli/Euler/Nörlund values and polynomials, run
//! the identity verifier over parameter grids, and cross-check the moment
//! representations numerically (quadrature, Monte Carlo, p-adic valuations).
//!
//! Output is line-delimited JSON (`verify` also offers `--format csv|text`).
//! Exact values appear as canonical rational/polynomial text; floats are
//! printed with 17 significant digits. Exit codes: 0 = everything requested
//! passed, 1 = a residual was nonzero or a numeric check missed its
//! tolerance, 2 = usage error (bad flags, malformed values, or a grid that
//! violates an identity's side conditions).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use norlund_core::classical;
use norlund_core::identities::{to_csv, to_json_lines, to_text, verify, Grid, IdentityId};
use norlund_core::norlund::norlund_poly;
use norlund_core::numeric::{
    mc_moment, padic_convergence, quad_moment, recentred_coeff_mass, DensityKind, McConfig,
    PadicConfig, QMode, QuadConfig,
};
use norlund_core::rational::{format_rational, parse_rational, rational_to_f64};
use norlund_core::{NorlundKind, ParamVec, Poly, Rational};

#[derive(Parser)]
#[command(
    name = "norlund",
    version,
    about = "Exact Bernoulli/Euler/Nörlund polynomials, identity verification, and numeric cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bernoulli number B_n, or the polynomial B_n(x)
    Bernoulli(ClassicalArgs),
    /// Euler number E_n = E_n(0), or the polynomial E_n(x)
    Euler(ClassicalArgs),
    /// Higher-order Nörlund number or polynomial for a parameter vector
    Norlund(NorlundArgs),
    /// Verify one catalogued identity over a parameter grid
    Verify(VerifyArgs),
    /// Gauss-Legendre moment check of the n-th moment against the exact value
    Quad(QuadArgs),
    /// Seeded Monte Carlo moment check against the exact value
    Mc(McArgs),
    /// Truncated Volkenborn sums and their p-adic convergence
    Padic(PadicArgs),
}

#[derive(Args)]
struct ClassicalArgs {
    /// Degree n
    #[arg(long)]
    n: usize,
    /// Evaluate at this rational point (canonical "p/q" text)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Also emit the full polynomial (coefficients low-to-high)
    #[arg(long)]
    poly: bool,
}

#[derive(Args)]
struct NorlundArgs {
    /// Family: `b` (Bernoulli) or `e` (Euler)
    #[arg(long)]
    kind: String,
    /// Parameter vector: comma-separated rationals, e.g. `2,-1/3,1`
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Degree n
    #[arg(long)]
    n: usize,
    /// Evaluate at this rational point (canonical "p/q" text)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Also emit the full polynomial (coefficients low-to-high)
    #[arg(long)]
    poly: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name, e.g. `RAABE_B` (case and -/_ interchangeable)
    #[arg(long, value_name = "IDENTITY_ID")]
    id: String,
    /// Override the grid's maximum n
    #[arg(long = "n-max")]
    n_max: Option<u64>,
    /// Override the grid's maximum k
    #[arg(long = "k-max")]
    k_max: Option<u64>,
    /// Override the grid's order values to 1..=p-max
    #[arg(long = "p-max")]
    p_max: Option<u64>,
    /// Override the grid's dilation factors (comma-separated integers)
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<u64>>,
    /// Restrict the grid to this single parameter vector
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Output format
    #[arg(long, default_value = "json", value_parser = ["json", "csv", "text"])]
    format: String,
}

#[derive(Args)]
struct QuadArgs {
    /// Density: `logistic` (Bernoulli side) or `sech` (Euler side)
    #[arg(long)]
    kind: String,
    /// Moment order: the integrand polynomial is x^n
    #[arg(long)]
    n: usize,
    /// Evaluation point (canonical "p/q" text)
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Absolute tolerance the truncation bound must certify
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Override the automatic Gauss-Legendre node count
    #[arg(long)]
    nodes: Option<usize>,
    /// Override the automatic truncation half-width T
    #[arg(long = "T", allow_hyphen_values = true)]
    truncation: Option<f64>,
}

#[derive(Args)]
struct McArgs {
    /// Density: `logistic` (Bernoulli side) or `sech` (Euler side)
    #[arg(long)]
    kind: String,
    /// Moment order: the integrand polynomial is x^n
    #[arg(long)]
    n: usize,
    /// Evaluation point (canonical "p/q" text)
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Number of samples (≥ 2)
    #[arg(long)]
    samples: u64,
    /// RNG seed; identical (seed, samples) reproduce bit-identical output
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct PadicArgs {
    /// Sum family: `zero` (Bernoulli target) or `fermionic` (Euler target)
    #[arg(long)]
    mode: String,
    /// Prime p (fermionic mode requires odd p)
    #[arg(long = "p")]
    prime: u64,
    /// Exponent n of the summand x^n
    #[arg(long)]
    n: u32,
    /// Largest truncation depth N (sums run over x < p^N)
    #[arg(long = "N-max")]
    depth_max: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(true)` = exit 0, `Ok(false)` = a requested check failed (exit 1),
/// `Err` = usage/configuration error (exit 2).
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Bernoulli(args) => classical_cmd(NorlundKind::Bernoulli, &args),
        Command::Euler(args) => classical_cmd(NorlundKind::Euler, &args),
        Command::Norlund(args) => norlund_cmd(&args),
        Command::Verify(args) => verify_cmd(&args),
        Command::Quad(args) => quad_cmd(&args),
        Command::Mc(args) => mc_cmd(&args),
        Command::Padic(args) => padic_cmd(&args),
    }
}

fn classical_cmd(kind: NorlundKind, args: &ClassicalArgs) -> Result<bool, String> {
    let poly = match kind {
        NorlundKind::Bernoulli => classical::bernoulli_poly(args.n),
        NorlundKind::Euler => classical::euler_poly(args.n),
    };
    let x = parse_optional_rational(args.x.as_deref())?;
    let mut line = format!("{{\"n\":{}", args.n);
    push_point_and_value(&mut line, &poly, x.as_ref(), args.poly);
    println!("{line}");
    Ok(true)
}

fn norlund_cmd(args: &NorlundArgs) -> Result<bool, String> {
    let kind = parse_kind(&args.kind)?;
    let a: ParamVec = args.a.parse().map_err(stringify)?;
    let poly = norlund_poly(kind, &a, args.n);
    let x = parse_optional_rational(args.x.as_deref())?;
    let mut line = format!("{{\"kind\":\"{}\",\"a\":\"{}\",\"n\":{}", kind.tag(), a, args.n);
    push_point_and_value(&mut line, &poly, x.as_ref(), args.poly);
    println!("{line}");
    Ok(true)
}

/// Shared tail of the compute commands: optional `x`, the value (at `x`, or
/// the constant term when `x` is absent), and optionally the polynomial.
fn push_point_and_value(line: &mut String, poly: &Poly, x: Option<&Rational>, with_poly: bool) {
    if let Some(x) = x {
        line.push_str(&format!(",\"x\":\"{}\"", format_rational(x)));
    }
    let value = match x {
        Some(x) => poly.eval(x),
        None => poly.coeff(0),
    };
    line.push_str(&format!(",\"value\":\"{}\"", format_rational(&value)));
    if with_poly {
        line.push_str(&format!(",\"poly\":\"{poly}\""));
    }
    line.push('}');
}

fn verify_cmd(args: &VerifyArgs) -> Result<bool, String> {
    let id: IdentityId = args.id.parse().map_err(stringify)?;
    let mut grid = Grid::default_for(id);
    if let Some(n_max) = args.n_max {
        grid.n_max = n_max;
    }
    if let Some(k_max) = args.k_max {
        grid.k_max = k_max;
    }
    if let Some(p_max) = args.p_max {
        if p_max == 0 {
            return Err("--p-max must be at least 1".to_string());
        }
        grid.p_values = (1..=p_max).collect();
    }
    if let Some(ms) = &args.m {
        validate_m_values(id, ms)?;
        grid.m_values = ms.clone();
    }
    if let Some(a) = &args.a {
        grid.a_vectors = vec![a.parse().map_err(stringify)?];
    }
    let report = verify(id, &grid);
    match args.format.as_str() {
        "csv" => print!("{}", to_csv(&report)),
        "text" => print!("{}", to_text(&report)),
        _ => {
            for line in to_json_lines(&report) {
                println!("{line}");
            }
        }
    }
    Ok(report.summary.fail == 0)
}

/// Side conditions on the dilation factor are usage errors, caught before
/// any tuple is enumerated.
fn validate_m_values(id: IdentityId, ms: &[u64]) -> Result<(), String> {
    for &m in ms {
        if m == 0 {
            return Err("--m entries must be at least 1".to_string());
        }
        if id == IdentityId::RaabeEOdd && m % 2 == 0 {
            return Err(format!("--m {m} is even; {} requires odd m", id.name()));
        }
        if matches!(id, IdentityId::NielsenEven | IdentityId::EvenRaabeHigher) && m % 2 == 1 {
            return Err(format!("--m {m} is odd; {} requires even m", id.name()));
        }
    }
    Ok(())
}

fn quad_cmd(args: &QuadArgs) -> Result<bool, String> {
    let kind = parse_density(&args.kind)?;
    let x = parse_rational(&args.x).map_err(stringify)?;
    let poly = Poly::monomial(args.n);
    let mass = recentred_coeff_mass(&poly, &x);
    let mut cfg = QuadConfig::auto_for_mass(kind, args.n as u32, mass, args.tol);
    cfg.tol = args.tol;
    if let Some(nodes) = args.nodes {
        cfg.nodes = nodes;
    }
    if let Some(truncation) = args.truncation {
        cfg.truncation = truncation;
    }
    let moment = quad_moment(kind, &poly, &x, &cfg).map_err(stringify)?;
    let exact = exact_moment(kind, args.n, &x);
    let abs_error = (moment.estimate - rational_to_f64(&exact)).abs();
    let pass = abs_error < args.tol && moment.imag_residual < args.tol;
    println!(
        "{{\"kind\":\"{}\",\"n\":{},\"x\":\"{}\",\"truncation\":{},\"nodes\":{},\"tol\":{},\"estimate\":{},\"imag_residual\":{},\"tail_bound\":{},\"exact\":\"{}\",\"abs_error\":{},\"pass\":{}}}",
        kind.tag(),
        args.n,
        format_rational(&x),
        fmt_f64(cfg.truncation),
        cfg.nodes,
        fmt_f64(cfg.tol),
        fmt_f64(moment.estimate),
        fmt_f64(moment.imag_residual),
        fmt_f64(moment.tail_bound),
        format_rational(&exact),
        fmt_f64(abs_error),
        pass
    );
    Ok(pass)
}

fn mc_cmd(args: &McArgs) -> Result<bool, String> {
    let kind = parse_density(&args.kind)?;
    let x = parse_rational(&args.x).map_err(stringify)?;
    let cfg = McConfig { samples: args.samples, seed: args.seed };
    let est = mc_moment(kind, &Poly::monomial(args.n), &x, &cfg).map_err(stringify)?;
    let exact = exact_moment(kind, args.n, &x);
    let exact_f64 = rational_to_f64(&exact);
    let abs_error = (est.estimate - exact_f64).abs();
    // Zero-variance cases (degree <= 1, where the real part of every sample
    // is the same constant) must match up to f64 representation noise;
    // otherwise the usual four-standard-error band applies.
    let pass = if est.std_error == 0.0 {
        abs_error <= 1e-12 * exact_f64.abs().max(1.0)
    } else {
        abs_error <= 4.0 * est.std_error
    };
    println!(
        "{{\"kind\":\"{}\",\"n\":{},\"x\":\"{}\",\"samples\":{},\"seed\":{},\"estimate\":{},\"std_error\":{},\"exact\":\"{}\",\"abs_error\":{},\"pass\":{}}}",
        kind.tag(),
        args.n,
        format_rational(&x),
        args.samples,
        args.seed,
        fmt_f64(est.estimate),
        fmt_f64(est.std_error),
        format_rational(&exact),
        fmt_f64(abs_error),
        pass
    );
    Ok(pass)
}

fn padic_cmd(args: &PadicArgs) -> Result<bool, String> {
    let mode = match args.mode.trim().to_ascii_lowercase().as_str() {
        "zero" => QMode::Zero,
        "fermionic" => QMode::Fermionic,
        other => {
            return Err(format!(
                "unknown --mode `{other}` (expected `zero` or `fermionic`)"
            ))
        }
    };
    let cfg = PadicConfig {
        prime: args.prime,
        n: args.n,
        depth_max: args.depth_max,
        mode,
    };
    let table = padic_convergence(&cfg).map_err(stringify)?;
    let target = match mode {
        QMode::Zero => classical::bernoulli_number(args.n as usize),
        QMode::Fermionic => classical::euler_number(args.n as usize),
    };
    let mut nondecreasing = true;
    let mut previous = i64::MIN;
    for row in &table {
        let current = row.valuation.unwrap_or(i64::MAX);
        if current < previous {
            nondecreasing = false;
        }
        previous = current;
        let valuation = match row.valuation {
            Some(v) => v.to_string(),
            None => "\"+inf\"".to_string(),
        };
        println!(
            "{{\"mode\":\"{}\",\"p\":{},\"n\":{},\"N\":{},\"sum\":\"{}\",\"valuation\":{}}}",
            mode.tag(),
            args.prime,
            args.n,
            row.depth,
            format_rational(&row.sum),
            valuation
        );
    }
    println!(
        "{{\"mode\":\"{}\",\"p\":{},\"n\":{},\"target\":\"{}\",\"nondecreasing\":{}}}",
        mode.tag(),
        args.prime,
        args.n,
        format_rational(&target),
        nondecreasing
    );
    Ok(nondecreasing)
}

fn exact_moment(kind: DensityKind, n: usize, x: &Rational) -> Rational {
    match kind {
        DensityKind::Logistic => classical::bernoulli_poly(n).eval(x),
        DensityKind::Sech => classical::euler_poly(n).eval(x),
    }
}

fn parse_kind(text: &str) -> Result<NorlundKind, String> {
    match text.trim().to_ascii_lowercase().as_str() {
        "b" => Ok(NorlundKind::Bernoulli),
        "e" => Ok(NorlundKind::Euler),
        other => Err(format!("unknown --kind `{other}` (expected `b` or `e`)")),
    }
}

fn parse_density(text: &str) -> Result<DensityKind, String> {
    text.parse::<DensityKind>().map_err(stringify)
}

fn parse_optional_rational(text: Option<&str>) -> Result<Option<Rational>, String> {
    text.map(|t| parse_rational(t).map_err(stringify)).transpose()
}

/// 17 significant decimal digits, the documented float precision.
fn fmt_f64(value: f64) -> String {
    if value.is_finite() {
        format!("{value:.16e}")
    } else {
        "null".to_string()
    }
}

fn stringify(error: impl std::fmt::Display) -> String {
    error.to_string()
}
