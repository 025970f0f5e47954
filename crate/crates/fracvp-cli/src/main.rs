//! `fracvp` — command-line calculators for interval-length inequalities of
//! fractional boundary-value problems and for zero-free radii of
//! Mittag-Leffler functions, with a brute-force zero scanner to cross-check
//! every certified radius.
//!
//! Reports are JSON by default (floats at 17 significant digits so they
//! re-parse bit-exactly), CSV for `sweep`, and plain text for `verify`.
//! Identical invocations produce identical output bytes.
//!
//! Exit codes: 0 success, 1 domain error, 2 verification failure, 3 parse
//! error. Every failure prints a single machine-parseable line on stderr of
//! the form `error: <class>: <reason>`.

// Guards of the form `!(x > 0.0)` intentionally reject NaN together with
// the out-of-range values; `x <= 0.0` would let NaN through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod checks;

use std::fs;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracvp::bounds::{self, BoundBranch, BoundReport, ProblemSpec};
use fracvp::fracops::{OrderPair, RealFn};
use fracvp::quad::{integrate_points, QuadConfig, QuadPoint};
use fracvp::report::fmt_float;
use fracvp::specfun::ml_eval_detailed;
use fracvp::specfun::MlParams;
use fracvp::zeros;

/// Fixed scan window used by `sweep` rows, matching the verification suite.
const SWEEP_LAMBDA_MAX: f64 = 60.0;
const SWEEP_REFINE_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "fracvp",
    version,
    about = "Interval-length inequality calculators and Mittag-Leffler zero-free radii"
)]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate E_(order,shift)(arg) with a certified truncation bound.
    #[command(name = "ml-eval", allow_negative_numbers = true)]
    MlEval {
        /// Series order (> 0).
        #[arg(long)]
        order: f64,
        /// Series shift (> 0).
        #[arg(long)]
        shift: f64,
        /// Evaluation point (|arg| <= 200).
        #[arg(long)]
        arg: f64,
    },
    /// Scan λ ∈ (0, lambda-max] for the first zero of E_(order,shift)(−λ).
    #[command(name = "ml-zero")]
    MlZero {
        /// Series order, in [1, 2].
        #[arg(long)]
        order: f64,
        /// Series shift, in [1, 2].
        #[arg(long)]
        shift: f64,
        /// Upper end of the scanned λ range (<= 200).
        #[arg(long = "lambda-max")]
        lambda_max: f64,
        /// Bisection refinement width for a found zero.
        #[arg(long)]
        tol: f64,
    },
    /// Evaluate one interval-length bound and report its decomposition.
    Bound(BoundArgs),
    /// Zero-free radius calculators for the Mittag-Leffler families.
    Radius(RadiusArgs),
    /// Implicit constants computed to a requested tolerance.
    #[command(name = "const")]
    Const(ConstArgs),
    /// CSV sweep over an order grid comparing certified radii with the
    /// zero scanner (λ window (0, 60], refinement 1e-9).
    Sweep(SweepArgs),
    /// Run the full invariant suite and report pass/fail counts.
    Verify,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    /// Classical constant-coefficient bound: 1 < M1(b−a) + M2(b−a)²/2.
    Vp,
    /// First-order damping bound (β = 1 written out directly).
    Hw,
    /// Mixed-order bound for x'' + g·D^β x + f·x = 0, 0 < β <= 1.
    Thm31,
    /// Fractional-leading bound for D^α x + g·D^β x + f·x = 0.
    Main,
    /// Eigenvalue-style threshold Γ(α)(4/(b−a))^(α−1) against ∫|f|.
    Lyapunov,
}

impl BoundKind {
    fn name(self) -> &'static str {
        match self {
            BoundKind::Vp => "vp",
            BoundKind::Hw => "hw",
            BoundKind::Thm31 => "thm31",
            BoundKind::Main => "main",
            BoundKind::Lyapunov => "lyapunov",
        }
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct BoundArgs {
    /// Which inequality to evaluate.
    #[arg(value_enum)]
    kind: BoundKind,
    /// Left interval endpoint.
    #[arg(long)]
    a: f64,
    /// Right interval endpoint.
    #[arg(long)]
    b: f64,
    /// Leading order α (required by `main` and `lyapunov`; fixed at 2 for
    /// the integer-leading kinds).
    #[arg(long)]
    alpha: Option<f64>,
    /// Damping order β (required by `thm31` and `main`; fixed at 1 for
    /// `vp` and `hw`).
    #[arg(long)]
    beta: Option<f64>,
    /// Constant damping coefficient g.
    #[arg(long = "g-const", conflicts_with = "g_csv")]
    g_const: Option<f64>,
    /// Tabulated damping coefficient g from a CSV file (header `t,value`).
    #[arg(long = "g-csv", value_name = "PATH")]
    g_csv: Option<PathBuf>,
    /// Constant potential coefficient f.
    #[arg(long = "f-const", conflicts_with = "f_csv")]
    f_const: Option<f64>,
    /// Tabulated potential coefficient f from a CSV file (header `t,value`).
    #[arg(long = "f-csv", value_name = "PATH")]
    f_csv: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RadiusKind {
    /// Γ(α)·α^α/(α−1)^(α−1) for E_(α,2).
    Thm69,
    /// Γ(α)(1+α) for E_(α,2); null above the threshold order.
    Improved,
    /// The larger of the two radii above.
    Best,
    /// Γ(α−β)/max{∫Δ, B(α−β,α)} for E_(α−β,α); needs --beta.
    Nu,
}

#[derive(Args)]
struct RadiusArgs {
    /// Which radius to compute.
    #[arg(value_enum)]
    kind: RadiusKind,
    /// Leading order α in (1, 2].
    #[arg(long)]
    alpha: f64,
    /// Damping order β (only `nu` takes it).
    #[arg(long)]
    beta: Option<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ConstKind {
    /// The unique order in (1, 2) where x^x/(x−1)^(x−1) crosses x + 1.
    AlphaBar,
}

#[derive(Args)]
struct ConstArgs {
    /// Which constant to compute.
    #[arg(value_enum)]
    kind: ConstKind,
    /// Bisection tolerance.
    #[arg(long)]
    tol: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// First α of the grid.
    #[arg(long = "alpha-from")]
    alpha_from: f64,
    /// Last α of the grid (inclusive up to rounding).
    #[arg(long = "alpha-to")]
    alpha_to: f64,
    /// α increment (> 0).
    #[arg(long = "alpha-step")]
    alpha_step: f64,
    /// First β of the grid (enables the two-order family columns).
    #[arg(long = "beta-from")]
    beta_from: Option<f64>,
    /// Last β of the grid.
    #[arg(long = "beta-to")]
    beta_to: Option<f64>,
    /// β increment (> 0).
    #[arg(long = "beta-step")]
    beta_step: Option<f64>,
}

/// A failed invocation, by exit class.
enum Failure {
    /// Exit 1: arguments parse but violate a precondition, or I/O failed.
    Domain(String),
    /// Exit 3: the request itself is malformed.
    Parse(String),
}

impl From<fracvp::Error> for Failure {
    fn from(err: fracvp::Error) -> Self {
        Failure::Domain(err.to_string())
    }
}

/// Successful invocation: the payload plus the process exit status
/// (`verify` reports failures through status 2 while still emitting its
/// full report).
struct Output {
    payload: String,
    status: u8,
}

impl Output {
    fn ok(payload: String) -> Output {
        Output { payload, status: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("error: parse: {}", one_line(&err.to_string()));
            return ExitCode::from(3);
        }
    };
    match run(&cli.command) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(err) = fs::write(path, output.payload.as_bytes()) {
                    eprintln!("error: domain: cannot write {}: {err}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{}", output.payload);
            }
            if output.status != 0 {
                eprintln!("error: verification: invariant checks failed");
            }
            ExitCode::from(output.status)
        }
        Err(Failure::Domain(reason)) => {
            eprintln!("error: domain: {}", one_line(&reason));
            ExitCode::from(1)
        }
        Err(Failure::Parse(reason)) => {
            eprintln!("error: parse: {}", one_line(&reason));
            ExitCode::from(3)
        }
    }
}

/// First non-empty line, stripped of clap's own "error: " prefix, so the
/// diagnostic stream carries exactly one machine-parseable line.
fn one_line(message: &str) -> String {
    message
        .lines()
        .find(|l| !l.trim().is_empty())
        .unwrap_or("unknown error")
        .trim()
        .trim_start_matches("error: ")
        .to_owned()
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::MlEval { order, shift, arg } => {
            let params = MlParams::new(*order, *shift, *arg)?;
            let eval = ml_eval_detailed(&params)?;
            Ok(Output::ok(format!(
                "{{\"value\": {}, \"tail_bound\": {}, \"terms\": {}}}\n",
                fmt_float(eval.value),
                fmt_float(eval.tail_bound),
                eval.terms
            )))
        }
        Command::MlZero {
            order,
            shift,
            lambda_max,
            tol,
        } => {
            let scan = zeros::ml_first_zero(*order, *shift, *lambda_max, *tol)?;
            Ok(Output::ok(format!("{}\n", scan.to_json())))
        }
        Command::Bound(args) => {
            let report = bound_report(args, &quad_config()?)?;
            Ok(Output::ok(format!("{}\n", report.to_json())))
        }
        Command::Radius(args) => radius_report(args),
        Command::Const(args) => match args.kind {
            ConstKind::AlphaBar => {
                if !(args.tol > 0.0) {
                    return Err(Failure::Domain(format!(
                        "alpha-bar tolerance must be positive, got {}",
                        args.tol
                    )));
                }
                let value = zeros::alpha_bar(args.tol)?;
                Ok(Output::ok(format!(
                    "{{\"alpha_bar\": {}}}\n",
                    fmt_float(value)
                )))
            }
        },
        Command::Sweep(args) => sweep_csv(args),
        Command::Verify => {
            let (payload, failed) = checks::run_all(&quad_config()?);
            Ok(Output {
                payload,
                status: if failed > 0 { 2 } else { 0 },
            })
        }
    }
}

/// Default quadrature configuration, overridable through FRACVP_QUAD_TOL.
fn quad_config() -> Result<QuadConfig, Failure> {
    match std::env::var("FRACVP_QUAD_TOL") {
        Ok(raw) => {
            let tol: f64 = raw.trim().parse().map_err(|_| {
                Failure::Domain(format!("FRACVP_QUAD_TOL is not a number: {raw:?}"))
            })?;
            if !(tol > 0.0) || !tol.is_finite() {
                return Err(Failure::Domain(format!(
                    "FRACVP_QUAD_TOL must be a positive number, got {raw:?}"
                )));
            }
            Ok(QuadConfig::with_tolerance(tol))
        }
        Err(std::env::VarError::NotPresent) => Ok(QuadConfig::default()),
        Err(err) => Err(Failure::Domain(format!("FRACVP_QUAD_TOL unreadable: {err}"))),
    }
}

/// Load one coefficient from either a constant flag or a CSV path.
fn load_coeff(
    which: &str,
    constant: Option<f64>,
    csv: &Option<PathBuf>,
) -> Result<Option<RealFn>, Failure> {
    match (constant, csv) {
        (Some(c), None) => {
            if !c.is_finite() {
                return Err(Failure::Domain(format!(
                    "--{which}-const must be finite, got {c}"
                )));
            }
            Ok(Some(RealFn::constant(c)))
        }
        (None, Some(path)) => {
            let file = fs::File::open(path).map_err(|err| {
                Failure::Domain(format!("cannot open {}: {err}", path.display()))
            })?;
            Ok(Some(RealFn::tabulated_from_csv(BufReader::new(file))?))
        }
        (None, None) => Ok(None),
        // clap's conflicts_with forbids this combination already.
        (Some(_), Some(_)) => Err(Failure::Parse(format!(
            "--{which}-const conflicts with --{which}-csv"
        ))),
    }
}

fn require_coeff(kind: BoundKind, which: &str, f: Option<RealFn>) -> Result<RealFn, Failure> {
    f.ok_or_else(|| {
        Failure::Parse(format!(
            "bound {} requires --{which}-const or --{which}-csv",
            kind.name()
        ))
    })
}

/// Largest |value| the coefficient attains (constants and tabulations are
/// the only shapes the CLI constructs).
fn sup_abs(f: &RealFn) -> f64 {
    match f {
        RealFn::Constant(c) => c.abs(),
        RealFn::Tabulated { values, .. } => {
            values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
        }
        _ => unreachable!("CLI coefficients are constant or tabulated"),
    }
}

/// The integer-leading kinds fix (α, β); reject contradicting flags.
fn check_fixed_order(
    kind: BoundKind,
    flag: &str,
    given: Option<f64>,
    fixed: f64,
) -> Result<(), Failure> {
    match given {
        Some(v) if v != fixed => Err(Failure::Domain(format!(
            "bound {} fixes --{flag} at {fixed}, got {v}",
            kind.name()
        ))),
        _ => Ok(()),
    }
}

fn bound_report(args: &BoundArgs, cfg: &QuadConfig) -> Result<BoundReport, Failure> {
    let g = load_coeff("g", args.g_const, &args.g_csv)?;
    let f = load_coeff("f", args.f_const, &args.f_csv)?;
    match args.kind {
        BoundKind::Vp => {
            check_fixed_order(args.kind, "alpha", args.alpha, 2.0)?;
            check_fixed_order(args.kind, "beta", args.beta, 1.0)?;
            let g = require_coeff(args.kind, "g", g)?;
            let f = require_coeff(args.kind, "f", f)?;
            let m1 = sup_abs(&g);
            let m2 = sup_abs(&f);
            let total = bounds::vp_rhs(m1, m2, args.a, args.b)?;
            let len = args.b - args.a;
            let g_term = m1 * len;
            Ok(BoundReport {
                lhs: 1.0,
                g_term,
                f_term: total - g_term,
                total,
                satisfied: 1.0 < total,
                branch_taken: BoundBranch::GFirstIntegral,
                quad_error_estimate: 0.0,
                strict: true,
            })
        }
        BoundKind::Hw => {
            check_fixed_order(args.kind, "alpha", args.alpha, 2.0)?;
            check_fixed_order(args.kind, "beta", args.beta, 1.0)?;
            let g = require_coeff(args.kind, "g", g)?;
            let f = require_coeff(args.kind, "f", f)?;
            let orders = OrderPair::integer_leading(1.0)?;
            let spec = ProblemSpec::new(args.a, args.b, f, g, orders, true)?;
            Ok(bounds::hw_rhs(&spec, cfg)?)
        }
        BoundKind::Thm31 => {
            check_fixed_order(args.kind, "alpha", args.alpha, 2.0)?;
            let beta = args
                .beta
                .ok_or_else(|| Failure::Parse("bound thm31 requires --beta".into()))?;
            let g = require_coeff(args.kind, "g", g)?;
            let f = require_coeff(args.kind, "f", f)?;
            let orders = OrderPair::integer_leading(beta)?;
            let spec = ProblemSpec::new(args.a, args.b, f, g, orders, true)?;
            Ok(bounds::mixed_rhs(&spec, cfg)?)
        }
        BoundKind::Main => {
            let alpha = args
                .alpha
                .ok_or_else(|| Failure::Parse("bound main requires --alpha".into()))?;
            let beta = args
                .beta
                .ok_or_else(|| Failure::Parse("bound main requires --beta".into()))?;
            let g = require_coeff(args.kind, "g", g)?;
            let f = require_coeff(args.kind, "f", f)?;
            let orders = OrderPair::fractional_leading(alpha, beta)?;
            // The fractional-leading criterion is inherently non-strict.
            let spec = ProblemSpec::new(args.a, args.b, f, g, orders, false)?;
            Ok(bounds::fractional_rhs(&spec, cfg)?)
        }
        BoundKind::Lyapunov => {
            let alpha = args
                .alpha
                .ok_or_else(|| Failure::Parse("bound lyapunov requires --alpha".into()))?;
            if args.beta.is_some() {
                return Err(Failure::Parse(
                    "bound lyapunov takes no --beta (single-order problem)".into(),
                ));
            }
            if g.is_some() {
                return Err(Failure::Parse(
                    "bound lyapunov takes no g coefficient (undamped problem)".into(),
                ));
            }
            let f = require_coeff(args.kind, "f", f)?;
            let threshold = bounds::lyapunov_rhs(alpha, args.a, args.b)?;
            let f_mass = integrate_points(
                |p: QuadPoint| f.eval(p.s).abs(),
                args.a,
                args.b,
                cfg,
            )?;
            Ok(BoundReport {
                lhs: threshold,
                g_term: 0.0,
                f_term: f_mass.value,
                total: f_mass.value,
                satisfied: threshold < f_mass.value,
                branch_taken: BoundBranch::GFirstIntegral,
                quad_error_estimate: f_mass.error_estimate,
                strict: true,
            })
        }
    }
}

fn radius_json(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{{\"radius\": {}}}\n", fmt_float(v)),
        None => "{\"radius\": null}\n".to_owned(),
    }
}

fn radius_report(args: &RadiusArgs) -> Result<Output, Failure> {
    if args.kind != RadiusKind::Nu && args.beta.is_some() {
        return Err(Failure::Parse("only `radius nu` takes --beta".into()));
    }
    let payload = match args.kind {
        RadiusKind::Thm69 => radius_json(Some(zeros::radius_classic(args.alpha)?)),
        RadiusKind::Improved => radius_json(zeros::radius_improved(args.alpha)?),
        RadiusKind::Best => radius_json(Some(zeros::best_radius(args.alpha)?)),
        RadiusKind::Nu => {
            let beta = args
                .beta
                .ok_or_else(|| Failure::Parse("radius nu requires --beta".into()))?;
            let orders = OrderPair::fractional_leading(args.alpha, beta)?;
            radius_json(Some(zeros::radius_general(&orders, &quad_config()?)?))
        }
    };
    Ok(Output::ok(payload))
}

/// Inclusive arithmetic grid from..=to with the given step; the point count
/// is fixed up front so rounding in the increments can neither drop nor
/// duplicate a row.
fn grid(name: &str, from: f64, to: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !from.is_finite() || !to.is_finite() || !(step > 0.0) {
        return Err(Failure::Domain(format!(
            "{name} grid needs finite endpoints and a positive step"
        )));
    }
    if to < from {
        return Err(Failure::Domain(format!(
            "{name} grid is empty: {to} < {from}"
        )));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| from + i as f64 * step).collect())
}

fn sweep_csv(args: &SweepArgs) -> Result<Output, Failure> {
    let cfg = quad_config()?;
    let alphas = grid("alpha", args.alpha_from, args.alpha_to, args.alpha_step)?;
    let betas = match (args.beta_from, args.beta_to, args.beta_step) {
        (Some(from), Some(to), Some(step)) => Some(grid("beta", from, to, step)?),
        (None, None, None) => None,
        _ => {
            return Err(Failure::Parse(
                "provide all of --beta-from/--beta-to/--beta-step or none".into(),
            ))
        }
    };

    let mut out = String::from("alpha,beta,radius_thm69,radius_improved,nu,first_zero,margin\n");
    for &alpha in &alphas {
        let thm69 = zeros::radius_classic(alpha)?;
        let improved = zeros::radius_improved(alpha)?;
        let improved_str = improved.map(fmt_float).unwrap_or_default();
        match &betas {
            None => {
                // Single-order family E_(α,2): compare the scanner against
                // the best certified radius.
                let scan =
                    zeros::ml_first_zero(alpha, 2.0, SWEEP_LAMBDA_MAX, SWEEP_REFINE_TOL)?;
                let reference = improved.map_or(thm69, |v| v.max(thm69));
                let margin = scan.first_zero.unwrap_or(scan.scanned_up_to) - reference;
                out.push_str(&format!(
                    "{},,{},{},,{},{}\n",
                    fmt_float(alpha),
                    fmt_float(thm69),
                    improved_str,
                    scan.first_zero.map(fmt_float).unwrap_or_default(),
                    fmt_float(margin)
                ));
            }
            Some(betas) => {
                for &beta in betas {
                    // Two-order family E_(α−β,α): rows outside its regime
                    // keep the α-only columns and leave the rest empty.
                    let row = match OrderPair::fractional_leading(alpha, beta) {
                        Ok(orders) => {
                            let nu = zeros::radius_general(&orders, &cfg)?;
                            let scan = zeros::ml_first_zero(
                                alpha - beta,
                                alpha,
                                SWEEP_LAMBDA_MAX,
                                SWEEP_REFINE_TOL,
                            )?;
                            let margin =
                                scan.first_zero.unwrap_or(scan.scanned_up_to) - nu;
                            format!(
                                "{},{},{},{},{},{},{}\n",
                                fmt_float(alpha),
                                fmt_float(beta),
                                fmt_float(thm69),
                                improved_str,
                                fmt_float(nu),
                                scan.first_zero.map(fmt_float).unwrap_or_default(),
                                fmt_float(margin)
                            )
                        }
                        Err(_) => format!(
                            "{},{},{},{},,,\n",
                            fmt_float(alpha),
                            fmt_float(beta),
                            fmt_float(thm69),
                            improved_str
                        ),
                    };
                    out.push_str(&row);
                }
            }
        }
    }
    Ok(Output::ok(out))
}
