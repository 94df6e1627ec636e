//! `rootjet` command line: solve, verify, bench, and catalog.
//!
//! Exit codes: 0 success, 1 usage error, 2 solver failure, 3 symbolic
//! discrepancy against a stated value, 4 benchmark cell flagged.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rootjet::bench::{emit, run_benchmark, run_stated_table, EmitFormat};
use rootjet::error::Error;
use rootjet::numerics::{format_error, parse_rational, PrecisionContext, Rational};
use rootjet::oracle::derive::Theorem;
use rootjet::problems::{builtin_problem, load_problem_file, Problem, BUILTIN_IDS};
use rootjet::solvers::{efficiency_index, estimate_coc, solve, SolverConfig, Termination};
use rootjet::verify::{verify_method, verify_theorem_with_stated};
use rootjet::weights::{catalog, requires_gamma, SchemeSpec, CATALOG_NAMES};

#[derive(Parser)]
#[command(
    name = "rootjet",
    version,
    about = "Arbitrary-precision root finding with weight-function Newton variants",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an iterative method on a problem and print the trace
    Solve(SolveArgs),
    /// Re-derive convergence orders and error equations symbolically
    Verify(VerifyArgs),
    /// Reproduce error tables and compare against stated values
    Bench(BenchArgs),
    /// List the method catalog with orders and efficiency indices
    Catalog,
}

#[derive(Args)]
struct SolveArgs {
    /// Builtin problem id (f1..f4) or path to a problem definition file
    #[arg(long)]
    problem: String,
    /// Record label to select from a problem file (default: first record)
    #[arg(long)]
    label: Option<String>,
    /// Method name from the catalog
    #[arg(long)]
    method: String,
    /// Family parameter for gamma3/m4, as p/q or decimal text
    #[arg(long)]
    gamma: Option<String>,
    /// Starting point (default: the problem's suggested one)
    #[arg(long)]
    x0: Option<String>,
    /// Working precision in decimal digits
    #[arg(long, default_value_t = 200)]
    digits: u32,
    /// Fixed iteration count (benchmark mode; default 3)
    #[arg(long, conflicts_with = "tol")]
    iters: Option<usize>,
    /// Stop once |f(x)| <= TOL (solver mode, capped at 100 iterations)
    #[arg(long)]
    tol: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Method name to verify against its stated claim
    #[arg(long, required_unless_present = "theorem", conflicts_with = "theorem")]
    method: Option<String>,
    /// Family parameter; omit to verify gamma3/m4 with gamma symbolic
    #[arg(long)]
    gamma: Option<String>,
    /// Family theorem to verify: 1 (third order) or 2 (fourth order)
    #[arg(long)]
    theorem: Option<u8>,
    /// Series truncation order
    #[arg(long, default_value_t = 5)]
    truncation: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
}

#[derive(Args)]
struct BenchArgs {
    /// Stated table number (2 through 5)
    #[arg(long, conflicts_with_all = ["problem", "methods", "x0"])]
    table: Option<u8>,
    /// Builtin problem id or problem file path
    #[arg(long, required_unless_present = "table")]
    problem: Option<String>,
    /// Record label to select from a problem file
    #[arg(long)]
    label: Option<String>,
    /// Comma-separated method names (default: all catalog entries)
    #[arg(long)]
    methods: Option<String>,
    /// Family parameter for gamma3/m4 rows
    #[arg(long)]
    gamma: Option<String>,
    /// Starting point override
    #[arg(long)]
    x0: Option<String>,
    /// Iterations per method
    #[arg(long, default_value_t = 3)]
    iters: usize,
    /// Working precision in decimal digits
    #[arg(long, default_value_t = 200)]
    digits: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Write the table to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders help/version on stdout with success; keep that
            if err.exit_code() == 0 {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            let _ = err.print();
            return ExitCode::from(1);
        }
    };
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Catalog => cmd_catalog(),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(usage_or_runtime(&err))
        }
    }
}

/// Usage-class errors exit 1; runtime solver errors exit 2.
fn usage_or_runtime(err: &Error) -> u8 {
    match err {
        Error::Config(_)
        | Error::Parse { .. }
        | Error::UnknownProblem(_)
        | Error::UnknownMethod(_)
        | Error::MissingGamma(_)
        | Error::UnsupportedTruncation { .. }
        | Error::MissingRoot(_)
        | Error::ProblemFile { .. }
        | Error::Io(_) => 1,
        _ => 2,
    }
}

fn parse_gamma(text: Option<&str>) -> Result<Option<Rational>, Error> {
    text.map(parse_rational).transpose()
}

fn resolve_problem(spec: &str, label: Option<&str>) -> Result<Problem, Error> {
    if BUILTIN_IDS.contains(&spec) {
        return builtin_problem(spec);
    }
    let path = Path::new(spec);
    if path.exists() {
        let problems = load_problem_file(path)?;
        return match label {
            None => Ok(problems.into_iter().next().expect("non-empty by construction")),
            Some(wanted) => problems
                .into_iter()
                .find(|p| p.label() == wanted)
                .ok_or_else(|| Error::UnknownProblem(format!("{wanted} (in {spec})"))),
        };
    }
    Err(Error::UnknownProblem(spec.to_string()))
}

fn resolve_method(name: &str, gamma: Option<&Rational>) -> Result<SchemeSpec, Error> {
    catalog(name, gamma)
}

fn cmd_solve(args: SolveArgs) -> Result<u8, Error> {
    let ctx = PrecisionContext::new(args.digits)?;
    let problem = resolve_problem(&args.problem, args.label.as_deref())?;
    let gamma = parse_gamma(args.gamma.as_deref())?;
    let scheme = resolve_method(&args.method, gamma.as_ref())?;

    let x0 = match &args.x0 {
        Some(text) => ctx.parse(text)?,
        None => problem.suggested_x0(&ctx).ok_or_else(|| {
            Error::Config(format!(
                "problem '{}' has no suggested starting point; pass --x0",
                problem.label()
            ))
        })?,
    };
    let solver_mode = args.tol.is_some();
    let cfg = match &args.tol {
        Some(tol) => SolverConfig::with_tolerance(ctx, ctx.parse(tol)?, 100),
        None => SolverConfig::with_iterations(ctx, args.iters.unwrap_or(3)),
    };

    println!(
        "{} on {} from x0 = {} at {} digits",
        scheme,
        problem.label(),
        x0.to_decimal_string(20),
        args.digits
    );
    let trace = match solve(&problem, &scheme, &x0, &cfg) {
        Ok(trace) => trace,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(2);
        }
    };
    let display_digits = args.digits.min(40);
    for step in &trace.steps {
        let residual = problem
            .f(&step.x)
            .map(|v| format_error(&v))
            .unwrap_or_else(|_| "n/a".into());
        let mut line = format!(
            "n={:<3} x = {}  |f(x)| = {}",
            step.n,
            step.x.to_decimal_string(display_digits),
            residual
        );
        if let Some(e) = &step.error {
            line.push_str(&format!("  |x - root| = {}", format_error(e)));
        }
        println!("{line}");
    }
    if let Some(last) = trace.steps.last() {
        if display_digits < args.digits {
            println!(
                "final iterate to full precision: {}",
                last.x.to_decimal_string(args.digits)
            );
        }
    }
    println!("terminated by: {}", trace.terminated_by);
    println!("{}", estimate_coc(&trace));

    let failed =
        matches!(trace.terminated_by, Termination::Failure(_)) || (solver_mode
            && trace.terminated_by != Termination::Tolerance);
    Ok(if failed { 2 } else { 0 })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    if let Some(number) = args.theorem {
        let theorem = match number {
            1 => Theorem::ThirdOrderFamily,
            2 => Theorem::FourthOrderFamily,
            other => {
                return Err(Error::Config(format!(
                    "theorem selector must be 1 or 2, got {other}"
                )))
            }
        };
        let v = verify_theorem_with_stated(theorem, args.truncation)?;
        println!(
            "family: {}",
            match theorem {
                Theorem::ThirdOrderFamily => "single-weight two-step (third order)",
                Theorem::FourthOrderFamily => "product-weight damped two-step (fourth order)",
            }
        );
        for (power, poly) in &v.report.vanishing {
            println!(
                "coefficient of e^{power}: {}",
                if poly.is_zero() { "vanishes identically" } else { "NONZERO" }
            );
        }
        println!("derived: {}", v.report.equation.display_leading());
        println!("stated leading coefficient: {}", v.stated_coefficient);
        if let Some(damping) = &v.report.damping {
            println!(
                "with the damping constant symbolic, the e^2 coefficient is ({})",
                damping.e2_coefficient
            );
            if let Some(root) = &damping.unique_root {
                println!("it vanishes only at a = {root}");
            }
        }
        let ok = v.report.conditions_hold && v.matches_stated;
        println!(
            "{}",
            if ok {
                "derivation agrees with the stated equation"
            } else {
                "DISCREPANCY against the stated equation"
            }
        );
        return Ok(if ok { 0 } else { 3 });
    }

    let name = args.method.as_deref().expect("clap enforces one selector");
    let gamma = parse_gamma(args.gamma.as_deref())?;
    let v = verify_method(name, gamma.as_ref(), args.truncation)?;
    println!("method: {}", v.label);
    if let Some(report) = &v.conditions {
        print!("{report}");
        println!(
            "conditions: {}",
            if report.passed() { "pass" } else { "VIOLATED" }
        );
    }
    println!("derived: {}", v.derived.display_leading());
    println!("stated order: {}", v.stated_order);
    if let Some(stated) = &v.stated_coefficient {
        println!("stated leading coefficient: {stated}");
    }
    if let Some(analysis) = &v.gamma_analysis {
        println!(
            "order obstruction below the stated order: ({})",
            analysis.obstruction
        );
        match &analysis.vanishes_at {
            Some(g) => println!("it vanishes only at gamma = {g}"),
            None => println!("no single gamma annihilates it"),
        }
    }
    if v.discrepancies.is_empty() {
        println!("derivation agrees with the stated claim");
        Ok(0)
    } else {
        for d in &v.discrepancies {
            println!("DISCREPANCY: {d}");
        }
        Ok(3)
    }
}

fn cmd_bench(args: BenchArgs) -> Result<u8, Error> {
    let ctx = PrecisionContext::new(args.digits)?;
    let run = if let Some(number) = args.table {
        run_stated_table(number, &ctx)?
    } else {
        let spec = args.problem.as_deref().expect("clap enforces the group");
        let problem = resolve_problem(spec, args.label.as_deref())?;
        let gamma = parse_gamma(args.gamma.as_deref())?;
        let method_names: Vec<String> = match &args.methods {
            Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
            None => CATALOG_NAMES
                .iter()
                .filter(|n| !requires_gamma(n) || gamma.is_some())
                .map(|s| s.to_string())
                .collect(),
        };
        let methods = method_names
            .iter()
            .map(|name| resolve_method(name, gamma.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        let x0 = args.x0.as_deref().map(|t| ctx.parse(t)).transpose()?;
        run_benchmark(&problem, &methods, x0.as_ref(), args.iters, &ctx, None)?
    };

    let rendered = emit(
        &run,
        match args.format {
            Format::Md => EmitFormat::Markdown,
            Format::Csv => EmitFormat::Csv,
        },
    );
    match &args.out {
        Some(path) => std::fs::write(path, &rendered)?,
        None => print!("{rendered}"),
    }
    Ok(if run.any_flagged() { 4 } else { 0 })
}

fn cmd_catalog() -> Result<u8, Error> {
    let ctx = PrecisionContext::new(30)?;
    for name in CATALOG_NAMES {
        let v = verify_method(name, None, 5)?;
        let description = describe_scheme(name)?;
        let evals = if name == "newton" { 2 } else { 3 };
        let mut order_text = format!("order={}", v.derived.order);
        if let Some(analysis) = &v.gamma_analysis {
            if let Some(g) = &analysis.vanishes_at {
                order_text = format!(
                    "order={} at gamma={g} (order {} otherwise)",
                    v.stated_order, v.derived.order
                );
            }
        }
        let order_for_ei = if v.gamma_analysis.is_some() {
            v.stated_order
        } else {
            v.derived.order
        };
        let ei = efficiency_index(&ctx.from_u32(order_for_ei as u32), evals).to_f64();
        println!("{name:<10} {order_text:<40} EI({evals} evals)={ei:.4}  {description}");
    }
    Ok(0)
}

fn describe_scheme(name: &str) -> Result<String, Error> {
    use rootjet::weights::SchemeKind;
    Ok(match name {
        "gamma3" => "A(t) = (3-t)/2 + gamma*(t-1)^2".to_string(),
        "m4" => "P(t) = 3/2 - t/2 + (t-1)^2, Q(t) = (9/4-gamma) + (2 gamma-9/4)t + (1-gamma)t^2"
            .to_string(),
        _ => match catalog(name, None)?.kind {
            SchemeKind::Newton => "x - f/f'".to_string(),
            SchemeKind::ThirdOrder { weight } => format!("A(t)={}", weight.formula()),
            SchemeKind::FourthOrder { p, q } => {
                format!("P(t)={}, Q(t)={}", p.formula(), q.formula())
            }
        },
    })
}
