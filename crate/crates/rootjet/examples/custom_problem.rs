//! Define problems from expression text: the derivative comes from
//! symbolic differentiation, and a reference root refines itself to
//! working precision for error tracking.
//!
//! ```bash
//! cargo run --example custom_problem
//! ```

use rootjet::numerics::{format_error, PrecisionContext};
use rootjet::problems::Problem;
use rootjet::solvers::{estimate_coc, solve, SolverConfig};
use rootjet::weights::catalog;

fn main() -> rootjet::Result<()> {
    let ctx = PrecisionContext::new(100)?;

    // the classic x^3 - 2x - 5; a 20-digit root seed is refined internally
    let problem = Problem::from_expressions(
        "wallis-cubic",
        "x^3 - 2*x - 5",
        None,
        Some("2.0945514815423265914"),
        Some("2.5"),
    )?;
    println!(
        "f = {}, f' = {} (by symbolic differentiation)",
        problem.expression().unwrap(),
        problem.expression().unwrap().differentiate()
    );

    let x0 = problem.suggested_x0(&ctx).unwrap();
    for name in ["newton", "chun", "m3"] {
        let scheme = catalog(name, None)?;
        let trace = solve(&problem, &scheme, &x0, &SolverConfig::with_iterations(ctx, 4))?;
        let errors: Vec<String> = trace.errors().iter().map(|e| format_error(e)).collect();
        println!("{name:<8} errors {:?}  ({})", errors, estimate_coc(&trace));
    }

    // without a reference root, solve in tolerance mode on |f|
    let transcendental =
        Problem::from_expressions("dome", "x*exp(-x) - 1/8", None, None, Some("0.1"))?;
    let cfg = SolverConfig::with_tolerance(ctx, ctx.parse("1e-80")?, 50);
    let trace = solve(
        &transcendental,
        &catalog("m1", None)?,
        &transcendental.suggested_x0(&ctx).unwrap(),
        &cfg,
    )?;
    let last = trace.steps.last().unwrap();
    println!(
        "\n{}: {} iterations to |f| <= 1e-80, x = {}",
        transcendental.label(),
        trace.steps.len(),
        last.x.to_decimal_string(40)
    );
    Ok(())
}
