//! Solve a catalog problem with a fourth-order method and estimate its
//! convergence order from the trace.
//!
//! ```bash
//! cargo run --example solve_builtin
//! ```

use rootjet::numerics::{format_error, PrecisionContext};
use rootjet::problems::builtin_problem;
use rootjet::solvers::{estimate_coc, solve, SolverConfig};
use rootjet::weights::catalog;

fn main() -> rootjet::Result<()> {
    let ctx = PrecisionContext::new(200)?;
    let problem = builtin_problem("f1")?;
    let scheme = catalog("m1", None)?;
    let x0 = problem.suggested_x0(&ctx).expect("catalog problems carry x0");

    println!("{scheme}");
    println!("problem {} from x0 = {}", problem.label(), x0.to_decimal_string(20));
    println!();

    let cfg = SolverConfig::with_iterations(ctx, 3);
    let trace = solve(&problem, &scheme, &x0, &cfg)?;
    for step in &trace.steps {
        println!(
            "n={}  x = {}  |x - root| = {}",
            step.n,
            step.x.to_decimal_string(30),
            step.error.as_ref().map(format_error).unwrap_or_default(),
        );
    }
    println!();
    println!("{}", estimate_coc(&trace));
    Ok(())
}
