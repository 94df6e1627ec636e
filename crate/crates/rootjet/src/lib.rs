//! Arbitrary-precision root finding with weight-function Newton variants.
//!
//! The crate bundles three things that are usually kept apart:
//!
//! * **Solvers**: Newton's method plus two-step third-order and optimal
//!   fourth-order schemes driven by weight functions of the derivative
//!   ratio `t = f'(y)/f'(x)`, run at any decimal precision.
//! * **A symbolic order oracle**: exact truncated-series machinery that
//!   re-derives each scheme's error equation and convergence order from
//!   its weight-function jet, instead of trusting the catalog.
//! * **A benchmark harness**: reproduces published error tables for the
//!   bundled test problems at 200-digit precision and reports any cell
//!   that disagrees with the reference values.
//!
//! ## Examples
//!
//! Each example is a runnable tour of one capability:
//!
//! ```bash
//! cargo run --example solve_builtin      # solve f1 with m1, estimate the order
//! cargo run --example reproduce_tables   # rebuild the published error tables
//! cargo run --example verify_theorems    # mechanized family theorems
//! cargo run --example error_equations    # per-method error equations + gamma sweep
//! cargo run --example custom_problem     # expression-defined problems
//! cargo run --example weight_conditions  # jets, conditions, poles, efficiency
//! cargo run --example series_kernel      # exact series arithmetic, stated-value audit
//! ```
//!
//! The `rootjet` binary exposes the same features as `solve`, `verify`,
//! `bench`, and `catalog` subcommands.

pub mod bench;
pub mod error;
pub mod expr;
pub mod numerics;
pub mod oracle;
pub mod problems;
pub mod solvers;
pub mod stated;
pub mod verify;
pub mod weights;

pub use bench::{emit, run_benchmark, run_stated_table, BenchmarkRun, EmitFormat};
pub use error::{Error, Result};
pub use numerics::{format_error, parse_rational, PrecisionContext, Rational, Real};
pub use problems::{builtin_problem, load_problem_file, Problem};
pub use solvers::{
    efficiency_index, estimate_coc, newton_step, scheme_step, solve, CocReport, IterationTrace,
    SolverConfig, Termination,
};
pub use verify::{verify_method, verify_theorem_with_stated, MethodVerification};
pub use weights::{catalog, evaluate_weight, ConditionReport, SchemeKind, SchemeSpec, WeightJet};

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn shared_types_are_send_and_sync() {
        assert_send_sync::<PrecisionContext>();
        assert_send_sync::<Real>();
        assert_send_sync::<Rational>();
        assert_send_sync::<Problem>();
        assert_send_sync::<SchemeSpec>();
        assert_send_sync::<WeightJet>();
        assert_send_sync::<IterationTrace>();
    }
}
