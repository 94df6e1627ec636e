//! Inspect the weight functions behind each scheme: jets at t = 1,
//! order-condition reports, pole behaviour, and efficiency indices.
//!
//! ```bash
//! cargo run --example weight_conditions
//! ```

use rootjet::numerics::{PrecisionContext, Rational};
use rootjet::solvers::efficiency_index;
use rootjet::weights::{catalog, condition_report, evaluate_weight, SchemeKind};

fn main() -> rootjet::Result<()> {
    let ctx = PrecisionContext::new(30)?;

    for name in ["weerakoon", "homeier", "chun", "m1"] {
        let spec = catalog(name, None)?;
        println!("== {spec}");
        if let Some(report) = condition_report(&spec) {
            print!("{report}");
            println!(
                "   conditions {}",
                if report.passed() { "pass" } else { "VIOLATED" }
            );
        }
    }

    // m4 satisfies the product-weight conditions only at gamma = 1
    for gamma in [Rational::from(1), Rational::from((1, 2))] {
        let spec = catalog("m4", Some(&gamma))?;
        let report = condition_report(&spec).unwrap();
        println!(
            "m4 with gamma = {gamma}: conditions {}",
            if report.passed() { "pass" } else { "violated" }
        );
    }

    // weights evaluate anywhere in their domain and refuse their poles
    let spec = catalog("homeier", None)?;
    if let SchemeKind::ThirdOrder { weight } = &spec.kind {
        let at_two = evaluate_weight(weight, &ctx.parse("2")?)?;
        println!(
            "\n{} at t = 2 -> {}",
            weight.formula(),
            at_two.to_decimal_string(10)
        );
        let at_pole = evaluate_weight(weight, &ctx.zero());
        println!("{} at t = 0 -> {}", weight.formula(), at_pole.unwrap_err());
    }

    // an order gained without extra evaluations lifts the efficiency index
    println!();
    for (order, evals) in [(2u32, 2u32), (3, 3), (4, 3)] {
        let ei = efficiency_index(&ctx.from_u32(order), evals);
        println!(
            "order {order} with {evals} evaluations/iteration: EI = {:.4}",
            ei.to_f64()
        );
    }
    Ok(())
}
