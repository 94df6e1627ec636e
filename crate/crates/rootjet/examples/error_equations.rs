//! Derive the error equation of every catalog method and compare each
//! against its stated claim, including the gamma families with the
//! parameter left symbolic.
//!
//! ```bash
//! cargo run --example error_equations
//! ```

use rootjet::numerics::Rational;
use rootjet::verify::verify_method;
use rootjet::weights::CATALOG_NAMES;

fn main() -> rootjet::Result<()> {
    for name in CATALOG_NAMES {
        let v = verify_method(name, None, 5)?;
        println!("== {}", v.label);
        println!("   {}", v.derived.display_leading());
        if v.discrepancies.is_empty() {
            println!("   agrees with the stated claim (order {})", v.stated_order);
        } else {
            for d in &v.discrepancies {
                println!("   DISCREPANCY: {d}");
            }
        }
        if let Some(analysis) = &v.gamma_analysis {
            println!("   obstruction below stated order: ({})", analysis.obstruction);
            if let Some(g) = &analysis.vanishes_at {
                println!("   vanishes only at gamma = {g}");
            }
        }
    }

    // sweep m4 across parameter values: fourth order appears only at 1
    println!("\n== m4 gamma sweep");
    for (n, d) in [(0i64, 1i64), (1, 2), (1, 1), (3, 2), (2, 1)] {
        let gamma = Rational::from((n, d));
        let v = verify_method("m4", Some(&gamma), 5)?;
        println!("   gamma = {gamma}: derived order {}", v.derived.order);
    }
    Ok(())
}
