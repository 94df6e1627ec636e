//! Mechanically re-derive the two family theorems with symbolic weight
//! jets: confirm the low-order error coefficients vanish identically,
//! print the general error equations, and solve for the damping
//! constant that the fourth-order family forces.
//!
//! ```bash
//! cargo run --example verify_theorems
//! ```

use rootjet::oracle::derive::Theorem;
use rootjet::verify::verify_theorem_with_stated;

fn main() -> rootjet::Result<()> {
    for (theorem, description) in [
        (
            Theorem::ThirdOrderFamily,
            "single weight A(t), full Newton predictor",
        ),
        (
            Theorem::FourthOrderFamily,
            "weight product P(t) Q(t), damped predictor",
        ),
    ] {
        let v = verify_theorem_with_stated(theorem, 5)?;
        println!("== {description}");
        for (power, coeff) in &v.report.vanishing {
            println!(
                "   e^{power} coefficient: {}",
                if coeff.is_zero() { "0 (identically)" } else { "NONZERO" }
            );
        }
        println!("   {}", v.report.equation.display_leading());
        println!(
            "   stated general coefficient {}",
            if v.matches_stated { "matches" } else { "DIFFERS" }
        );
        if let Some(damping) = &v.report.damping {
            println!(
                "   with a symbolic damping constant, the e^2 coefficient is ({})",
                damping.e2_coefficient
            );
            if let Some(root) = &damping.unique_root {
                println!("   -> fourth order forces a = {root}");
            }
        }
        println!();
    }
    Ok(())
}
