//! Work with the exact series kernel directly: expand the intermediate
//! series of one iteration, and audit every stated expansion coefficient
//! against the derivation.
//!
//! ```bash
//! cargo run --example series_kernel
//! ```

use rootjet::numerics::Rational;
use rootjet::oracle::derive::intermediate_series;
use rootjet::oracle::poly::CoeffPoly;
use rootjet::verify::compare_stated_intermediates;

fn main() -> rootjet::Result<()> {
    // the Newton correction and derivative ratio for the damped
    // predictor y = x - (2/3) f/f'
    let damping = CoeffPoly::constant(Rational::from((2, 3)));
    let parts = intermediate_series(&damping, 5)?;
    println!("f/f'           = {}", parts.newton_correction);
    println!("y - root       = {}", parts.predictor_error);
    println!("f'(y)/f'(root) = {}", parts.derivative_at_predictor);
    println!("t              = {}", parts.derivative_ratio);

    // audit the stated coefficients; exact arithmetic is authoritative
    // and disagreements are reported, never corrected
    println!("\nstated-coefficient audit:");
    let mut all_good = true;
    for c in compare_stated_intermediates(5)? {
        if c.matches {
            println!("   ok      {} {} e^{}", c.step, c.role, c.power);
        } else {
            all_good = false;
            println!(
                "   DIFFERS {} {} e^{}: stated ({}), derived ({})",
                c.step, c.role, c.power, c.stated, c.derived
            );
        }
    }
    if all_good {
        println!("every stated coefficient is reproduced");
    }
    Ok(())
}
