//! Cross-cutting consistency checks between the symbolic oracle and the
//! numeric solvers.

use rootjet::numerics::{PrecisionContext, Rational, Real};
use rootjet::oracle::derive::derive_error_equation;
use rootjet::oracle::poly::{CoeffPoly, Symbol, ALL_SYMBOLS};
use rootjet::problems::{builtin_problem, Problem};
use rootjet::solvers::{estimate_coc, solve, CocReport, SolverConfig};
use rootjet::weights::catalog;

fn rat(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Canonical parameter choices covering every catalog entry.
fn catalog_instances() -> Vec<(&'static str, Option<Rational>)> {
    vec![
        ("newton", None),
        ("weerakoon", None),
        ("homeier", None),
        ("chun", None),
        ("gamma3", Some(rat(0, 1))),
        ("m1", None),
        ("m2", None),
        ("m3", None),
        ("m4", Some(rat(1, 1))),
        // a fourth-order catalog entry that degrades to third order
        ("m4", Some(rat(1, 2))),
    ]
}

/// Taylor coefficients `c_h = f^(h)(α) / (h! f'(α))` of a problem at its
/// refined root, from repeated symbolic differentiation.
fn taylor_coefficients(problem: &Problem, ctx: &PrecisionContext) -> [Real; 4] {
    let root = problem.reference_root(ctx).unwrap().unwrap();
    let fprime_at_root = problem.fprime(&root).unwrap();
    let mut out: Vec<Real> = Vec::new();
    let mut factorial = 1u32;
    for h in 2..=5u32 {
        factorial *= h;
        let derivative = problem
            .derivative_expression(h)
            .expect("builtins are expression-backed")
            .eval(&root)
            .unwrap();
        out.push(&derivative / &(&ctx.from_u32(factorial) * &fprime_at_root));
    }
    out.try_into().unwrap()
}

/// Evaluates a constant-symbol polynomial at real Taylor coefficients.
fn eval_leading(poly: &CoeffPoly, c: &[Real; 4], ctx: &PrecisionContext) -> Real {
    let mut total = ctx.zero();
    for (monomial, coeff) in poly.terms() {
        let mut term = ctx.from_rational(coeff);
        for s in ALL_SYMBOLS {
            let e = monomial.exponent(s);
            if e == 0 {
                continue;
            }
            let value = match s {
                Symbol::C2 => &c[0],
                Symbol::C3 => &c[1],
                Symbol::C4 => &c[2],
                Symbol::C5 => &c[3],
                other => panic!("unexpected free symbol {other:?} in a catalog coefficient"),
            };
            term = &term * &value.powi(i32::from(e));
        }
        total = &total + &term;
    }
    total
}

#[test]
fn numeric_order_tracks_the_oracle() {
    let ctx = PrecisionContext::standard();
    let cfg = SolverConfig::benchmark();
    let problem = builtin_problem("f1").unwrap();
    let x0 = problem.suggested_x0(&ctx).unwrap();
    for (name, gamma) in catalog_instances() {
        let scheme = catalog(name, gamma.as_ref()).unwrap();
        let oracle_order = derive_error_equation(&scheme.oracle_scheme(), 5)
            .unwrap()
            .order as f64;
        let trace = solve(&problem, &scheme, &x0, &cfg).unwrap();
        let measured = estimate_coc(&trace)
            .order_f64()
            .unwrap_or_else(|| panic!("{}: not estimable", scheme.label));
        assert!(
            (measured - oracle_order).abs() <= 0.2,
            "{}: measured order {measured}, oracle order {oracle_order}",
            scheme.label
        );
    }
}

#[test]
fn asymptotic_constant_tracks_the_oracle_leading_coefficient() {
    let ctx = PrecisionContext::standard();
    let cfg = SolverConfig::benchmark();
    let problem = builtin_problem("f1").unwrap();
    let x0 = problem.suggested_x0(&ctx).unwrap();
    let c = taylor_coefficients(&problem, &ctx);
    for (name, gamma) in catalog_instances() {
        let scheme = catalog(name, gamma.as_ref()).unwrap();
        let equation = derive_error_equation(&scheme.oracle_scheme(), 5).unwrap();
        let predicted = eval_leading(&equation.leading_coefficient, &c, &ctx)
            .abs()
            .to_f64();
        let trace = solve(&problem, &scheme, &x0, &cfg).unwrap();
        let CocReport::Estimated(report) = estimate_coc(&trace) else {
            panic!("{}: not estimable", scheme.label);
        };
        let empirical = report.asymptotic_constant.unwrap().to_f64();
        let ratio = empirical / predicted;
        assert!(
            (0.5..=2.0).contains(&ratio),
            "{}: empirical constant {empirical:.3e} vs predicted {predicted:.3e} (ratio {ratio:.3})",
            scheme.label
        );
    }
}

#[test]
fn table_errors_decrease_monotonically() {
    let ctx = PrecisionContext::standard();
    let cfg = SolverConfig::benchmark();
    for id in ["f1", "f2", "f3", "f4"] {
        let problem = builtin_problem(id).unwrap();
        let x0 = problem.suggested_x0(&ctx).unwrap();
        for name in ["newton", "weerakoon", "homeier", "chun", "m1"] {
            let scheme = catalog(name, None).unwrap();
            let trace = solve(&problem, &scheme, &x0, &cfg).unwrap();
            let errors = trace.errors();
            assert_eq!(errors.len(), 3);
            assert!(
                errors[0] > errors[1] && errors[1] > errors[2],
                "{name} on {id}: errors do not decrease"
            );
        }
    }
}
