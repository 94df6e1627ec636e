//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Expected polynomials are frozen from an independent computer-algebra
//! derivation; expected table cells come from the published reference
//! tables. Tolerances are pinned in the assertions.

#![allow(clippy::type_complexity)]

use rand::{Rng, SeedableRng};

use rootjet::bench::{run_stated_table, BenchCell, MatchLevel};
use rootjet::numerics::{PrecisionContext, Rational, Real};
use rootjet::oracle::derive::{derive_error_equation, Theorem};
use rootjet::oracle::poly::{CoeffPoly, Symbol};
use rootjet::oracle::series::ESeries;
use rootjet::problems::{builtin_problem, Problem, BUILTIN_IDS};
use rootjet::solvers::{estimate_coc, scheme_step, solve, SolverConfig};
use rootjet::verify::{
    compare_stated_intermediates, verify_method, verify_theorem_with_stated, DiscrepancyKind,
};
use rootjet::weights::{catalog, symbolic_gamma_scheme, SchemeSpec, WeightJet};

fn rat(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn poly(terms: &[(i64, i64, &[(Symbol, u8)])]) -> CoeffPoly {
    let mut acc = CoeffPoly::zero();
    for (n, d, powers) in terms {
        acc = &acc + &CoeffPoly::term(rat(*n, *d), powers);
    }
    acc
}

#[test]
fn criterion_1_table_reproduction() {
    let ctx = PrecisionContext::standard();
    let started = std::time::Instant::now();
    let mut cells_checked = 0;
    let mut exact = 0;
    let mut acceptable = Vec::new();
    for table in [2u8, 3, 4, 5] {
        let run = run_stated_table(table, &ctx).expect("stated tables 2..5 run");
        assert_eq!(run.rows.len(), 5);
        for row in &run.rows {
            assert_eq!(row.cells.len(), 3);
            for (i, cell) in row.cells.iter().enumerate() {
                match cell {
                    BenchCell::Value {
                        formatted,
                        stated,
                        level,
                    } => {
                        cells_checked += 1;
                        let level = level.expect("stated cells carry a level");
                        assert_ne!(
                            level,
                            MatchLevel::Mismatch,
                            "table {table} {} e{}: computed {formatted} vs stated {stated:?} \
                             must agree on exponent and 3 leading mantissa digits",
                            row.method,
                            i + 1
                        );
                        if level == MatchLevel::Exact {
                            exact += 1;
                        } else {
                            acceptable.push(format!(
                                "table {table} {} e{}: {formatted} vs {}",
                                row.method,
                                i + 1,
                                stated.as_deref().unwrap_or("?")
                            ));
                        }
                    }
                    BenchCell::Failure { reason } => {
                        panic!("table {table} {}: solver failed: {reason}", row.method)
                    }
                }
            }
        }
    }
    assert_eq!(cells_checked, 60);
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 10,
        "table reproduction took {elapsed:?}, budget is 10 s"
    );
    println!(
        "criterion 1 (table reproduction): PASS - 60/60 cells within policy, {exact} exact to \
         all five digits{}, {elapsed:?}",
        if acceptable.is_empty() {
            String::new()
        } else {
            format!(", digits 4-5 differ on: {}", acceptable.join("; "))
        }
    );
}

#[test]
fn criterion_2_third_order_theorem() {
    let started = std::time::Instant::now();
    let v = verify_theorem_with_stated(Theorem::ThirdOrderFamily, 5).unwrap();
    for (power, coeff) in &v.report.vanishing {
        assert!(
            coeff.is_zero(),
            "e^{power} coefficient must vanish identically, got {coeff}"
        );
    }
    assert_eq!(v.report.equation.order, 3);
    // (1/2)[c3 - 4 c2^2 (-1 + A''(1))] expanded canonically
    let expected = poly(&[
        (1, 2, &[(Symbol::C3, 1)]),
        (2, 1, &[(Symbol::C2, 2)]),
        (-2, 1, &[(Symbol::C2, 2), (Symbol::A2, 1)]),
    ]);
    assert_eq!(v.report.equation.leading_coefficient, expected);
    assert!(v.matches_stated);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}, budget 1 s");
    println!(
        "criterion 2 (third-order family theorem): PASS - e^1, e^2 vanish identically, \
         leading coefficient matches, {elapsed:?}"
    );
}

#[test]
fn criterion_3_fourth_order_theorem() {
    let v = verify_theorem_with_stated(Theorem::FourthOrderFamily, 5).unwrap();
    for (power, coeff) in &v.report.vanishing {
        assert!(
            coeff.is_zero(),
            "e^{power} coefficient must vanish identically, got {coeff}"
        );
    }
    assert_eq!(v.report.vanishing.len(), 3);
    assert_eq!(v.report.equation.order, 4);
    // (1/81)[-81 c2 c3 + 9 c4 + (309 + 24 A'' + 32 A''' + 32 B''') c2^3]
    let expected = poly(&[
        (-1, 1, &[(Symbol::C2, 1), (Symbol::C3, 1)]),
        (1, 9, &[(Symbol::C4, 1)]),
        (309, 81, &[(Symbol::C2, 3)]),
        (24, 81, &[(Symbol::C2, 3), (Symbol::A2, 1)]),
        (32, 81, &[(Symbol::C2, 3), (Symbol::A3, 1)]),
        (32, 81, &[(Symbol::C2, 3), (Symbol::B3, 1)]),
    ]);
    assert_eq!(v.report.equation.leading_coefficient, expected);
    assert!(v.matches_stated);
    // with the damping symbolic, e^2 vanishes exactly at a = 2/3
    let damping = v.report.damping.expect("fourth-order family analyzes damping");
    assert!(damping.admits_two_thirds);
    assert_eq!(damping.unique_root, Some(rat(2, 3)));
    println!(
        "criterion 3 (fourth-order family theorem): PASS - e^1..e^3 vanish identically, \
         leading coefficient matches, damping condition admits a = 2/3 uniquely"
    );
}

#[test]
fn criterion_4_particular_case_error_equations() {
    // gamma family: (1/2)[(4 - 8 gamma) c2^2 + c3]
    let gamma_family = derive_error_equation(&symbolic_gamma_scheme("gamma3").unwrap(), 5).unwrap();
    assert_eq!(gamma_family.order, 3);
    assert_eq!(
        gamma_family.leading_coefficient,
        poly(&[
            (2, 1, &[(Symbol::C2, 2)]),
            (-4, 1, &[(Symbol::C2, 2), (Symbol::Gamma, 1)]),
            (1, 2, &[(Symbol::C3, 1)]),
        ])
    );

    // m1: (1/9)[-9 c2 c3 + c4 + 33 c2^3], agreeing with the stated value
    let m1 = verify_method("m1", None, 5).unwrap();
    assert_eq!(m1.derived.order, 4);
    assert_eq!(
        m1.derived.leading_coefficient,
        poly(&[
            (-1, 1, &[(Symbol::C2, 1), (Symbol::C3, 1)]),
            (1, 9, &[(Symbol::C4, 1)]),
            (33, 9, &[(Symbol::C2, 3)]),
        ])
    );
    assert!(m1.agrees_with_stated());

    // m2 and m3 derive to the stated brackets *without* the stated 1/9
    // prefactor; the disagreement must be reported (the exit-3 path)
    for (name, c2_cubed) in [("m2", (79, 27)), ("m3", (103, 27))] {
        let v = verify_method(name, None, 5).unwrap();
        assert_eq!(v.derived.order, 4, "{name}");
        let expected = poly(&[
            (-1, 1, &[(Symbol::C2, 1), (Symbol::C3, 1)]),
            (1, 9, &[(Symbol::C4, 1)]),
            (c2_cubed.0, c2_cubed.1, &[(Symbol::C2, 3)]),
        ]);
        assert_eq!(v.derived.leading_coefficient, expected, "{name}");
        assert_eq!(v.discrepancies.len(), 1, "{name}");
        assert_eq!(
            v.discrepancies[0].kind,
            DiscrepancyKind::LeadingCoefficient,
            "{name}"
        );
    }
    println!(
        "criterion 4 (particular-case error equations): PASS - gamma family and m1 match; \
         m2/m3 derive the stated brackets without the stated 1/9 prefactor, reported as \
         discrepancies"
    );
}

#[test]
fn criterion_5_m4_verdict() {
    // symbolic gamma: e^3 coefficient (16/9)(gamma - 1) c2^2, nonzero,
    // vanishing exactly at gamma = 1
    let family = verify_method("m4", None, 5).unwrap();
    assert_eq!(family.derived.order, 3);
    let obstruction = family.gamma_analysis.as_ref().unwrap();
    assert_eq!(
        obstruction.obstruction,
        poly(&[
            (16, 9, &[(Symbol::C2, 2), (Symbol::Gamma, 1)]),
            (-16, 9, &[(Symbol::C2, 2)]),
        ])
    );
    assert!(!obstruction.obstruction.is_zero());
    assert_eq!(obstruction.vanishes_at, Some(rat(1, 1)));

    // at gamma = 1 the e^4 coefficient equals the stated equation there:
    // -c2 c3 + c4/9 + (119/27) c2^3
    let at_one = verify_method("m4", Some(&rat(1, 1)), 5).unwrap();
    assert_eq!(at_one.derived.order, 4);
    assert_eq!(
        at_one.derived.leading_coefficient,
        poly(&[
            (-1, 1, &[(Symbol::C2, 1), (Symbol::C3, 1)]),
            (1, 9, &[(Symbol::C4, 1)]),
            (119, 27, &[(Symbol::C2, 3)]),
        ])
    );
    assert!(at_one.agrees_with_stated());
    println!(
        "criterion 5 (m4 verdict): PASS - e^3 coefficient (16/9)(gamma-1)c2^2 vanishes only \
         at gamma = 1, where the stated fourth-order equation is recovered"
    );
}

#[test]
fn criterion_6_order_estimation() {
    let ctx = PrecisionContext::standard();
    let cfg = SolverConfig::benchmark();
    let groups: [(&[(&str, Option<Rational>)], f64, f64); 3] = [
        (&[("newton", None)], 1.9, 2.1),
        (
            &[
                ("weerakoon", None),
                ("homeier", None),
                ("chun", None),
                ("gamma3", Some(rat(0, 1))),
            ],
            2.8,
            3.2,
        ),
        (
            &[
                ("m1", None),
                ("m2", None),
                ("m3", None),
                ("m4", Some(rat(1, 1))),
            ],
            3.8,
            4.2,
        ),
    ];
    let mut measured = 0;
    for (methods, lo, hi) in groups {
        for (name, gamma) in methods {
            let scheme = catalog(name, gamma.as_ref()).unwrap();
            for id in BUILTIN_IDS {
                let problem = builtin_problem(id).unwrap();
                let x0 = problem.suggested_x0(&ctx).unwrap();
                let trace = solve(&problem, &scheme, &x0, &cfg).unwrap();
                let order = estimate_coc(&trace)
                    .order_f64()
                    .unwrap_or_else(|| panic!("{name} on {id}: order not estimable"));
                assert!(
                    (lo..=hi).contains(&order),
                    "{name} on {id}: estimated order {order} outside [{lo}, {hi}]"
                );
                measured += 1;
            }
        }
    }
    assert_eq!(measured, 36);
    println!(
        "criterion 6 (order estimation): PASS - 36 method/problem orders inside their bands"
    );
}

#[test]
fn criterion_7_reduction_and_equivalence() {
    let ctx = PrecisionContext::standard();
    let cfg = SolverConfig::benchmark();

    // unit weight reduces the third-order engine to Newton bitwise
    let unit = SchemeSpec::third_order(
        "unit",
        WeightJet::constant("1", rat(1, 1)),
    );
    let newton = catalog("newton", None).unwrap();
    for id in BUILTIN_IDS {
        let problem = builtin_problem(id).unwrap();
        let x0 = problem.suggested_x0(&ctx).unwrap();
        let a = solve(&problem, &unit, &x0, &cfg).unwrap();
        let b = solve(&problem, &newton, &x0, &cfg).unwrap();
        assert_eq!(a.steps.len(), b.steps.len());
        for (sa, sb) in a.steps.iter().zip(&b.steps) {
            assert_eq!(sa.x, sb.x, "{id}: step {} differs from Newton", sa.n);
        }
    }

    // literal algebraic forms of the fourth-order iterations
    let two = |x: &Real, n: i64, d: i64| x.rational_like(&rat(n, d));
    let literal_m1 = |p: &Problem, x: &Real| -> Real {
        let (fx, fpx) = p.evaluate(x).unwrap();
        let y = x - &(&(&two(x, 2, 3) * &fx) / &fpx);
        let fpy = p.fprime(&y).unwrap();
        let t = &fpy / &fpx;
        let bracket = &(&two(x, 2, 1) - &(&two(x, 7, 4) * &t)) + &(&two(x, 3, 4) * &(&t * &t));
        x - &(&bracket * &(&(&two(x, 2, 1) * &fx) / &(&fpx + &fpy)))
    };
    let literal_m2 = |p: &Problem, x: &Real| -> Real {
        let (fx, fpx) = p.evaluate(x).unwrap();
        let y = x - &(&(&two(x, 2, 3) * &fx) / &fpx);
        let fpy = p.fprime(&y).unwrap();
        let t = &fpy / &fpx;
        let bracket = &(&two(x, 7, 4) - &(&two(x, 5, 4) * &t)) + &(&two(x, 1, 2) * &(&t * &t));
        let mean = &(&fx / &two(x, 2, 1)) * &(&(&two(x, 1, 1) / &fpx) + &(&two(x, 1, 1) / &fpy));
        x - &(&bracket * &mean)
    };
    let literal_m3 = |p: &Problem, x: &Real| -> Real {
        let (fx, fpx) = p.evaluate(x).unwrap();
        let y = x - &(&(&two(x, 2, 3) * &fx) / &fpx);
        let fpy = p.fprime(&y).unwrap();
        let t = &fpy / &fpx;
        let bracket = &(&two(x, 9, 4) - &(&two(x, 9, 4) * &t)) + &(&t * &t);
        let chun = &two(x, 3, 2) - &(&t / &two(x, 2, 1));
        x - &(&(&bracket * &chun) * &(&fx / &fpx))
    };

    let literals: [(&str, &dyn Fn(&Problem, &Real) -> Real); 3] = [
        ("m1", &literal_m1),
        ("m2", &literal_m2),
        ("m3", &literal_m3),
    ];
    let mut rng = rand::rngs::StdRng::seed_from_u64(20260810);
    let mut compared = 0;
    for (name, literal) in literals {
        let scheme = catalog(name, None).unwrap();
        for id in BUILTIN_IDS {
            let problem = builtin_problem(id).unwrap();
            let root = problem.reference_root(&ctx).unwrap().unwrap();
            for _ in 0..100 {
                let offset: f64 = rng.gen_range(-0.05..0.05);
                let x = &root + &ctx.from_f64(offset);
                let via_weights = scheme_step(&problem, &scheme, &x).unwrap().x_next;
                let via_literal = literal(&problem, &x);
                let tol = &via_weights.ulp() * &ctx.from_u32(10);
                let diff = (&via_weights - &via_literal).abs();
                assert!(
                    diff <= tol,
                    "{name} on {id} at offset {offset}: differs by {diff} (> 10 ulps)"
                );
                compared += 1;
            }
        }
    }
    assert_eq!(compared, 1200);
    println!(
        "criterion 7 (reduction and equivalence): PASS - unit weight is bitwise Newton; \
         1200 random near-root steps agree with the literal forms within 10 ulps"
    );
}

#[test]
fn criterion_8_series_kernel() {
    // every stated intermediate-expansion coefficient must be reproduced
    // exactly, except the single stated coefficient that contradicts its
    // own surrounding expansion; that one must be detected and reported
    // side by side, never silently matched.
    let comparisons = compare_stated_intermediates(5).unwrap();
    assert!(comparisons.len() >= 20);
    let mismatches: Vec<_> = comparisons.iter().filter(|c| !c.matches).collect();
    assert_eq!(
        mismatches.len(),
        1,
        "exactly one stated coefficient disagrees with exact arithmetic"
    );
    let m = mismatches[0];
    assert_eq!((m.step, m.role, m.power), ("damped", "derivative-ratio", 1));
    assert_eq!(m.stated, poly(&[(-2, 3, &[(Symbol::C2, 1)])]));
    assert_eq!(m.derived, poly(&[(-4, 3, &[(Symbol::C2, 1)])]));

    println!(
        "criterion 8 (series kernel): PASS - all stated expansion coefficients reproduced \
         except the damped-step derivative-ratio e^1 term, which exact arithmetic derives \
         as -4/3 c2 against the stated -2/3 c2 (reported, not corrected); ring laws hold"
    );
}

mod series_ring_laws {
    use super::*;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::from((n, d)))
    }

    fn arb_poly() -> impl Strategy<Value = CoeffPoly> {
        proptest::collection::vec(
            (arb_rational(), 0u8..=2, 0u8..=1, 0u8..=1),
            0..3,
        )
        .prop_map(|terms| {
            let mut acc = CoeffPoly::zero();
            for (c, e2, e3, ea) in terms {
                acc = &acc
                    + &CoeffPoly::term(
                        c,
                        &[(Symbol::C2, e2), (Symbol::C3, e3), (Symbol::A2, ea)],
                    );
            }
            acc
        })
    }

    fn arb_series() -> impl Strategy<Value = ESeries> {
        proptest::collection::vec(arb_poly(), 5).prop_map(|coeffs| ESeries::from_coeffs(4, coeffs))
    }

    fn arb_unit_series() -> impl Strategy<Value = ESeries> {
        proptest::collection::vec(arb_poly(), 4).prop_map(|mut coeffs| {
            coeffs.insert(0, CoeffPoly::one());
            ESeries::from_coeffs(4, coeffs)
        })
    }

    proptest! {
        #[test]
        fn addition_commutes(a in arb_series(), b in arb_series()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        }

        #[test]
        fn multiplication_commutes(a in arb_series(), b in arb_series()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn multiplication_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn multiplication_distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn reciprocal_inverts(a in arb_unit_series()) {
            let inv = a.reciprocal().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), ESeries::one(4));
        }
    }
}
