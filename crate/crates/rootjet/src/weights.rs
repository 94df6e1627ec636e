//! Weight functions and the method catalog.
//!
//! A weight is a rational function of the derivative ratio
//! `t = f'(y)/f'(x)` together with its explicitly transcribed jet at
//! `t = 1` (value and first three derivatives). Condition checks on the
//! jets decide third- and fourth-order convergence; the evaluator is
//! what the solver actually runs. Storing both lets tests confirm the
//! transcription against the evaluator.

use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{Rational, Real};
use crate::oracle::derive::OracleScheme;
use crate::oracle::poly::{CoeffPoly, Symbol};

/// A weight function `W(t)`: evaluator as a ratio of polynomials in `t`
/// plus the jet `W(1), W'(1), W''(1), W'''(1)` as exact rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightJet {
    formula: String,
    numerator: Vec<Rational>,
    denominator: Vec<Rational>,
    jet: [Rational; 4],
}

fn poly_eval(coeffs: &[Rational], t: &Real) -> Real {
    let mut acc = t.rational_like(&Rational::from(0));
    for c in coeffs.iter().rev() {
        acc = &(&acc * t) + &t.rational_like(c);
    }
    acc
}

impl WeightJet {
    /// Builds a weight from polynomial coefficients (ascending powers of
    /// `t`) and its transcribed jet at `t = 1`.
    pub fn new(
        formula: &str,
        numerator: Vec<Rational>,
        denominator: Vec<Rational>,
        jet: [Rational; 4],
    ) -> Result<Self> {
        let mut numerator = numerator;
        let mut denominator = denominator;
        while numerator.last().is_some_and(|c| *c == 0) {
            numerator.pop();
        }
        while denominator.last().is_some_and(|c| *c == 0) {
            denominator.pop();
        }
        if denominator.is_empty() {
            return Err(Error::Config(format!(
                "weight {formula}: zero denominator polynomial"
            )));
        }
        let den_at_one: Rational = denominator.iter().map(Rational::clone).sum();
        if den_at_one == 0 {
            return Err(Error::Config(format!(
                "weight {formula}: denominator vanishes at t = 1, no jet exists"
            )));
        }
        Ok(WeightJet {
            formula: formula.to_string(),
            numerator,
            denominator,
            jet,
        })
    }

    /// Constant weight `W(t) = c`.
    pub fn constant(formula: &str, c: Rational) -> Self {
        let jet = [
            c.clone(),
            Rational::from(0),
            Rational::from(0),
            Rational::from(0),
        ];
        WeightJet {
            formula: formula.to_string(),
            numerator: vec![c],
            denominator: vec![Rational::from(1)],
            jet,
        }
    }

    pub fn formula(&self) -> &str {
        &self.formula
    }

    /// The transcribed jet `[W(1), W'(1), W''(1), W'''(1)]`.
    pub fn jet(&self) -> &[Rational; 4] {
        &self.jet
    }

    /// Numerator coefficients, ascending powers of `t`.
    pub fn numerator(&self) -> &[Rational] {
        &self.numerator
    }

    /// Denominator coefficients, ascending powers of `t`.
    pub fn denominator(&self) -> &[Rational] {
        &self.denominator
    }

    /// Evaluates `W(t)` at working precision; evaluation at a pole of
    /// the formula reports which weight and where.
    pub fn evaluate(&self, t: &Real) -> Result<Real> {
        let den = poly_eval(&self.denominator, t);
        if den.is_zero() {
            return Err(Error::WeightDomain {
                weight: self.formula.clone(),
                t: t.to_decimal_string(20),
            });
        }
        Ok(&poly_eval(&self.numerator, t) / &den)
    }

    /// Jet entries as constant coefficient polynomials for the oracle.
    fn jet_polys(&self) -> [CoeffPoly; 4] {
        [
            CoeffPoly::constant(self.jet[0].clone()),
            CoeffPoly::constant(self.jet[1].clone()),
            CoeffPoly::constant(self.jet[2].clone()),
            CoeffPoly::constant(self.jet[3].clone()),
        ]
    }
}

/// Evaluates a weight function; free-function form of
/// [`WeightJet::evaluate`].
pub fn evaluate_weight(w: &WeightJet, t: &Real) -> Result<Real> {
    w.evaluate(t)
}

/// The iteration a [`SchemeSpec`] performs.
#[derive(Debug, Clone, PartialEq)]
pub enum SchemeKind {
    /// Plain Newton: `x - f/f'`.
    Newton,
    /// Two-step single-weight scheme with full predictor step.
    ThirdOrder { weight: WeightJet },
    /// Two-step product-weight scheme with damped predictor step.
    FourthOrder { p: WeightJet, q: WeightJet },
}

/// A complete scheme: kind, predictor damping, and display metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeSpec {
    pub kind: SchemeKind,
    /// Predictor damping `a` in `y = x - a f/f'`; 1 for Newton and
    /// third-order schemes, 2/3 for the fourth-order family.
    pub damping: Rational,
    pub label: String,
    /// Family parameter, recorded for parameterized catalog entries.
    pub gamma: Option<Rational>,
}

impl SchemeSpec {
    pub fn newton() -> Self {
        SchemeSpec {
            kind: SchemeKind::Newton,
            damping: Rational::from(1),
            label: "newton".into(),
            gamma: None,
        }
    }

    pub fn third_order(label: &str, weight: WeightJet) -> Self {
        SchemeSpec {
            kind: SchemeKind::ThirdOrder { weight },
            damping: Rational::from(1),
            label: label.into(),
            gamma: None,
        }
    }

    pub fn fourth_order(label: &str, p: WeightJet, q: WeightJet) -> Self {
        SchemeSpec {
            kind: SchemeKind::FourthOrder { p, q },
            damping: Rational::from((2, 3)),
            label: label.into(),
            gamma: None,
        }
    }

    /// Function evaluations per full iteration: `f` and `f'(x)` always,
    /// plus `f'(y)` for the two-step schemes.
    pub fn evaluations_per_iteration(&self) -> u32 {
        match self.kind {
            SchemeKind::Newton => 2,
            _ => 3,
        }
    }

    /// The scheme as the oracle sees it, with jets as exact constants.
    pub fn oracle_scheme(&self) -> OracleScheme {
        match &self.kind {
            SchemeKind::Newton => OracleScheme::newton(),
            SchemeKind::ThirdOrder { weight } => {
                OracleScheme::third_order(&self.label, weight.jet_polys())
            }
            SchemeKind::FourthOrder { p, q } => OracleScheme {
                label: self.label.clone(),
                first_weight: p.jet_polys(),
                second_weight: Some(q.jet_polys()),
                damping: CoeffPoly::constant(self.damping.clone()),
            },
        }
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SchemeKind::Newton => write!(f, "{}", self.label),
            SchemeKind::ThirdOrder { weight } => {
                write!(f, "{}: A(t) = {}", self.label, weight.formula())
            }
            SchemeKind::FourthOrder { p, q } => write!(
                f,
                "{}: P(t) = {}, Q(t) = {}, a = {}",
                self.label,
                p.formula(),
                q.formula(),
                self.damping
            ),
        }
    }
}

/// One verified condition: name, required value, transcribed value.
#[derive(Debug, Clone)]
pub struct ConditionCheck {
    pub name: String,
    pub expected: Rational,
    pub actual: Rational,
    pub passed: bool,
}

/// Outcome of checking a jet against the order conditions. Also records
/// the free jet values the error equation depends on.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub checks: Vec<ConditionCheck>,
    pub recorded: Vec<(String, Rational)>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, expected: Rational, actual: Rational) {
        let passed = expected == actual;
        self.checks.push(ConditionCheck {
            name: name.into(),
            expected,
            actual,
            passed,
        });
    }

    fn record(&mut self, name: &str, value: Rational) {
        self.recorded.push((name.into(), value));
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "  {} = {} (required {}) .. {}",
                c.name,
                c.actual,
                c.expected,
                if c.passed { "ok" } else { "VIOLATED" }
            )?;
        }
        for (name, value) in &self.recorded {
            writeln!(f, "  {name} = {value} (free)")?;
        }
        Ok(())
    }
}

/// Checks the third-order conditions `A(1) = 1`, `A'(1) = -1/2` and
/// records `A''(1)` for the error equation.
pub fn check_third_order(weight: &WeightJet) -> ConditionReport {
    let jet = weight.jet();
    let mut report = ConditionReport {
        checks: Vec::new(),
        recorded: Vec::new(),
    };
    report.push("A(1)", Rational::from(1), jet[0].clone());
    report.push("A'(1)", Rational::from((-1, 2)), jet[1].clone());
    report.record("A''(1)", jet[2].clone());
    report.record("A'''(1)", jet[3].clone());
    report
}

/// Checks the fourth-order conditions `a = 2/3`, `P(1) = 1`,
/// `P'(1) = -1/2`, `Q(1) = 1`, `Q'(1) = -1/4`, `Q''(1) = 2 - P''(1)`,
/// and records the free third derivatives.
pub fn check_fourth_order(p: &WeightJet, q: &WeightJet, damping: &Rational) -> ConditionReport {
    let pj = p.jet();
    let qj = q.jet();
    let mut report = ConditionReport {
        checks: Vec::new(),
        recorded: Vec::new(),
    };
    report.push("a", Rational::from((2, 3)), damping.clone());
    report.push("P(1)", Rational::from(1), pj[0].clone());
    report.push("P'(1)", Rational::from((-1, 2)), pj[1].clone());
    report.push("Q(1)", Rational::from(1), qj[0].clone());
    report.push("Q'(1)", Rational::from((-1, 4)), qj[1].clone());
    report.push(
        "Q''(1)",
        Rational::from(Rational::from(2) - &pj[2]),
        qj[2].clone(),
    );
    report.record("P''(1)", pj[2].clone());
    report.record("P'''(1)", pj[3].clone());
    report.record("Q'''(1)", qj[3].clone());
    report
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn weerakoon_weight() -> WeightJet {
    WeightJet::new(
        "2/(1+t)",
        vec![rat(2, 1)],
        vec![rat(1, 1), rat(1, 1)],
        [rat(1, 1), rat(-1, 2), rat(1, 2), rat(-3, 4)],
    )
    .expect("valid weight")
}

fn homeier_weight() -> WeightJet {
    WeightJet::new(
        "(1+t)/(2t)",
        vec![rat(1, 1), rat(1, 1)],
        vec![rat(0, 1), rat(2, 1)],
        [rat(1, 1), rat(-1, 2), rat(1, 1), rat(-3, 1)],
    )
    .expect("valid weight")
}

fn chun_weight() -> WeightJet {
    WeightJet::new(
        "(3-t)/2",
        vec![rat(3, 2), rat(-1, 2)],
        vec![rat(1, 1)],
        [rat(1, 1), rat(-1, 2), rat(0, 1), rat(0, 1)],
    )
    .expect("valid weight")
}

fn gamma3_weight(gamma: &Rational) -> WeightJet {
    // (3-t)/2 + g (t-1)^2 = (3/2 + g) + (-1/2 - 2g) t + g t^2
    let g = gamma.clone();
    WeightJet::new(
        &format!("(3-t)/2 + ({g})*(t-1)^2"),
        vec![
            Rational::from(rat(3, 2) + &g),
            Rational::from(rat(-1, 2) - Rational::from(2 * &g)),
            g.clone(),
        ],
        vec![rat(1, 1)],
        [
            rat(1, 1),
            rat(-1, 2),
            Rational::from(2 * &g),
            rat(0, 1),
        ],
    )
    .expect("valid weight")
}

fn m4_p_weight() -> WeightJet {
    // 3/2 - t/2 + (t-1)^2 = 5/2 - (5/2) t + t^2
    WeightJet::new(
        "3/2 - t/2 + (t-1)^2",
        vec![rat(5, 2), rat(-5, 2), rat(1, 1)],
        vec![rat(1, 1)],
        [rat(1, 1), rat(-1, 2), rat(2, 1), rat(0, 1)],
    )
    .expect("valid weight")
}

fn m4_q_weight(gamma: &Rational) -> WeightJet {
    // (9/4 - g) + (2g - 9/4) t + (1 - g) t^2
    let g = gamma.clone();
    WeightJet::new(
        &format!("(9/4-({g})) + (2*({g})-9/4)t + (1-({g}))t^2"),
        vec![
            Rational::from(rat(9, 4) - &g),
            Rational::from(Rational::from(2 * &g) - rat(9, 4)),
            Rational::from(Rational::from(1) - &g),
        ],
        vec![rat(1, 1)],
        [
            rat(1, 1),
            rat(-1, 4),
            Rational::from(Rational::from(2) - Rational::from(2 * &g)),
            rat(0, 1),
        ],
    )
    .expect("valid weight")
}

/// Catalog method names, in listing order.
pub const CATALOG_NAMES: [&str; 9] = [
    "newton",
    "weerakoon",
    "homeier",
    "chun",
    "gamma3",
    "m1",
    "m2",
    "m3",
    "m4",
];

/// Names that require the `gamma` parameter.
pub fn requires_gamma(name: &str) -> bool {
    matches!(name, "gamma3" | "m4")
}

/// Looks up a scheme by catalog name. `gamma3` and `m4` are families and
/// require `gamma`.
pub fn catalog(name: &str, gamma: Option<&Rational>) -> Result<SchemeSpec> {
    let need_gamma = || -> Result<&Rational> {
        gamma.ok_or_else(|| Error::MissingGamma(name.to_string()))
    };
    let spec = match name {
        "newton" => SchemeSpec::newton(),
        "weerakoon" => SchemeSpec::third_order("weerakoon", weerakoon_weight()),
        "homeier" => SchemeSpec::third_order("homeier", homeier_weight()),
        "chun" => SchemeSpec::third_order("chun", chun_weight()),
        "gamma3" => {
            let g = need_gamma()?;
            let mut s =
                SchemeSpec::third_order(&format!("gamma3({g})"), gamma3_weight(g));
            s.gamma = Some(g.clone());
            s
        }
        "m1" => SchemeSpec::fourth_order(
            "m1",
            weerakoon_weight(),
            WeightJet::new(
                "2 - (7/4)t + (3/4)t^2",
                vec![rat(2, 1), rat(-7, 4), rat(3, 4)],
                vec![rat(1, 1)],
                [rat(1, 1), rat(-1, 4), rat(3, 2), rat(0, 1)],
            )?,
        ),
        "m2" => SchemeSpec::fourth_order(
            "m2",
            homeier_weight(),
            WeightJet::new(
                "7/4 - (5/4)t + (1/2)t^2",
                vec![rat(7, 4), rat(-5, 4), rat(1, 2)],
                vec![rat(1, 1)],
                [rat(1, 1), rat(-1, 4), rat(1, 1), rat(0, 1)],
            )?,
        ),
        "m3" => SchemeSpec::fourth_order(
            "m3",
            chun_weight(),
            WeightJet::new(
                "9/4 - (9/4)t + t^2",
                vec![rat(9, 4), rat(-9, 4), rat(1, 1)],
                vec![rat(1, 1)],
                [rat(1, 1), rat(-1, 4), rat(2, 1), rat(0, 1)],
            )?,
        ),
        "m4" => {
            let g = need_gamma()?;
            let mut s = SchemeSpec::fourth_order(
                &format!("m4({g})"),
                m4_p_weight(),
                m4_q_weight(g),
            );
            s.gamma = Some(g.clone());
            s
        }
        other => return Err(Error::UnknownMethod(other.to_string())),
    };
    Ok(spec)
}

/// The scheme's condition report, when its kind has conditions to check.
pub fn condition_report(spec: &SchemeSpec) -> Option<ConditionReport> {
    match &spec.kind {
        SchemeKind::Newton => None,
        SchemeKind::ThirdOrder { weight } => Some(check_third_order(weight)),
        SchemeKind::FourthOrder { p, q } => Some(check_fourth_order(p, q, &spec.damping)),
    }
}

/// Oracle schemes for the parameterized families with `gamma` left
/// symbolic, used to derive their error equations as polynomials in γ.
pub fn symbolic_gamma_scheme(name: &str) -> Result<OracleScheme> {
    let two_gamma = CoeffPoly::term(Rational::from(2), &[(Symbol::Gamma, 1)]);
    match name {
        "gamma3" => Ok(OracleScheme::third_order(
            "gamma3(gamma)",
            [
                CoeffPoly::one(),
                CoeffPoly::constant(rat(-1, 2)),
                two_gamma,
                CoeffPoly::zero(),
            ],
        )),
        "m4" => Ok(OracleScheme::fourth_order(
            "m4(gamma)",
            [
                CoeffPoly::one(),
                CoeffPoly::constant(rat(-1, 2)),
                CoeffPoly::constant(rat(2, 1)),
                CoeffPoly::zero(),
            ],
            [
                CoeffPoly::one(),
                CoeffPoly::constant(rat(-1, 4)),
                &CoeffPoly::constant(rat(2, 1)) - &two_gamma,
                CoeffPoly::zero(),
            ],
            rat(2, 3),
        )),
        other => Err(Error::UnknownMethod(format!(
            "{other} (no symbolic-gamma family)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::PrecisionContext;
    use crate::oracle::series::ESeries;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(60).unwrap()
    }

    /// Jet of `num/den` at `t = 1` derived independently by series
    /// expansion: write `t = 1 + s`, expand numerator and denominator as
    /// polynomials in `s`, divide as truncated series.
    fn jet_via_series(num: &[Rational], den: &[Rational]) -> [Rational; 4] {
        let n = 3;
        let one_plus_s = ESeries::from_coeffs(n, vec![CoeffPoly::one(), CoeffPoly::one()]);
        let at_one_plus = |coeffs: &[Rational]| {
            let mut acc = ESeries::zero(n);
            let mut power = ESeries::one(n);
            for c in coeffs {
                acc = acc.add(&power.scale(c)).unwrap();
                power = power.mul(&one_plus_s).unwrap();
            }
            acc
        };
        let num_s = at_one_plus(num);
        let den_s = at_one_plus(den);
        let den_at_one = den_s.coeff(0).constant_term();
        let inv_den = den_s
            .scale(&Rational::from(1 / &den_at_one))
            .reciprocal()
            .unwrap();
        let w = num_s
            .mul(&inv_den)
            .unwrap()
            .scale(&Rational::from(1 / &den_at_one));
        [
            w.coeff(0).constant_term(),
            w.coeff(1).constant_term(),
            Rational::from(2 * w.coeff(2).constant_term()),
            Rational::from(6 * w.coeff(3).constant_term()),
        ]
    }

    fn all_catalog_specs() -> Vec<SchemeSpec> {
        let mut specs = Vec::new();
        for name in CATALOG_NAMES {
            let gamma = requires_gamma(name).then(|| rat(1, 2));
            specs.push(catalog(name, gamma.as_ref()).unwrap());
        }
        specs
    }

    fn weights_of(spec: &SchemeSpec) -> Vec<&WeightJet> {
        match &spec.kind {
            SchemeKind::Newton => vec![],
            SchemeKind::ThirdOrder { weight } => vec![weight],
            SchemeKind::FourthOrder { p, q } => vec![p, q],
        }
    }

    #[test]
    fn catalog_jets_match_series_expansion() {
        for spec in all_catalog_specs() {
            for w in weights_of(&spec) {
                let derived = jet_via_series(w.numerator(), w.denominator());
                assert_eq!(
                    &derived,
                    w.jet(),
                    "jet transcription of {} in {}",
                    w.formula(),
                    spec.label
                );
            }
        }
        // m4 at gamma = 1 as well (different Q)
        let m4 = catalog("m4", Some(&rat(1, 1))).unwrap();
        for w in weights_of(&m4) {
            assert_eq!(&jet_via_series(w.numerator(), w.denominator()), w.jet());
        }
    }

    #[test]
    fn catalog_jets_match_finite_differences() {
        // fourth-order central stencils for W', W''; second-order for W'''
        let ctx = ctx();
        let h = 1e-3;
        for spec in all_catalog_specs() {
            for w in weights_of(&spec) {
                let f = |offset: f64| {
                    w.evaluate(&ctx.from_f64(1.0 + offset)).unwrap().to_f64()
                };
                let (f2p, f1p, f0, f1m, f2m) = (f(2.0 * h), f(h), f(0.0), f(-h), f(-2.0 * h));
                let d1 = (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * h);
                let d2 = (-f2p + 16.0 * f1p - 30.0 * f0 + 16.0 * f1m - f2m) / (12.0 * h * h);
                let d3 = (f2p - 2.0 * f1p + 2.0 * f1m - f2m) / (2.0 * h * h * h);
                let jet = w.jet();
                let close = |got: f64, want: &Rational| {
                    let want = want.to_f64();
                    (got - want).abs() <= 1e-5 * (1.0 + want.abs())
                };
                assert!(close(f0, &jet[0]), "{}: W(1)", w.formula());
                assert!(close(d1, &jet[1]), "{}: W'(1)", w.formula());
                assert!(close(d2, &jet[2]), "{}: W''(1)", w.formula());
                assert!(close(d3, &jet[3]), "{}: W'''(1)", w.formula());
            }
        }
    }

    #[test]
    fn third_order_conditions() {
        for name in ["weerakoon", "homeier", "chun"] {
            let spec = catalog(name, None).unwrap();
            let report = condition_report(&spec).unwrap();
            assert!(report.passed(), "{name}:\n{report}");
        }
        // gamma3 passes for every gamma
        for g in [rat(0, 1), rat(1, 2), rat(-3, 7)] {
            let spec = catalog("gamma3", Some(&g)).unwrap();
            assert!(condition_report(&spec).unwrap().passed());
        }
        // the constant Newton weight is not third order
        let constant = WeightJet::constant("1", rat(1, 1));
        let report = check_third_order(&constant);
        assert!(!report.passed());
        assert!(report.checks.iter().any(|c| c.name == "A'(1)" && !c.passed));
    }

    #[test]
    fn fourth_order_conditions() {
        for name in ["m1", "m2", "m3"] {
            let spec = catalog(name, None).unwrap();
            let report = condition_report(&spec).unwrap();
            assert!(report.passed(), "{name}:\n{report}");
        }
        // m4 passes exactly at gamma = 1
        let at_one = catalog("m4", Some(&rat(1, 1))).unwrap();
        assert!(condition_report(&at_one).unwrap().passed());
        for g in [rat(0, 1), rat(1, 2), rat(2, 1)] {
            let spec = catalog("m4", Some(&g)).unwrap();
            let report = condition_report(&spec).unwrap();
            assert!(!report.passed(), "m4({g}) should fail Q''(1) = 2 - P''(1)");
            assert!(report
                .checks
                .iter()
                .any(|c| c.name == "Q''(1)" && !c.passed));
        }
        // a different damping constant is flagged
        let mut wrong_a = catalog("m1", None).unwrap();
        wrong_a.damping = rat(1, 2);
        assert!(!condition_report(&wrong_a).unwrap().passed());
    }

    #[test]
    fn evaluate_weight_values_and_poles() {
        let ctx = ctx();
        let weerakoon = weerakoon_weight();
        assert_eq!(weerakoon.evaluate(&ctx.one()).unwrap(), ctx.one());
        let chun = chun_weight();
        assert_eq!(
            chun.evaluate(&ctx.zero()).unwrap(),
            ctx.parse("1.5").unwrap()
        );
        let homeier = homeier_weight();
        let err = homeier.evaluate(&ctx.zero()).unwrap_err();
        match err {
            Error::WeightDomain { weight, .. } => assert_eq!(weight, "(1+t)/(2t)"),
            other => panic!("expected weight-domain error, got {other:?}"),
        }
        let err = weerakoon.evaluate(&ctx.parse("-1").unwrap()).unwrap_err();
        assert!(matches!(err, Error::WeightDomain { .. }));
    }

    #[test]
    fn gamma3_at_zero_equals_chun_pointwise() {
        let ctx = ctx();
        let chun = chun_weight();
        let gz = gamma3_weight(&rat(0, 1));
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        for _ in 0..100 {
            let t = ctx.from_f64(rng.gen_range(0.0..2.0));
            assert_eq!(gz.evaluate(&t).unwrap(), chun.evaluate(&t).unwrap());
        }
    }

    #[test]
    fn missing_gamma_and_unknown_names() {
        assert!(matches!(
            catalog("gamma3", None),
            Err(Error::MissingGamma(_))
        ));
        assert!(matches!(catalog("m4", None), Err(Error::MissingGamma(_))));
        assert!(matches!(
            catalog("m17", None),
            Err(Error::UnknownMethod(_))
        ));
    }

    #[test]
    fn catalog_covers_all_names() {
        assert_eq!(CATALOG_NAMES.len(), 9);
        for name in CATALOG_NAMES {
            let gamma = requires_gamma(name).then(|| rat(1, 1));
            assert!(catalog(name, gamma.as_ref()).is_ok(), "{name}");
        }
    }
}
