//! Error-equation derivation for the two-step weight-function schemes.
//!
//! Every scheme here has the shape
//! `x1 = x - W(t) * f(x)/f'(x)` with predictor `y = x - a * f(x)/f'(x)`
//! and `t = f'(y)/f'(x)`, where `W` is either a single weight `A` or a
//! product `P*Q`. Expanding around a simple root with `e = x - α` and
//! `c_h = f^(h)(α)/h!` turns one iteration into a power series in `e`;
//! the first nonvanishing coefficient is the convergence order and the
//! asymptotic error constant.

use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::oracle::poly::{CoeffPoly, Symbol};
use crate::oracle::series::ESeries;

/// Largest truncation order the `c2..c5` coefficient basis supports
/// exactly.
pub const MAX_TRUNCATION: usize = 5;

/// Default truncation order; enough to establish orders up to five.
pub const DEFAULT_TRUNCATION: usize = 5;

/// A weight jet for the oracle: values of `W(1), W'(1), W''(1), W'''(1)`
/// as coefficient polynomials, so entries may be exact rationals, the
/// free symbols `A''(1)`/`A'''(1)`/`B'''(1)`, or expressions in `gamma`.
pub type JetSymbols = [CoeffPoly; 4];

/// Scheme description consumed by the oracle.
#[derive(Debug, Clone)]
pub struct OracleScheme {
    pub label: String,
    /// Jet of the single weight (or of the first factor for products).
    pub first_weight: JetSymbols,
    /// Jet of the second factor, present for product-weight schemes.
    pub second_weight: Option<JetSymbols>,
    /// Predictor damping constant; a rational constant or the free
    /// symbol `a`.
    pub damping: CoeffPoly,
}

impl OracleScheme {
    fn constant_jet(values: [Rational; 4]) -> JetSymbols {
        values.map(CoeffPoly::constant)
    }

    /// Plain Newton iteration: constant unit weight, full step.
    pub fn newton() -> Self {
        OracleScheme {
            label: "newton".into(),
            first_weight: Self::constant_jet([
                Rational::from(1),
                Rational::from(0),
                Rational::from(0),
                Rational::from(0),
            ]),
            second_weight: None,
            damping: CoeffPoly::one(),
        }
    }

    /// Single-weight scheme with full predictor step.
    pub fn third_order(label: &str, jet: JetSymbols) -> Self {
        OracleScheme {
            label: label.into(),
            first_weight: jet,
            second_weight: None,
            damping: CoeffPoly::one(),
        }
    }

    /// Product-weight scheme with damped predictor step.
    pub fn fourth_order(label: &str, p: JetSymbols, q: JetSymbols, damping: Rational) -> Self {
        OracleScheme {
            label: label.into(),
            first_weight: p,
            second_weight: Some(q),
            damping: CoeffPoly::constant(damping),
        }
    }

    /// Symbolic single weight constrained only by `A(1)=1, A'(1)=-1/2`.
    pub fn third_order_symbolic() -> Self {
        OracleScheme {
            label: "third-order family".into(),
            first_weight: [
                CoeffPoly::one(),
                CoeffPoly::constant(Rational::from((-1, 2))),
                CoeffPoly::symbol(Symbol::A2),
                CoeffPoly::symbol(Symbol::A3),
            ],
            second_weight: None,
            damping: CoeffPoly::one(),
        }
    }

    /// Symbolic product weights constrained by
    /// `P(1)=1, P'(1)=-1/2, Q(1)=1, Q'(1)=-1/4, Q''(1)=2-P''(1)`,
    /// with the damping constant 2/3.
    pub fn fourth_order_symbolic() -> Self {
        let mut scheme = Self::fourth_order_symbolic_damping();
        scheme.damping = CoeffPoly::constant(Rational::from((2, 3)));
        scheme
    }

    /// Same jets as [`fourth_order_symbolic`](Self::fourth_order_symbolic)
    /// but with the damping constant left as the free symbol `a`.
    pub fn fourth_order_symbolic_damping() -> Self {
        OracleScheme {
            label: "fourth-order family".into(),
            first_weight: [
                CoeffPoly::one(),
                CoeffPoly::constant(Rational::from((-1, 2))),
                CoeffPoly::symbol(Symbol::A2),
                CoeffPoly::symbol(Symbol::A3),
            ],
            second_weight: Some([
                CoeffPoly::one(),
                CoeffPoly::constant(Rational::from((-1, 4))),
                &CoeffPoly::constant(Rational::from(2)) - &CoeffPoly::symbol(Symbol::A2),
                CoeffPoly::symbol(Symbol::B3),
            ]),
            damping: CoeffPoly::symbol(Symbol::Damping),
        }
    }
}

/// Error equation `e_{n+1} = C e^order + O(e^(order+1))`.
#[derive(Debug, Clone)]
pub struct ErrorEquation {
    /// First power of `e` with a nonvanishing coefficient.
    pub order: usize,
    /// The coefficient at that power: the asymptotic error constant as a
    /// polynomial in `c_h` and the free jet symbols.
    pub leading_coefficient: CoeffPoly,
    /// The full truncated series of `e_{n+1}`.
    pub series: ESeries,
}

impl ErrorEquation {
    /// Renders `e_{n+1} = (...) e^k + O(e^(k+1))`.
    pub fn display_leading(&self) -> String {
        format!(
            "e_{{n+1}} = ({}) e^{} + O(e^{})",
            self.leading_coefficient,
            self.order,
            self.order + 1
        )
    }
}

/// Taylor coefficients of `f/f'(α)` about the root: `e + c2 e^2 + ... + c5 e^5`.
fn f_series(truncation: usize) -> ESeries {
    ESeries::from_coeffs(
        truncation,
        vec![
            CoeffPoly::zero(),
            CoeffPoly::one(),
            CoeffPoly::symbol(Symbol::C2),
            CoeffPoly::symbol(Symbol::C3),
            CoeffPoly::symbol(Symbol::C4),
            CoeffPoly::symbol(Symbol::C5),
        ][..=truncation.min(5)]
            .to_vec(),
    )
}

/// Taylor coefficients of `f'/f'(α)` as a polynomial in the displacement
/// from the root: `1 + 2 c2 d + 3 c3 d^2 + 4 c4 d^3 + 5 c5 d^4`.
fn fprime_taylor() -> Vec<CoeffPoly> {
    vec![
        CoeffPoly::one(),
        CoeffPoly::term(Rational::from(2), &[(Symbol::C2, 1)]),
        CoeffPoly::term(Rational::from(3), &[(Symbol::C3, 1)]),
        CoeffPoly::term(Rational::from(4), &[(Symbol::C4, 1)]),
        CoeffPoly::term(Rational::from(5), &[(Symbol::C5, 1)]),
    ]
}

fn check_truncation(truncation: usize) -> Result<()> {
    if truncation > MAX_TRUNCATION {
        return Err(Error::UnsupportedTruncation {
            requested: truncation,
        });
    }
    if truncation < 2 {
        return Err(Error::Config(format!(
            "truncation order must be at least 2, got {truncation}"
        )));
    }
    Ok(())
}

/// The intermediate series of one iteration, all normalized by `f'(α)`.
#[derive(Debug, Clone)]
pub struct Intermediates {
    /// `f(x)/f'(x)`, the Newton correction.
    pub newton_correction: ESeries,
    /// `y - α` for predictor `y = x - a f/f'`.
    pub predictor_error: ESeries,
    /// `f'(y)/f'(α)` expanded through the predictor error.
    pub derivative_at_predictor: ESeries,
    /// `t = f'(y)/f'(x)`.
    pub derivative_ratio: ESeries,
}

/// Expands the intermediate series for a given damping constant.
pub fn intermediate_series(damping: &CoeffPoly, truncation: usize) -> Result<Intermediates> {
    check_truncation(truncation)?;
    let f = f_series(truncation);
    let fp = ESeries::compose_into_polynomial(&fprime_taylor(), &ESeries::error_symbol(truncation))?;
    let inv_fp = fp.reciprocal()?;
    let u = f.mul(&inv_fp)?;
    let e = ESeries::error_symbol(truncation);
    let delta = e.sub(&u.scale_poly(damping))?;
    let fpy = ESeries::compose_into_polynomial(&fprime_taylor(), &delta)?;
    let t = fpy.mul(&inv_fp)?;
    Ok(Intermediates {
        newton_correction: u,
        predictor_error: delta,
        derivative_at_predictor: fpy,
        derivative_ratio: t,
    })
}

/// Derives the error equation of a scheme by exact series expansion.
pub fn derive_error_equation(scheme: &OracleScheme, truncation: usize) -> Result<ErrorEquation> {
    check_truncation(truncation)?;
    let parts = intermediate_series(&scheme.damping, truncation)?;
    let one = ESeries::one(truncation);
    let tau = parts.derivative_ratio.sub(&one)?;
    let mut weight = ESeries::expand_weight(&scheme.first_weight, &tau)?;
    if let Some(second) = &scheme.second_weight {
        weight = weight.mul(&ESeries::expand_weight(second, &tau)?)?;
    }
    let e = ESeries::error_symbol(truncation);
    let next = e.sub(&weight.mul(&parts.newton_correction)?)?;
    debug_assert!(next.coeff(0).is_zero());
    let order = next
        .first_nonzero(1)
        .ok_or(Error::InconclusiveOrder { truncation })?;
    Ok(ErrorEquation {
        order,
        leading_coefficient: next.coeff(order).clone(),
        series: next,
    })
}

/// Which of the two convergence theorems to verify mechanically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// Third-order conditions on a single weight: `A(1)=1, A'(1)=-1/2`.
    ThirdOrderFamily,
    /// Fourth-order conditions on a product of weights with damping 2/3.
    FourthOrderFamily,
}

/// Outcome of mechanically re-deriving a convergence theorem with fully
/// symbolic jets.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub theorem: Theorem,
    /// Powers asserted to vanish, with the offending polynomial when one
    /// does not.
    pub vanishing: Vec<(usize, CoeffPoly)>,
    /// True when every asserted coefficient is the zero polynomial.
    pub conditions_hold: bool,
    /// The derived error equation of the family.
    pub equation: ErrorEquation,
    /// Analysis of the damping constant, fourth-order family only.
    pub damping: Option<DampingAnalysis>,
}

impl TheoremReport {
    /// First asserted power whose coefficient failed to vanish.
    pub fn counterexample(&self) -> Option<(usize, &CoeffPoly)> {
        self.vanishing
            .iter()
            .find(|(_, poly)| !poly.is_zero())
            .map(|(power, poly)| (*power, poly))
    }
}

/// What the second-order coefficient demands of the damping constant.
#[derive(Debug, Clone)]
pub struct DampingAnalysis {
    /// Coefficient of `e^2` with the damping constant left symbolic.
    pub e2_coefficient: CoeffPoly,
    /// True when substituting `a = 2/3` annihilates that coefficient.
    pub admits_two_thirds: bool,
    /// The unique rational root in `a`, when the coefficient is linear
    /// in `a` with proportional polynomial parts.
    pub unique_root: Option<Rational>,
}

fn damping_analysis(truncation: usize) -> Result<DampingAnalysis> {
    let scheme = OracleScheme::fourth_order_symbolic_damping();
    let parts = intermediate_series(&scheme.damping, truncation)?;
    let one = ESeries::one(truncation);
    let tau = parts.derivative_ratio.sub(&one)?;
    let p = ESeries::expand_weight(&scheme.first_weight, &tau)?;
    let q = ESeries::expand_weight(scheme.second_weight.as_ref().unwrap(), &tau)?;
    let weight = p.mul(&q)?;
    let e = ESeries::error_symbol(truncation);
    let next = e.sub(&weight.mul(&parts.newton_correction)?)?;
    let e2 = next.coeff(2).clone();

    let two_thirds = Rational::from((2, 3));
    let admits_two_thirds = e2.substitute(Symbol::Damping, &two_thirds).is_zero();

    let unique_root = linear_root_in(&e2, Symbol::Damping);
    Ok(DampingAnalysis {
        e2_coefficient: e2,
        admits_two_thirds,
        unique_root,
    })
}

/// The unique rational root of a polynomial that is linear in `symbol`
/// with proportional coefficient parts: `p0 + p1 s = 0` at `s = -p0/p1`.
pub fn linear_root_in(poly: &CoeffPoly, symbol: Symbol) -> Option<Rational> {
    let parts = poly.collect_powers(symbol);
    if parts.len() != 2 || parts[1].is_zero() {
        return None;
    }
    proportionality_ratio(&parts[0], &parts[1]).map(|r| -r)
}

/// When `numerator = r * denominator` for a single rational `r`, returns
/// `r`. Used to solve linear vanishing conditions exactly.
fn proportionality_ratio(numerator: &CoeffPoly, denominator: &CoeffPoly) -> Option<Rational> {
    let mut ratio: Option<Rational> = None;
    let num_terms: Vec<_> = numerator.terms().collect();
    let den_terms: Vec<_> = denominator.terms().collect();
    if num_terms.len() != den_terms.len() {
        return None;
    }
    for ((m_num, c_num), (m_den, c_den)) in num_terms.iter().zip(&den_terms) {
        if m_num != m_den {
            return None;
        }
        let r = Rational::from(*c_num / *c_den);
        match &ratio {
            None => ratio = Some(r),
            Some(existing) if *existing == r => {}
            Some(_) => return None,
        }
    }
    ratio
}

/// Mechanically verifies a convergence theorem: derives the family's
/// error equation with symbolic jets constrained only by the theorem's
/// conditions, asserts that every lower-order coefficient vanishes
/// identically, and reports the general leading coefficient.
pub fn verify_theorem(theorem: Theorem, truncation: usize) -> Result<TheoremReport> {
    check_truncation(truncation)?;
    let (scheme, expected_order) = match theorem {
        Theorem::ThirdOrderFamily => (OracleScheme::third_order_symbolic(), 3),
        Theorem::FourthOrderFamily => (OracleScheme::fourth_order_symbolic(), 4),
    };
    if truncation < expected_order {
        return Err(Error::Config(format!(
            "truncation {truncation} cannot exhibit an order-{expected_order} equation"
        )));
    }
    let equation = derive_error_equation(&scheme, truncation)?;
    let vanishing: Vec<(usize, CoeffPoly)> = (1..expected_order)
        .map(|k| (k, equation.series.coeff(k).clone()))
        .collect();
    let conditions_hold =
        vanishing.iter().all(|(_, poly)| poly.is_zero()) && equation.order == expected_order;
    let damping = match theorem {
        Theorem::ThirdOrderFamily => None,
        Theorem::FourthOrderFamily => Some(damping_analysis(truncation)?),
    };
    Ok(TheoremReport {
        theorem,
        vanishing,
        conditions_hold,
        equation,
        damping,
    })
}
