//! Verification of catalog methods and the family theorems against the
//! stated literature values, with explicit discrepancy reporting.

use crate::error::Result;
use crate::numerics::Rational;
use crate::oracle::derive::{
    derive_error_equation, intermediate_series, linear_root_in, verify_theorem, ErrorEquation,
    Theorem, TheoremReport,
};
use crate::oracle::poly::{CoeffPoly, Symbol};
use crate::stated;
use crate::weights::{catalog, condition_report, requires_gamma, symbolic_gamma_scheme, ConditionReport};

/// What disagreed between the derivation and the stated claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscrepancyKind {
    /// Stated and derived convergence orders differ.
    Order,
    /// Stated and derived leading coefficients differ.
    LeadingCoefficient,
}

/// A disagreement with a stated value, reported side by side.
#[derive(Debug, Clone)]
pub struct Discrepancy {
    pub kind: DiscrepancyKind,
    pub stated: String,
    pub derived: String,
}

impl std::fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let what = match self.kind {
            DiscrepancyKind::Order => "order",
            DiscrepancyKind::LeadingCoefficient => "leading coefficient",
        };
        write!(
            f,
            "{what} disagrees: stated {}, derived {}",
            self.stated, self.derived
        )
    }
}

/// Behaviour of a parameterized family in `gamma`.
#[derive(Debug, Clone)]
pub struct GammaAnalysis {
    /// The first coefficient below the claimed order, as a polynomial in
    /// `gamma`; the family only reaches the claimed order where this
    /// vanishes.
    pub obstruction: CoeffPoly,
    /// The unique `gamma` annihilating the obstruction, when linear.
    pub vanishes_at: Option<Rational>,
}

/// Full verification record for one catalog method.
#[derive(Debug, Clone)]
pub struct MethodVerification {
    pub label: String,
    /// Jet condition checks (absent for Newton and for symbolic-γ runs).
    pub conditions: Option<ConditionReport>,
    pub derived: ErrorEquation,
    pub stated_order: usize,
    pub stated_coefficient: Option<CoeffPoly>,
    pub discrepancies: Vec<Discrepancy>,
    /// Present when a family was verified with `gamma` symbolic and the
    /// derived order fell short of the claim.
    pub gamma_analysis: Option<GammaAnalysis>,
}

impl MethodVerification {
    pub fn agrees_with_stated(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Derives a method's error equation and compares it against the stated
/// claim. For `gamma3` and `m4`, passing no `gamma` verifies the whole
/// family with `gamma` symbolic.
pub fn verify_method(
    name: &str,
    gamma: Option<&Rational>,
    truncation: usize,
) -> Result<MethodVerification> {
    let symbolic_family = requires_gamma(name) && gamma.is_none();
    let (label, conditions, derived) = if symbolic_family {
        let scheme = symbolic_gamma_scheme(name)?;
        let derived = derive_error_equation(&scheme, truncation)?;
        (scheme.label.clone(), None, derived)
    } else {
        let spec = catalog(name, gamma)?;
        let derived = derive_error_equation(&spec.oracle_scheme(), truncation)?;
        (spec.label.clone(), condition_report(&spec), derived)
    };

    let claim = stated::method_claim(name).ok_or_else(|| {
        crate::error::Error::UnknownMethod(format!("{name} (no stated claim)"))
    })?;
    let stated_coefficient = claim.coefficient.map(|c| match gamma {
        Some(g) => c.substitute(Symbol::Gamma, g),
        None => c,
    });

    let mut discrepancies = Vec::new();
    if derived.order != claim.order {
        discrepancies.push(Discrepancy {
            kind: DiscrepancyKind::Order,
            stated: claim.order.to_string(),
            derived: derived.order.to_string(),
        });
    } else if let Some(sc) = &stated_coefficient {
        if *sc != derived.leading_coefficient {
            discrepancies.push(Discrepancy {
                kind: DiscrepancyKind::LeadingCoefficient,
                stated: sc.to_string(),
                derived: derived.leading_coefficient.to_string(),
            });
        }
    }

    let gamma_analysis = if symbolic_family && derived.order < claim.order {
        Some(GammaAnalysis {
            obstruction: derived.leading_coefficient.clone(),
            vanishes_at: linear_root_in(&derived.leading_coefficient, Symbol::Gamma),
        })
    } else {
        None
    };

    Ok(MethodVerification {
        label,
        conditions,
        derived,
        stated_order: claim.order,
        stated_coefficient,
        discrepancies,
        gamma_analysis,
    })
}

/// A theorem report together with the stated general coefficient.
#[derive(Debug, Clone)]
pub struct TheoremVerification {
    pub report: TheoremReport,
    pub stated_coefficient: CoeffPoly,
    pub matches_stated: bool,
}

/// Re-derives a family theorem and compares the general leading
/// coefficient against the stated one.
pub fn verify_theorem_with_stated(
    theorem: Theorem,
    truncation: usize,
) -> Result<TheoremVerification> {
    let report = verify_theorem(theorem, truncation)?;
    let stated_coefficient = match theorem {
        Theorem::ThirdOrderFamily => stated::third_order_family_coefficient(),
        Theorem::FourthOrderFamily => stated::fourth_order_family_coefficient(),
    };
    let matches_stated = report.equation.leading_coefficient == stated_coefficient;
    Ok(TheoremVerification {
        report,
        stated_coefficient,
        matches_stated,
    })
}

/// One stated intermediate coefficient checked against the derivation.
#[derive(Debug, Clone)]
pub struct IntermediateComparison {
    /// `full` or `damped` predictor step.
    pub step: &'static str,
    pub role: &'static str,
    pub power: usize,
    pub stated: CoeffPoly,
    pub derived: CoeffPoly,
    pub matches: bool,
}

/// Compares every stated intermediate-expansion coefficient against the
/// series kernel's derivation.
pub fn compare_stated_intermediates(truncation: usize) -> Result<Vec<IntermediateComparison>> {
    let mut out = Vec::new();
    let cases = [
        (
            "full",
            CoeffPoly::one(),
            stated::full_step_intermediates(),
        ),
        (
            "damped",
            CoeffPoly::constant(Rational::from((2, 3))),
            stated::damped_step_intermediates(),
        ),
    ];
    for (step, damping, claims) in cases {
        let parts = intermediate_series(&damping, truncation)?;
        for claim in claims {
            let series = match claim.role {
                "newton-correction" => &parts.newton_correction,
                "predictor-error" => &parts.predictor_error,
                "derivative-at-predictor" => &parts.derivative_at_predictor,
                "derivative-ratio" => &parts.derivative_ratio,
                other => unreachable!("unknown series role {other}"),
            };
            let derived = series.coeff(claim.power).clone();
            let matches = derived == claim.value;
            out.push(IntermediateComparison {
                step,
                role: claim.role,
                power: claim.power,
                stated: claim.value,
                derived,
                matches,
            });
        }
    }
    Ok(out)
}
