//! Iteration drivers, traces, and the computational order estimator.

use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{PrecisionContext, Real};
use crate::problems::Problem;
use crate::weights::{SchemeKind, SchemeSpec};

/// Solver settings. Benchmark mode runs a fixed number of iterations;
/// setting `residual_tolerance` stops as soon as `|f(x)| <= tol`.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub max_iterations: usize,
    pub residual_tolerance: Option<Real>,
    pub precision: PrecisionContext,
}

impl SolverConfig {
    /// The benchmark protocol: three iterations at 200 digits.
    pub fn benchmark() -> Self {
        SolverConfig {
            max_iterations: 3,
            residual_tolerance: None,
            precision: PrecisionContext::standard(),
        }
    }

    pub fn with_iterations(ctx: PrecisionContext, max_iterations: usize) -> Self {
        SolverConfig {
            max_iterations,
            residual_tolerance: None,
            precision: ctx,
        }
    }

    pub fn with_tolerance(ctx: PrecisionContext, tolerance: Real, cap: usize) -> Self {
        SolverConfig {
            max_iterations: cap,
            residual_tolerance: Some(tolerance),
            precision: ctx,
        }
    }
}

/// Why a trace stopped.
#[derive(Debug, Clone, PartialEq)]
pub enum Termination {
    MaxIterations,
    Tolerance,
    Failure(String),
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Termination::MaxIterations => write!(f, "iteration limit"),
            Termination::Tolerance => write!(f, "residual tolerance met"),
            Termination::Failure(reason) => write!(f, "failure: {reason}"),
        }
    }
}

/// One completed iteration: the new iterate, the predictor and ratio
/// that produced it (absent for Newton), and the error against the
/// reference root when one is known.
#[derive(Debug, Clone)]
pub struct IterationStep {
    pub n: usize,
    pub x: Real,
    pub y: Option<Real>,
    pub t: Option<Real>,
    pub error: Option<Real>,
}

/// Record of a solve: every iterate in order plus the stop reason.
#[derive(Debug, Clone)]
pub struct IterationTrace {
    pub scheme_label: String,
    pub x0: Real,
    pub steps: Vec<IterationStep>,
    pub terminated_by: Termination,
}

impl IterationTrace {
    /// Error values present in the trace, in step order.
    pub fn errors(&self) -> Vec<&Real> {
        self.steps.iter().filter_map(|s| s.error.as_ref()).collect()
    }
}

/// One Newton step `x - f(x)/f'(x)`.
pub fn newton_step(problem: &Problem, x: &Real) -> Result<Real> {
    let (fx, fpx) = problem.evaluate(x)?;
    if fpx.is_zero() {
        return Err(Error::DerivativeSingular {
            x: x.to_decimal_string(20),
        });
    }
    Ok(x - &(&fx / &fpx))
}

/// Result of one scheme step: the next iterate plus the predictor `y`
/// and ratio `t = f'(y)/f'(x)` for the two-step schemes.
#[derive(Debug, Clone)]
pub struct SchemeStep {
    pub x_next: Real,
    pub y: Option<Real>,
    pub t: Option<Real>,
}

/// Advances a scheme by one iteration from `x`.
pub fn scheme_step(problem: &Problem, scheme: &SchemeSpec, x: &Real) -> Result<SchemeStep> {
    let (fx, fpx) = problem.evaluate(x)?;
    if fpx.is_zero() {
        return Err(Error::DerivativeSingular {
            x: x.to_decimal_string(20),
        });
    }
    let correction = &fx / &fpx;

    let weights: &[&crate::weights::WeightJet] = match &scheme.kind {
        SchemeKind::Newton => {
            return Ok(SchemeStep {
                x_next: x - &correction,
                y: None,
                t: None,
            });
        }
        SchemeKind::ThirdOrder { weight } => &[weight],
        SchemeKind::FourthOrder { p, q } => &[p, q],
    };

    let damping = x.rational_like(&scheme.damping);
    let y = x - &(&damping * &correction);
    let fpy = problem.fprime(&y)?;
    let t = &fpy / &fpx;

    let mut weight_value = weights[0].evaluate(&t)?;
    for w in &weights[1..] {
        weight_value = &weight_value * &w.evaluate(&t)?;
    }
    Ok(SchemeStep {
        x_next: x - &(&weight_value * &correction),
        y: Some(y),
        t: Some(t),
    })
}

/// Runs a scheme from `x0`, recording every iterate.
///
/// Step failures after the first completed iteration are retained in the
/// trace as `Termination::Failure`; a failure on the very first step is
/// returned as an error since there is nothing to record.
pub fn solve(
    problem: &Problem,
    scheme: &SchemeSpec,
    x0: &Real,
    cfg: &SolverConfig,
) -> Result<IterationTrace> {
    let root = problem.reference_root(&cfg.precision)?;
    let x0 = PrecisionContext::round_to_bits(x0, cfg.precision.bits());
    let mut steps = Vec::with_capacity(cfg.max_iterations);
    let mut x = x0.clone();
    let mut terminated_by = Termination::MaxIterations;

    for n in 1..=cfg.max_iterations {
        match scheme_step(problem, scheme, &x) {
            Err(err) => {
                if steps.is_empty() {
                    return Err(err);
                }
                terminated_by = Termination::Failure(err.to_string());
                break;
            }
            Ok(step) => {
                let error = root.as_ref().map(|r| (&step.x_next - r).abs());
                steps.push(IterationStep {
                    n,
                    x: step.x_next.clone(),
                    y: step.y,
                    t: step.t,
                    error,
                });
                x = step.x_next;
            }
        }
        if let Some(tol) = &cfg.residual_tolerance {
            match problem.f(&x) {
                Ok(fx) => {
                    if fx.abs() <= *tol {
                        terminated_by = Termination::Tolerance;
                        break;
                    }
                }
                Err(err) => {
                    terminated_by = Termination::Failure(err.to_string());
                    break;
                }
            }
        }
    }

    Ok(IterationTrace {
        scheme_label: scheme.label.clone(),
        x0,
        steps,
        terminated_by,
    })
}

/// Estimated order and asymptotic constant from a trace.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    /// `ln(e_{n+1}/e_n) / ln(e_n/e_{n-1})` over the last three errors.
    pub estimated_order: Real,
    /// `e_{n+1} / e_n^m` at the estimated order.
    pub asymptotic_constant: Option<Real>,
}

/// Order estimate, or the reason none can be formed.
#[derive(Debug, Clone)]
pub enum CocReport {
    Estimated(ConvergenceReport),
    NotEstimable { reason: String },
}

impl CocReport {
    pub fn order_f64(&self) -> Option<f64> {
        match self {
            CocReport::Estimated(r) => Some(r.estimated_order.to_f64()),
            CocReport::NotEstimable { .. } => None,
        }
    }
}

impl fmt::Display for CocReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocReport::Estimated(r) => {
                write!(f, "order ~ {:.4}", r.estimated_order.to_f64())?;
                if let Some(zeta) = &r.asymptotic_constant {
                    write!(f, ", asymptotic constant ~ {:.6e}", zeta.to_f64())?;
                }
                Ok(())
            }
            CocReport::NotEstimable { reason } => write!(f, "order not estimable: {reason}"),
        }
    }
}

/// Computational order of convergence from the last three trace errors.
pub fn estimate_coc(trace: &IterationTrace) -> CocReport {
    let errors = trace.errors();
    if errors.len() < 3 {
        return CocReport::NotEstimable {
            reason: format!("needs 3 error values, trace has {}", errors.len()),
        };
    }
    let window = &errors[errors.len() - 3..];
    if window.iter().any(|e| e.is_zero()) {
        return CocReport::NotEstimable {
            reason: "a zero error (iterate hit the root exactly)".into(),
        };
    }
    let [e_prev, e_mid, e_last] = [window[0], window[1], window[2]];
    let denom = (e_mid / e_prev).ln();
    if denom.is_zero() {
        return CocReport::NotEstimable {
            reason: "stagnant consecutive errors".into(),
        };
    }
    let order = &(e_last / e_mid).ln() / &denom;
    let constant = e_last / &e_mid.pow(&order);
    CocReport::Estimated(ConvergenceReport {
        estimated_order: order,
        asymptotic_constant: Some(constant),
    })
}

/// Efficiency index `order^(1/evaluations)`.
pub fn efficiency_index(order: &Real, evaluations_per_iteration: u32) -> Real {
    debug_assert!(evaluations_per_iteration >= 1);
    let e = order.rational_like(&crate::numerics::Rational::from((
        1,
        i64::from(evaluations_per_iteration),
    )));
    order.pow(&e)
}
