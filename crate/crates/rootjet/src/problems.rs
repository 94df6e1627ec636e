//! Test problems: a scalar function, its derivative, and reference data.
//!
//! The built-in catalog `f1..f4` carries the four benchmark functions
//! with their roots to twenty digits and the starting points the error
//! tables use. Problems defined from expression text get their
//! derivative by symbolic differentiation; closure-backed problems
//! supply their own.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::numerics::{ensure_finite, PrecisionContext, Real};

/// Extra Newton polishing precision (bits) when refining a reference root.
const REFINE_GUARD_BITS: u32 = 32;

/// Boxed evaluation closure for problems outside the expression grammar.
pub type EvalFn = Arc<dyn Fn(&Real) -> Result<Real> + Send + Sync>;

#[derive(Clone)]
enum Evaluator {
    Expression(Expr),
    Closure(EvalFn),
}

impl Evaluator {
    fn eval(&self, x: &Real) -> Result<Real> {
        match self {
            Evaluator::Expression(e) => e.eval(x),
            Evaluator::Closure(f) => {
                let v = f(x)?;
                ensure_finite(v, x, "function evaluation")
            }
        }
    }
}

impl fmt::Debug for Evaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluator::Expression(e) => write!(f, "Expression({e})"),
            Evaluator::Closure(_) => write!(f, "Closure(..)"),
        }
    }
}

/// A root-finding problem: `f`, its analytic derivative, an optional
/// reference root, and an optional suggested starting point.
#[derive(Debug, Clone)]
pub struct Problem {
    label: String,
    f: Evaluator,
    fprime: Evaluator,
    root_text: Option<String>,
    x0_text: Option<String>,
}

impl Problem {
    /// Builds a problem from expression text; the derivative is obtained
    /// symbolically unless `fprime` text is supplied.
    pub fn from_expressions(
        label: &str,
        f: &str,
        fprime: Option<&str>,
        root: Option<&str>,
        x0: Option<&str>,
    ) -> Result<Problem> {
        let f_expr = Expr::parse(f)?;
        let fprime_expr = match fprime {
            Some(text) => Expr::parse(text)?,
            None => f_expr.differentiate(),
        };
        Ok(Problem {
            label: label.to_string(),
            f: Evaluator::Expression(f_expr),
            fprime: Evaluator::Expression(fprime_expr),
            root_text: root.map(str::to_string),
            x0_text: x0.map(str::to_string),
        })
    }

    /// Builds a problem from closures, for functions outside the
    /// expression grammar.
    pub fn from_closures(
        label: &str,
        f: impl Fn(&Real) -> Result<Real> + Send + Sync + 'static,
        fprime: impl Fn(&Real) -> Result<Real> + Send + Sync + 'static,
        root: Option<&str>,
        x0: Option<&str>,
    ) -> Problem {
        Problem {
            label: label.to_string(),
            f: Evaluator::Closure(Arc::new(f)),
            fprime: Evaluator::Closure(Arc::new(fprime)),
            root_text: root.map(str::to_string),
            x0_text: x0.map(str::to_string),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The defining expression, when the problem was built from one.
    pub fn expression(&self) -> Option<&Expr> {
        match &self.f {
            Evaluator::Expression(e) => Some(e),
            Evaluator::Closure(_) => None,
        }
    }

    pub fn f(&self, x: &Real) -> Result<Real> {
        self.f.eval(x)
    }

    pub fn fprime(&self, x: &Real) -> Result<Real> {
        self.fprime.eval(x)
    }

    /// Evaluates `f` and `f'` together.
    pub fn evaluate(&self, x: &Real) -> Result<(Real, Real)> {
        Ok((self.f.eval(x)?, self.fprime.eval(x)?))
    }

    /// Suggested starting point, when the catalog records one.
    pub fn suggested_x0(&self, ctx: &PrecisionContext) -> Option<Real> {
        self.x0_text.as_ref().and_then(|t| ctx.parse(t).ok())
    }

    pub fn has_reference_root(&self) -> bool {
        self.root_text.is_some()
    }

    /// Reference root refined to full working precision.
    ///
    /// The stored decimal (typically twenty digits) seeds a Newton
    /// polish at elevated precision, so error columns are not limited by
    /// the recorded digits.
    pub fn reference_root(&self, ctx: &PrecisionContext) -> Result<Option<Real>> {
        let Some(text) = &self.root_text else {
            return Ok(None);
        };
        let work_bits = ctx.bits() + REFINE_GUARD_BITS;
        let seed = PrecisionContext::parse_at_bits(text, work_bits)?;
        let mut x = seed;
        // each step doubles the correct digits; 20 -> beyond 230 digits
        // needs five doublings, a few more cost nothing
        for _ in 0..8 {
            let fx = self.f.eval(&x)?;
            if fx.is_zero() {
                break;
            }
            let fpx = self.fprime.eval(&x)?;
            if fpx.is_zero() {
                return Err(Error::DerivativeSingular {
                    x: x.to_decimal_string(20),
                });
            }
            x = &x - &(&fx / &fpx);
        }
        Ok(Some(PrecisionContext::round_to_bits(&x, ctx.bits())))
    }

    /// Higher derivatives for expression-backed problems.
    pub fn derivative_expression(&self, order: u32) -> Option<Expr> {
        let Evaluator::Expression(f) = &self.f else {
            return None;
        };
        let mut d = f.clone();
        for _ in 0..order {
            d = d.differentiate();
        }
        Some(d)
    }
}

/// Identifiers of the built-in problems.
pub const BUILTIN_IDS: [&str; 4] = ["f1", "f2", "f3", "f4"];

/// Returns a catalog problem by id (`f1`..`f4`).
pub fn builtin_problem(id: &str) -> Result<Problem> {
    let (f, root, x0) = match id {
        "f1" => ("exp(-x) - 1 + x/5", "4.9651142317442763036", "5"),
        "f2" => (
            "(x^3 + 2.87*x^2 - 10.28)/4.62 - x",
            "2.0021187789538272889",
            "2.5",
        ),
        "f3" => (
            "(x + cos(x)*sin(x))/pi - 1/4",
            "0.4158555967898679887",
            "0.4",
        ),
        "f4" => ("x*exp(-x) - 0.1", "0.1118325591589629648", "0.3"),
        other => return Err(Error::UnknownProblem(other.to_string())),
    };
    Problem::from_expressions(id, f, None, Some(root), Some(x0))
}

/// Loads problems from a definition file: `key = value` lines with keys
/// `label`, `f`, `fprime` (optional), `root` (optional), `x0` (optional);
/// blank lines separate records and `#` starts a comment.
pub fn load_problem_file(path: &Path) -> Result<Vec<Problem>> {
    let text = std::fs::read_to_string(path)?;
    let path_str = path.display().to_string();
    let mut problems = Vec::new();
    let mut record: Vec<(usize, String, String)> = Vec::new();

    let mut flush = |record: &mut Vec<(usize, String, String)>| -> Result<()> {
        if record.is_empty() {
            return Ok(());
        }
        let first_line = record[0].0;
        let get = |key: &str| {
            record
                .iter()
                .find(|(_, k, _)| k == key)
                .map(|(_, _, v)| v.clone())
        };
        for (line, key, _) in record.iter() {
            if !matches!(key.as_str(), "label" | "f" | "fprime" | "root" | "x0") {
                return Err(Error::ProblemFile {
                    path: path_str.clone(),
                    line: *line,
                    detail: format!("unknown key '{key}'"),
                });
            }
        }
        let label = get("label").ok_or_else(|| Error::ProblemFile {
            path: path_str.clone(),
            line: first_line,
            detail: "missing 'label'".into(),
        })?;
        let f = get("f").ok_or_else(|| Error::ProblemFile {
            path: path_str.clone(),
            line: first_line,
            detail: "missing 'f'".into(),
        })?;
        let problem = Problem::from_expressions(
            &label,
            &f,
            get("fprime").as_deref(),
            get("root").as_deref(),
            get("x0").as_deref(),
        )?;
        problems.push(problem);
        record.clear();
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            flush(&mut record)?;
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::ProblemFile {
                path: path_str.clone(),
                line: line_no,
                detail: "expected 'key = value'".into(),
            });
        };
        record.push((line_no, key.trim().to_string(), value.trim().to_string()));
    }
    flush(&mut record)?;
    if problems.is_empty() {
        return Err(Error::ProblemFile {
            path: path_str,
            line: 0,
            detail: "no problem records found".into(),
        });
    }
    Ok(problems)
}
