//! Benchmark harness: error tables over the problem catalog, with
//! comparison against the stated reference tables.

use crate::error::{Error, Result};
use crate::numerics::{format_error, PrecisionContext, Real};
use crate::problems::{builtin_problem, Problem};
use crate::solvers::{solve, SolverConfig};
use crate::stated::{self, StatedTable};
use crate::weights::{catalog, SchemeSpec};

/// How a computed cell compares to the stated one.
///
/// The match policy is an exact exponent plus the first three mantissa
/// digits; cells meeting the policy but differing in the fourth or fifth
/// digit are flagged rather than failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchLevel {
    /// All five mantissa digits and the exponent agree.
    Exact,
    /// Exponent and first three mantissa digits agree.
    Acceptable,
    /// Policy violated.
    Mismatch,
}

/// One table cell: a formatted error value or a recorded failure.
#[derive(Debug, Clone)]
pub enum BenchCell {
    Value {
        formatted: String,
        stated: Option<String>,
        level: Option<MatchLevel>,
    },
    Failure { reason: String },
}

impl BenchCell {
    /// Rendered cell text; failures render as `FAIL(reason)`.
    pub fn text(&self) -> String {
        match self {
            BenchCell::Value { formatted, .. } => formatted.clone(),
            BenchCell::Failure { reason } => format!("FAIL({reason})"),
        }
    }

    /// True when the cell deviates from its stated value (or failed).
    pub fn flagged(&self) -> bool {
        match self {
            BenchCell::Value { level, .. } => {
                matches!(level, Some(MatchLevel::Acceptable | MatchLevel::Mismatch))
            }
            BenchCell::Failure { .. } => true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub method: String,
    pub cells: Vec<BenchCell>,
}

/// A completed benchmark: one row per method, one column per iteration.
#[derive(Debug, Clone)]
pub struct BenchmarkRun {
    pub problem_label: String,
    pub x0: String,
    pub iterations: usize,
    pub digits: u32,
    pub rows: Vec<BenchRow>,
    /// Set when reproducing a stated table; appended to emitted output.
    pub omitted_note: Option<String>,
}

impl BenchmarkRun {
    /// True when any cell deviates from its stated value or failed.
    pub fn any_flagged(&self) -> bool {
        self.rows
            .iter()
            .any(|row| row.cells.iter().any(BenchCell::flagged))
    }
}

/// Compares `0.ddddde±k` strings under the match policy.
pub fn compare_cells(computed: &str, stated: &str) -> MatchLevel {
    if computed == stated {
        return MatchLevel::Exact;
    }
    let split = |s: &str| -> Option<(String, String)> {
        let rest = s.strip_prefix("0.")?;
        let (mantissa, exp) = rest.split_once('e')?;
        Some((mantissa.to_string(), exp.to_string()))
    };
    match (split(computed), split(stated)) {
        (Some((m1, e1)), Some((m2, e2))) => {
            if e1 == e2 && m1.len() >= 3 && m1[..3] == m2[..3.min(m2.len())] {
                MatchLevel::Acceptable
            } else {
                MatchLevel::Mismatch
            }
        }
        _ => MatchLevel::Mismatch,
    }
}

/// Runs `iterations` steps of every method on one problem and formats
/// the error columns. `stated_rows`, when given, attaches the reference
/// cell and match level to each value.
pub fn run_benchmark(
    problem: &Problem,
    methods: &[SchemeSpec],
    x0: Option<&Real>,
    iterations: usize,
    ctx: &PrecisionContext,
    stated_rows: Option<&StatedTable>,
) -> Result<BenchmarkRun> {
    if !problem.has_reference_root() {
        return Err(Error::MissingRoot(problem.label().to_string()));
    }
    let x0 = match x0 {
        Some(x) => x.clone(),
        None => problem.suggested_x0(ctx).ok_or_else(|| {
            Error::Config(format!(
                "problem '{}' has no suggested starting point; pass x0",
                problem.label()
            ))
        })?,
    };
    let cfg = SolverConfig::with_iterations(*ctx, iterations);

    let mut rows = Vec::with_capacity(methods.len());
    for (row_index, scheme) in methods.iter().enumerate() {
        let stated_cells = stated_rows.and_then(|t| {
            t.rows
                .get(row_index)
                .map(|(_, cells)| cells)
        });
        let mut cells = Vec::with_capacity(iterations);
        match solve(problem, scheme, &x0, &cfg) {
            Ok(trace) => {
                for n in 0..iterations {
                    match trace.steps.get(n) {
                        Some(step) => {
                            let formatted =
                                format_error(step.error.as_ref().expect("root is known"));
                            let stated = stated_cells.map(|c| c[n].to_string());
                            let level = stated.as_deref().map(|s| compare_cells(&formatted, s));
                            cells.push(BenchCell::Value {
                                formatted,
                                stated,
                                level,
                            });
                        }
                        None => cells.push(BenchCell::Failure {
                            reason: trace.terminated_by.to_string(),
                        }),
                    }
                }
            }
            Err(err) => {
                for _ in 0..iterations {
                    cells.push(BenchCell::Failure {
                        reason: err.to_string(),
                    });
                }
            }
        }
        rows.push(BenchRow {
            method: scheme.label.clone(),
            cells,
        });
    }

    Ok(BenchmarkRun {
        problem_label: problem.label().to_string(),
        x0: x0.to_decimal_string(20),
        iterations,
        digits: ctx.decimal_digits(),
        rows,
        omitted_note: stated_rows.map(|_| stated::OMITTED_ROWS_NOTE.to_string()),
    })
}

/// Reproduces a stated table (2 through 5) at the given precision.
pub fn run_stated_table(number: u8, ctx: &PrecisionContext) -> Result<BenchmarkRun> {
    let table = stated::stated_table(number).ok_or_else(|| {
        Error::Config(format!("no stated table {number}; tables run 2 through 5"))
    })?;
    let problem = builtin_problem(table.problem_id)?;
    let methods: Vec<SchemeSpec> = table
        .rows
        .iter()
        .map(|(name, _)| catalog(name, None))
        .collect::<Result<_>>()?;
    let x0 = ctx.parse(table.x0)?;
    run_benchmark(&problem, &methods, Some(&x0), 3, ctx, Some(table))
}

/// Output formats for [`emit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    Markdown,
    Csv,
}

/// Renders a run. Markdown mirrors the published layout (method column
/// plus one column per iteration); CSV uses a `method,e1,e2,...` header.
/// Output is deterministic for identical runs.
pub fn emit(run: &BenchmarkRun, format: EmitFormat) -> String {
    match format {
        EmitFormat::Markdown => emit_markdown(run),
        EmitFormat::Csv => emit_csv(run),
    }
}

fn emit_markdown(run: &BenchmarkRun) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "errors |x_n - root| for {} with x0 = {}, {} digits, {} iterations\n\n",
        run.problem_label, run.x0, run.digits, run.iterations
    ));
    out.push_str("| method |");
    for n in 1..=run.iterations {
        out.push_str(&format!(" e{n} |"));
    }
    out.push('\n');
    out.push_str("|---|");
    for _ in 0..run.iterations {
        out.push_str("---|");
    }
    out.push('\n');
    for row in &run.rows {
        out.push_str(&format!("| {} |", row.method));
        for cell in &row.cells {
            out.push_str(&format!(" {} |", cell.text()));
        }
        out.push('\n');
    }
    let flagged: Vec<String> = run
        .rows
        .iter()
        .flat_map(|row| {
            row.cells.iter().enumerate().filter_map(|(i, cell)| {
                if let BenchCell::Value {
                    formatted,
                    stated: Some(stated),
                    level,
                } = cell
                {
                    if cell.flagged() {
                        let note = match level {
                            Some(MatchLevel::Acceptable) => "differs past the third mantissa digit",
                            _ => "violates the match policy",
                        };
                        return Some(format!(
                            "flagged: {} e{} = {} (stated {}, {})",
                            row.method,
                            i + 1,
                            formatted,
                            stated,
                            note
                        ));
                    }
                }
                None
            })
        })
        .collect();
    if !flagged.is_empty() {
        out.push('\n');
        for line in flagged {
            out.push_str(&line);
            out.push('\n');
        }
    }
    if let Some(note) = &run.omitted_note {
        out.push('\n');
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

fn emit_csv(run: &BenchmarkRun) -> String {
    let mut out = String::new();
    out.push_str("method");
    for n in 1..=run.iterations {
        out.push_str(&format!(",e{n}"));
    }
    out.push('\n');
    for row in &run.rows {
        out.push_str(&csv_field(&row.method));
        for cell in &row.cells {
            out.push(',');
            out.push_str(&csv_field(&cell.text()));
        }
        out.push('\n');
    }
    out
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}
