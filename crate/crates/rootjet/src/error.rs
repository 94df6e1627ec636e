//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by parsing, evaluation, iteration, and the series kernel.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// Invalid configuration, e.g. a working precision below the supported minimum.
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed numeric or expression text.
    #[error("parse error in {what}: {detail}")]
    Parse { what: String, detail: String },

    /// Unknown problem identifier.
    #[error("unknown problem '{0}' (builtins: f1, f2, f3, f4)")]
    UnknownProblem(String),

    /// Unknown method name.
    #[error("unknown method '{0}'")]
    UnknownMethod(String),

    /// A method family was requested without its required parameter.
    #[error("method '{0}' requires --gamma")]
    MissingGamma(String),

    /// A function value or intermediate became non-finite.
    #[error("evaluation failed at x = {x}: {detail}")]
    Evaluation { x: String, detail: String },

    /// The derivative vanished at the current iterate.
    #[error("derivative is zero at x = {x}; iteration cannot proceed")]
    DerivativeSingular { x: String },

    /// A weight function was evaluated at a pole of its formula.
    #[error("weight {weight} has a pole at t = {t}")]
    WeightDomain { weight: String, t: String },

    /// Series operands carry different truncation orders.
    #[error("series truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    /// Reciprocal of a series whose constant coefficient is not one.
    #[error("series reciprocal requires a unit constant coefficient, found {0}")]
    NonUnitConstant(String),

    /// Composition argument must vanish at order zero.
    #[error("series substitution requires a zero constant term, found {0}")]
    NonzeroConstantTerm(String),

    /// Every error-series coefficient vanished up to the truncation order.
    #[error("no nonvanishing error coefficient up to e^{truncation}; raise the truncation order")]
    InconclusiveOrder { truncation: usize },

    /// Truncation orders beyond the supported coefficient basis.
    #[error("truncation order {requested} exceeds the supported basis (function coefficients up to c5 allow orders <= 5)")]
    UnsupportedTruncation { requested: usize },

    /// A benchmark was requested for a problem without a reference root.
    #[error("problem '{0}' has no reference root; error columns cannot be formed")]
    MissingRoot(String),

    /// Problem definition file errors.
    #[error("problem file {path}:{line}: {detail}")]
    ProblemFile {
        path: String,
        line: usize,
        detail: String,
    },

    /// I/O failure, rendered to text so the error stays cloneable.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(value: std::io::Error) -> Self {
        Error::Io(value.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
