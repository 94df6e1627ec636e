//! Symbolic convergence-order oracle.
//!
//! Re-derives the error equation of each iteration scheme as a truncated
//! power series in the error symbol with exact rational-polynomial
//! coefficients, instead of trusting stated convergence orders.

pub mod derive;
pub mod poly;
pub mod series;

pub use derive::{
    derive_error_equation, intermediate_series, verify_theorem, DampingAnalysis, ErrorEquation,
    JetSymbols, OracleScheme, Theorem, TheoremReport,
};
pub use poly::{CoeffPoly, Monomial, Symbol, ALL_SYMBOLS};
pub use series::ESeries;
