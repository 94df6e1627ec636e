//! Truncated power series in the error symbol `e`.
//!
//! An [`ESeries`] holds coefficients `0..=N` as [`CoeffPoly`] values and is
//! exact modulo `e^(N+1)`; no operation ever consults coefficients beyond
//! the truncation order.

use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::oracle::poly::CoeffPoly;

#[derive(Debug, Clone, PartialEq)]
pub struct ESeries {
    coeffs: Vec<CoeffPoly>,
}

impl ESeries {
    /// The zero series truncated at `e^truncation`.
    pub fn zero(truncation: usize) -> Self {
        ESeries {
            coeffs: vec![CoeffPoly::zero(); truncation + 1],
        }
    }

    /// Constant one.
    pub fn one(truncation: usize) -> Self {
        let mut s = ESeries::zero(truncation);
        s.coeffs[0] = CoeffPoly::one();
        s
    }

    /// The series `e` itself.
    pub fn error_symbol(truncation: usize) -> Self {
        let mut s = ESeries::zero(truncation);
        if truncation >= 1 {
            s.coeffs[1] = CoeffPoly::one();
        }
        s
    }

    /// Builds a series from coefficient polynomials for `e^0, e^1, ...`;
    /// missing entries are zero.
    pub fn from_coeffs(truncation: usize, coeffs: Vec<CoeffPoly>) -> Self {
        assert!(
            coeffs.len() <= truncation + 1,
            "more coefficients than the truncation order admits"
        );
        let mut all = coeffs;
        all.resize(truncation + 1, CoeffPoly::zero());
        ESeries { coeffs: all }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> &CoeffPoly {
        &self.coeffs[power]
    }

    /// First power with a nonzero coefficient, scanning from `e^from`.
    pub fn first_nonzero(&self, from: usize) -> Option<usize> {
        (from..self.coeffs.len()).find(|&k| !self.coeffs[k].is_zero())
    }

    fn check_same_truncation(&self, other: &ESeries) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ESeries) -> Result<ESeries> {
        self.check_same_truncation(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ESeries { coeffs })
    }

    pub fn sub(&self, other: &ESeries) -> Result<ESeries> {
        self.check_same_truncation(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ESeries { coeffs })
    }

    pub fn neg(&self) -> ESeries {
        ESeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> ESeries {
        ESeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    pub fn scale_poly(&self, factor: &CoeffPoly) -> ESeries {
        ESeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Exact Cauchy product truncated at the shared order.
    pub fn mul(&self, other: &ESeries) -> Result<ESeries> {
        self.check_same_truncation(other)?;
        let n = self.truncation();
        let mut coeffs = vec![CoeffPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(ESeries { coeffs })
    }

    /// Multiplicative inverse of a series with unit constant coefficient:
    /// `self.mul(&self.reciprocal()?) == 1` modulo `e^(N+1)`.
    pub fn reciprocal(&self) -> Result<ESeries> {
        if self.coeffs[0] != CoeffPoly::one() {
            return Err(Error::NonUnitConstant(self.coeffs[0].to_string()));
        }
        let n = self.truncation();
        let mut inv = vec![CoeffPoly::zero(); n + 1];
        inv[0] = CoeffPoly::one();
        for k in 1..=n {
            // b_k = -sum_{j=1..=k} a_j b_{k-j}
            let mut acc = CoeffPoly::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[j] * &inv[k - j]);
            }
            inv[k] = -&acc;
        }
        Ok(ESeries { coeffs: inv })
    }

    /// Substitutes `delta` (a series with zero constant term) into the
    /// polynomial `sum_k poly_coeffs[k] * delta^k`, truncating throughout.
    pub fn compose_into_polynomial(poly_coeffs: &[CoeffPoly], delta: &ESeries) -> Result<ESeries> {
        if !delta.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(delta.coeffs[0].to_string()));
        }
        let n = delta.truncation();
        // Horner from the top coefficient down
        let mut acc = ESeries::zero(n);
        for poly in poly_coeffs.iter().rev() {
            acc = acc.mul(delta)?;
            acc.coeffs[0] = &acc.coeffs[0] + poly;
        }
        Ok(acc)
    }

    /// Expands a weight function through its jet at 1:
    /// `W(1) + W'(1) tau + W''(1)/2 tau^2 + W'''(1)/6 tau^3`,
    /// with `tau = t - 1` a series with zero constant term.
    pub fn expand_weight(jet: &[CoeffPoly; 4], tau: &ESeries) -> Result<ESeries> {
        let poly = [
            jet[0].clone(),
            jet[1].clone(),
            jet[2].scale(&Rational::from((1, 2))),
            jet[3].scale(&Rational::from((1, 6))),
        ];
        ESeries::compose_into_polynomial(&poly, tau)
    }
}

impl fmt::Display for ESeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) e")?,
                _ => write!(f, "({c}) e^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(e^{})", self.truncation() + 1)
    }
}
