//! Arbitrary-precision reals and exact rationals.
//!
//! A [`PrecisionContext`] fixes the working precision in decimal digits;
//! every [`Real`] built under it carries at least that many significant
//! digits through arithmetic and the elementary functions. Internally the
//! context allocates a binary precision covering the requested digits plus
//! ten guard digits, so five-digit reported mantissas stay stable.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use rug::float::Constant;
use rug::ops::{CompleteRound, Pow};
use rug::Float;

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
pub type Rational = rug::Rational;

/// Smallest accepted working precision in decimal digits.
pub const MIN_DECIMAL_DIGITS: u32 = 16;

/// Decimal guard digits carried beyond the requested precision.
const GUARD_DIGITS: u32 = 10;

use std::f64::consts::LOG2_10;

/// Working precision shared by a family of [`Real`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    decimal_digits: u32,
    bits: u32,
}

impl PrecisionContext {
    /// Creates a context carrying `decimal_digits` significant decimal
    /// digits (plus internal guard digits). Rejects digits below
    /// [`MIN_DECIMAL_DIGITS`].
    pub fn new(decimal_digits: u32) -> Result<Self> {
        if decimal_digits < MIN_DECIMAL_DIGITS {
            return Err(Error::Config(format!(
                "working precision must be at least {MIN_DECIMAL_DIGITS} decimal digits, got {decimal_digits}"
            )));
        }
        let bits = (f64::from(decimal_digits + GUARD_DIGITS) * LOG2_10).ceil() as u32;
        Ok(Self {
            decimal_digits,
            bits,
        })
    }

    /// The default 200-digit context used by the benchmark tables.
    pub fn standard() -> Self {
        Self::new(200).expect("200 digits is a valid precision")
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    /// Binary working precision, including guard digits.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Parses signed decimal text, optionally in scientific notation,
    /// to within one unit in the last place of the working precision.
    pub fn parse(&self, text: &str) -> Result<Real> {
        let trimmed = text.trim();
        let parsed = Float::parse(trimmed).map_err(|e| Error::Parse {
            what: format!("real number '{trimmed}'"),
            detail: e.to_string(),
        })?;
        let value = parsed.complete(self.bits);
        if !value.is_finite() {
            return Err(Error::Parse {
                what: format!("real number '{trimmed}'"),
                detail: "value is not finite".into(),
            });
        }
        Ok(Real { inner: value })
    }

    /// Exact conversion of a rational, rounded once to working precision.
    pub fn from_rational(&self, value: &Rational) -> Real {
        Real {
            inner: Float::with_val(self.bits, value),
        }
    }

    pub fn from_u32(&self, value: u32) -> Real {
        Real {
            inner: Float::with_val(self.bits, value),
        }
    }

    pub fn from_f64(&self, value: f64) -> Real {
        Real {
            inner: Float::with_val(self.bits, value),
        }
    }

    pub fn zero(&self) -> Real {
        Real {
            inner: Float::with_val(self.bits, 0),
        }
    }

    pub fn one(&self) -> Real {
        Real {
            inner: Float::with_val(self.bits, 1),
        }
    }

    /// π to full working precision.
    pub fn pi(&self) -> Real {
        Real {
            inner: Float::with_val(self.bits, Constant::Pi),
        }
    }

    /// Parses at an explicit binary precision, for internal work that
    /// needs guard bits beyond a context.
    pub(crate) fn parse_at_bits(text: &str, bits: u32) -> Result<Real> {
        let parsed = Float::parse(text.trim()).map_err(|e| Error::Parse {
            what: format!("real number '{text}'"),
            detail: e.to_string(),
        })?;
        Ok(Real {
            inner: parsed.complete(bits),
        })
    }

    /// Rounds a value to an explicit binary precision.
    pub(crate) fn round_to_bits(x: &Real, bits: u32) -> Real {
        Real {
            inner: Float::with_val(bits, &x.inner),
        }
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::standard()
    }
}

/// Arbitrary-precision real number. Immutable after construction; all
/// operations return fresh values at the precision of `self`.
#[derive(Debug, Clone, PartialEq)]
pub struct Real {
    inner: Float,
}

impl Real {
    pub fn prec_bits(&self) -> u32 {
        self.inner.prec()
    }

    /// A rational constant materialized at the same precision as `self`.
    pub fn rational_like(&self, value: &Rational) -> Real {
        Real {
            inner: Float::with_val(self.inner.prec(), value),
        }
    }

    /// π at the same precision as `self`.
    pub fn pi_like(&self) -> Real {
        Real {
            inner: Float::with_val(self.inner.prec(), Constant::Pi),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    pub fn abs(&self) -> Real {
        Real {
            inner: self.inner.clone().abs(),
        }
    }

    pub fn exp(&self) -> Real {
        Real {
            inner: self.inner.clone().exp(),
        }
    }

    pub fn ln(&self) -> Real {
        Real {
            inner: self.inner.clone().ln(),
        }
    }

    pub fn sin(&self) -> Real {
        Real {
            inner: self.inner.clone().sin(),
        }
    }

    pub fn cos(&self) -> Real {
        Real {
            inner: self.inner.clone().cos(),
        }
    }

    pub fn sqrt(&self) -> Real {
        Real {
            inner: self.inner.clone().sqrt(),
        }
    }

    /// Integer power, exact exponent.
    pub fn powi(&self, exponent: i32) -> Real {
        Real {
            inner: self.inner.clone().pow(exponent),
        }
    }

    /// General power `self^exponent`.
    pub fn pow(&self, exponent: &Real) -> Real {
        Real {
            inner: self.inner.clone().pow(&exponent.inner),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.inner.to_f64()
    }

    /// One unit in the last binary place of `self`; zero for a zero value.
    pub fn ulp(&self) -> Real {
        match self.inner.get_exp() {
            Some(exp) => {
                let prec = self.inner.prec() as i32;
                let mut one = Float::with_val(self.inner.prec(), 1);
                one <<= exp - prec;
                Real { inner: one }
            }
            None => Real {
                inner: Float::with_val(self.inner.prec(), 0),
            },
        }
    }

    /// Decimal rendering with `digits` significant digits, round to nearest.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        if self.inner.is_zero() {
            return "0".to_string();
        }
        let (neg, mantissa, exp) = self.inner.to_sign_string_exp(10, Some(digits as usize));
        let exp = exp.unwrap_or(0);
        let sign = if neg { "-" } else { "" };
        format!("{sign}0.{mantissa}e{exp}")
    }
}

/// Renders a magnitude as a five-digit mantissa in `0.ddddde-k` style,
/// the layout used by the benchmark tables. Zero prints as `0.00000e0`.
pub fn format_error(x: &Real) -> String {
    let magnitude = x.abs();
    if magnitude.is_zero() {
        return "0.00000e0".to_string();
    }
    let (_, mantissa, exp) = magnitude.inner.to_sign_string_exp(10, Some(5));
    format!("0.{}e{}", mantissa, exp.expect("finite nonzero value"))
}

/// Parses a rational from `p/q` form or from plain/scientific decimal text
/// (`-3/4`, `2.87`, `5e-3`); the conversion is exact.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let err = |detail: &str| Error::Parse {
        what: format!("rational '{trimmed}'"),
        detail: detail.into(),
    };
    if trimmed.is_empty() {
        return Err(err("empty text"));
    }
    if trimmed.contains('/') {
        let value = Rational::from_str(trimmed).map_err(|e| err(&e.to_string()))?;
        return Ok(value);
    }
    // decimal, optionally with exponent: d[.d][e±k]
    let (body, exp10) = match trimmed.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = trimmed[pos + 1..]
                .parse()
                .map_err(|_| err("bad exponent"))?;
            (&trimmed[..pos], exp)
        }
        None => (trimmed, 0),
    };
    let (int_part, frac_part) = match body.find('.') {
        Some(pos) => (&body[..pos], &body[pos + 1..]),
        None => (body, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty()
        || digits == "-"
        || digits == "+"
        || !digits
            .chars()
            .enumerate()
            .all(|(i, c)| c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+')))
        || frac_part.contains(['-', '+'])
    {
        return Err(err("not a decimal number"));
    }
    let numerator = rug::Integer::from_str(&digits).map_err(|e| err(&e.to_string()))?;
    let mut value = Rational::from(numerator);
    let shift = exp10 - frac_part.len() as i32;
    let ten = Rational::from(10);
    match shift.cmp(&0) {
        Ordering::Greater => value *= ten.pow(shift as u32),
        Ordering::Less => value /= ten.pow(shift.unsigned_abs()),
        Ordering::Equal => {}
    }
    Ok(value)
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // default display carries enough digits for the precision in use
        let digits = (f64::from(self.inner.prec()) / LOG2_10).floor() as u32;
        write!(f, "{}", self.to_decimal_string(digits.max(1)))
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        self.inner.partial_cmp(&other.inner)
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real {
                    inner: (&self.inner)
                        .$method(&rhs.inner)
                        .complete(self.inner.prec()),
                }
            }
        }
        impl $trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            inner: Float::with_val(self.inner.prec(), -&self.inner),
        }
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

/// Guards against silently propagating NaN/∞ out of an evaluation.
pub(crate) fn ensure_finite(value: Real, at: &Real, what: &str) -> Result<Real> {
    if value.is_finite() {
        Ok(value)
    } else {
        let kind = if value.inner.is_nan() {
            "NaN"
        } else {
            "an infinity"
        };
        Err(Error::Evaluation {
            x: at.to_decimal_string(20),
            detail: format!("{what} produced {kind}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_bounds() {
        assert!(PrecisionContext::new(200).is_ok());
        assert!(PrecisionContext::new(16).is_ok());
        let err = PrecisionContext::new(15).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn parse_table_root_prefix() {
        let ctx = PrecisionContext::standard();
        let x = ctx.parse("4.9651142317442763036").unwrap();
        let back = x.to_decimal_string(20);
        assert_eq!(back, "0.49651142317442763036e1");
    }

    #[test]
    fn parse_zero_and_scientific() {
        let ctx = PrecisionContext::new(50).unwrap();
        assert!(ctx.parse("0").unwrap().is_zero());
        let v = ctx.parse("0.21464e-4").unwrap();
        let w = ctx.parse("2.1464e-5").unwrap();
        assert_eq!(v, w);
        assert!(ctx.parse("4.2.3").is_err());
        assert!(ctx.parse("pancake").is_err());
    }

    #[test]
    fn format_error_table_style() {
        let ctx = PrecisionContext::standard();
        assert_eq!(format_error(&ctx.parse("2.1464e-5").unwrap()), "0.21464e-4");
        assert_eq!(format_error(&ctx.zero()), "0.00000e0");
        assert_eq!(
            format_error(&ctx.parse("4.2743e-10").unwrap()),
            "0.42743e-9"
        );
        // magnitude only, and exponents >= 0 print without a sign
        assert_eq!(format_error(&ctx.parse("-0.5").unwrap()), "0.50000e0");
        assert_eq!(format_error(&ctx.parse("143.32").unwrap()), "0.14332e3");
        // mantissa carry renormalizes the exponent
        assert_eq!(
            format_error(&ctx.parse("9.999996e-5").unwrap()),
            "0.10000e-3"
        );
    }

    #[test]
    fn elementary_functions_match_f64() {
        let ctx = PrecisionContext::standard();
        for (x, reference) in [
            (0.5_f64, 0.5_f64.exp()),
            (1.25, 1.25_f64.exp()),
            (-3.0, (-3.0_f64).exp()),
        ] {
            let got = ctx.from_f64(x).exp().to_f64();
            assert!(
                ((got - reference) / reference).abs() < 1e-15,
                "exp({x}): {got} vs {reference}"
            );
        }
        let s = ctx.from_f64(0.4).sin().to_f64();
        assert!((s - 0.4_f64.sin()).abs() < 1e-15);
        let c = ctx.from_f64(0.4).cos().to_f64();
        assert!((c - 0.4_f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn pi_to_working_precision() {
        let ctx = PrecisionContext::standard();
        let pi = ctx.pi();
        let digits = pi.to_decimal_string(30);
        assert_eq!(digits, "0.314159265358979323846264338328e1");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("2/3").unwrap(), Rational::from((2, 3)));
        assert_eq!(parse_rational("-1/2").unwrap(), Rational::from((-1, 2)));
        assert_eq!(parse_rational("2.87").unwrap(), Rational::from((287, 100)));
        assert_eq!(parse_rational("5e-3").unwrap(), Rational::from((1, 200)));
        assert_eq!(parse_rational("-0.25").unwrap(), Rational::from((-1, 4)));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x/2").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn arithmetic_keeps_precision() {
        let ctx = PrecisionContext::new(100).unwrap();
        let a = ctx.parse("1").unwrap();
        let b = ctx.parse("3").unwrap();
        let third = &a / &b;
        assert_eq!(third.prec_bits(), ctx.bits());
        // 1/3 carries at least 100 correct digits
        let s = third.to_decimal_string(100);
        assert!(s.starts_with("0.33333333333333333333"));
    }

    #[test]
    fn ulp_scale() {
        let ctx = PrecisionContext::new(50).unwrap();
        let x = ctx.parse("1.0").unwrap();
        let u = x.ulp();
        assert!(u.to_f64() > 0.0);
        assert!(u.to_f64() < 1e-55_f64.max(f64::MIN_POSITIVE));
    }

    mod roundtrip {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // decimal text of up to the working precision survives a
            // format/parse cycle to within one unit in the last digit
            #[test]
            fn format_then_parse_is_within_one_ulp(
                negative: bool,
                digits in proptest::collection::vec(0u8..10, 1..50),
                exponent in -25i32..25,
            ) {
                let ctx = PrecisionContext::new(50).unwrap();
                let body: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
                let text = format!(
                    "{}0.{}e{}",
                    if negative { "-" } else { "" },
                    body,
                    exponent
                );
                let x = ctx.parse(&text).unwrap();
                prop_assume!(!x.is_zero());
                let shown = x.to_decimal_string(ctx.decimal_digits());
                let y = ctx.parse(&shown).unwrap();
                // one unit in the 50th significant decimal digit
                let tolerance = &x.abs() * &ctx.parse("1e-49").unwrap();
                prop_assert!((&y - &x).abs() <= tolerance, "{text} -> {shown}");
            }
        }
    }
}
