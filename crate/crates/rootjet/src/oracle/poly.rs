//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! The coefficient ring for the error-series kernel: polynomials in the
//! Taylor coefficients `c2..c5` of the function at its root, the free
//! weight-jet derivatives `A''(1)`, `A'''(1)`, `B'''(1)`, the family
//! parameter `gamma`, and the predictor damping constant `a`. Monomials
//! are kept in graded-lexicographic order so equality and printing are
//! canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;

use crate::numerics::Rational;

/// Symbols the coefficient ring is built over, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Symbol {
    /// c2 = f''(α)/2!
    C2,
    /// c3 = f'''(α)/3!
    C3,
    /// c4 = f⁗(α)/4!
    C4,
    /// c5 = f⁽⁵⁾(α)/5!
    C5,
    /// Second derivative at 1 of the first weight (A or P).
    A2,
    /// Third derivative at 1 of the first weight.
    A3,
    /// Third derivative at 1 of the second weight (B or Q).
    B3,
    /// Family parameter γ.
    Gamma,
    /// Predictor damping constant a.
    Damping,
}

pub const SYMBOL_COUNT: usize = 9;

pub const ALL_SYMBOLS: [Symbol; SYMBOL_COUNT] = [
    Symbol::C2,
    Symbol::C3,
    Symbol::C4,
    Symbol::C5,
    Symbol::A2,
    Symbol::A3,
    Symbol::B3,
    Symbol::Gamma,
    Symbol::Damping,
];

impl Symbol {
    pub fn name(self) -> &'static str {
        match self {
            Symbol::C2 => "c2",
            Symbol::C3 => "c3",
            Symbol::C4 => "c4",
            Symbol::C5 => "c5",
            Symbol::A2 => "A''(1)",
            Symbol::A3 => "A'''(1)",
            Symbol::B3 => "B'''(1)",
            Symbol::Gamma => "gamma",
            Symbol::Damping => "a",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponent vector over [`ALL_SYMBOLS`], ordered by total degree first,
/// then lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    exponents: [u8; SYMBOL_COUNT],
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            exponents: [0; SYMBOL_COUNT],
        }
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut m = Monomial::unit();
        m.exponents[s.index()] = 1;
        m
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn exponent(&self, s: Symbol) -> u8 {
        self.exponents[s.index()]
    }

    fn product(&self, other: &Monomial) -> Monomial {
        let mut exponents = [0u8; SYMBOL_COUNT];
        for (out, (a, b)) in exponents
            .iter_mut()
            .zip(self.exponents.iter().zip(&other.exponents))
        {
            *out = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial { exponents }
    }

    /// Divides out `s^k`; None when the exponent is too small.
    fn without(&self, s: Symbol, k: u8) -> Option<Monomial> {
        let mut m = *self;
        let e = &mut m.exponents[s.index()];
        *e = e.checked_sub(k)?;
        Some(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial over [`Symbol`]s with [`Rational`] coefficients. Zero
/// coefficients are never stored, so `==` is structural equality of
/// canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoeffPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::constant(Rational::from(1))
    }

    pub fn constant(value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if value != 0 {
            terms.insert(Monomial::unit(), value);
        }
        CoeffPoly { terms }
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::symbol(s), Rational::from(1));
        CoeffPoly { terms }
    }

    /// Single term `coefficient * Π symbol^power`.
    pub fn term(coefficient: Rational, powers: &[(Symbol, u8)]) -> Self {
        if coefficient == 0 {
            return CoeffPoly::zero();
        }
        let mut m = Monomial::unit();
        for &(s, p) in powers {
            m.exponents[s.index()] = m.exponents[s.index()]
                .checked_add(p)
                .expect("monomial exponent overflow");
        }
        let mut terms = BTreeMap::new();
        terms.insert(m, coefficient);
        CoeffPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total_degree() == 0)
    }

    /// The constant term (zero when absent).
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(|| Rational::from(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, factor: &Rational) -> CoeffPoly {
        if *factor == 0 {
            return CoeffPoly::zero();
        }
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, Rational::from(c * factor)))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// Substitutes a rational value for one symbol.
    pub fn substitute(&self, s: Symbol, value: &Rational) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exponent(s);
            let reduced = m.without(s, k).unwrap();
            out.add_term(reduced, Rational::from(c * value.clone().pow(u32::from(k))));
        }
        out
    }

    /// Collects the polynomial as coefficients of powers of `s`:
    /// index k holds the polynomial multiplying `s^k`.
    pub fn collect_powers(&self, s: Symbol) -> Vec<CoeffPoly> {
        let max = self
            .terms
            .keys()
            .map(|m| m.exponent(s))
            .max()
            .unwrap_or(0);
        let mut out = vec![CoeffPoly::zero(); usize::from(max) + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(s);
            let reduced = m.without(s, k).unwrap();
            out[usize::from(k)].add_term(reduced, c.clone());
        }
        out
    }

    /// Numeric evaluation with rationals assigned to every symbol that
    /// occurs; panics in debug builds if an assignment is missing.
    pub fn evaluate(&self, assign: &dyn Fn(Symbol) -> Rational) -> Rational {
        let mut total = Rational::from(0);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for s in ALL_SYMBOLS {
                let e = m.exponent(s);
                if e > 0 {
                    term *= assign(s).pow(u32::from(e));
                }
            }
            total += term;
        }
        total
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, Rational::from(-c.clone()));
        }
        out
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.product(mb), Rational::from(ca * cb));
            }
        }
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, Rational::from(-c.clone())))
                .collect(),
        }
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest grade first reads like a leading-term-first equation
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < 0;
            let mag = c.clone().abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if mag != 1 || m.total_degree() == 0 {
                if *mag.denom() == 1 {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
                printed = true;
            }
            for s in ALL_SYMBOLS {
                let e = m.exponent(s);
                if e == 0 {
                    continue;
                }
                if printed {
                    write!(f, " ")?;
                }
                if e == 1 {
                    write!(f, "{}", s.name())?;
                } else {
                    write!(f, "{}^{}", s.name(), e)?;
                }
                printed = true;
            }
        }
        Ok(())
    }
}
