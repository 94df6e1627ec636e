//! Scalar expression grammar for problem definitions.
//!
//! Supports `x`, `pi`, rational decimal literals, `+ - * / ^`, and the
//! functions `exp`, `ln`, `sin`, `cos`. Expressions evaluate in
//! arbitrary precision and differentiate symbolically, so problems
//! defined this way come with analytic derivatives of any order.

use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{ensure_finite, parse_rational, Rational, Real};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rational),
    X,
    Pi,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Exp(Box<Expr>),
    Ln(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let err = |detail: String| Error::Parse {
        what: format!("expression '{text}'"),
        detail,
    };
    let bytes: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == '.') {
                    i += 1;
                }
                // exponent part: e or E followed by optional sign and digits
                if i < bytes.len()
                    && (bytes[i] == 'e' || bytes[i] == 'E')
                    && i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_digit()
                        || ((bytes[i + 1] == '+' || bytes[i + 1] == '-')
                            && i + 2 < bytes.len()
                            && bytes[i + 2].is_ascii_digit()))
                {
                    i += 2;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let literal: String = bytes[start..i].iter().collect();
                tokens.push(Token::Num(parse_rational(&literal)?));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                tokens.push(Token::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(err(format!("unexpected character '{other}'"))),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    source: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, detail: String) -> Error {
        Error::Parse {
            what: format!("expression '{}'", self.source),
            detail,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, token: Token) -> Result<()> {
        match self.advance() {
            Some(t) if t == token => Ok(()),
            other => Err(self.error(format!("expected {token:?}, found {other:?}"))),
        }
    }

    // additive := multiplicative (('+'|'-') multiplicative)*
    fn additive(&mut self) -> Result<Expr> {
        let mut lhs = self.multiplicative()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let rhs = self.multiplicative()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let rhs = self.multiplicative()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // multiplicative := unary (('*'|'/') unary)*
    fn multiplicative(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    // power := atom ('^' unary)?   (right-associative, binds above unary minus
    // on the left so -x^2 parses as -(x^2))
    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            let exponent = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.advance() {
            Some(Token::Num(r)) => Ok(Expr::Num(r)),
            Some(Token::Ident(name)) => match name.as_str() {
                "x" => Ok(Expr::X),
                "pi" => Ok(Expr::Pi),
                "exp" | "ln" | "sin" | "cos" => {
                    self.expect(Token::LParen)?;
                    let arg = self.additive()?;
                    self.expect(Token::RParen)?;
                    let arg = Box::new(arg);
                    Ok(match name.as_str() {
                        "exp" => Expr::Exp(arg),
                        "ln" => Expr::Ln(arg),
                        "sin" => Expr::Sin(arg),
                        _ => Expr::Cos(arg),
                    })
                }
                other => Err(self.error(format!("unknown identifier '{other}'"))),
            },
            Some(Token::LParen) => {
                let inner = self.additive()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => Err(self.error(format!("unexpected token {other:?}"))),
        }
    }
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let tokens = lex(text)?;
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            source: text,
        };
        let expr = parser.additive()?;
        if parser.pos != tokens.len() {
            return Err(parser.error(format!(
                "trailing input from token {:?}",
                tokens[parser.pos]
            )));
        }
        Ok(expr)
    }

    /// Evaluates at `x`, at the precision `x` carries.
    pub fn eval(&self, x: &Real) -> Result<Real> {
        let value = self.eval_inner(x)?;
        ensure_finite(value, x, "expression evaluation")
    }

    fn eval_inner(&self, x: &Real) -> Result<Real> {
        Ok(match self {
            Expr::Num(r) => x.rational_like(r),
            Expr::X => x.clone(),
            Expr::Pi => x.pi_like(),
            Expr::Neg(a) => -a.eval_inner(x)?,
            Expr::Add(a, b) => a.eval_inner(x)? + b.eval_inner(x)?,
            Expr::Sub(a, b) => a.eval_inner(x)? - b.eval_inner(x)?,
            Expr::Mul(a, b) => a.eval_inner(x)? * b.eval_inner(x)?,
            Expr::Div(a, b) => {
                let denom = b.eval_inner(x)?;
                if denom.is_zero() {
                    return Err(Error::Evaluation {
                        x: x.to_decimal_string(20),
                        detail: "division by zero".into(),
                    });
                }
                a.eval_inner(x)? / denom
            }
            Expr::Pow(a, b) => {
                let base = a.eval_inner(x)?;
                if let Expr::Num(r) = b.as_ref() {
                    if *r.denom() == 1 {
                        if let Some(k) = r.numer().to_i32() {
                            return Ok(base.powi(k));
                        }
                    }
                }
                base.pow(&b.eval_inner(x)?)
            }
            Expr::Exp(a) => a.eval_inner(x)?.exp(),
            Expr::Ln(a) => a.eval_inner(x)?.ln(),
            Expr::Sin(a) => a.eval_inner(x)?.sin(),
            Expr::Cos(a) => a.eval_inner(x)?.cos(),
        })
    }

    /// Symbolic derivative with respect to `x`, lightly simplified.
    pub fn differentiate(&self) -> Expr {
        self.diff_inner().simplified()
    }

    fn diff_inner(&self) -> Expr {
        use Expr::*;
        let num = |n: i64| Num(Rational::from(n));
        match self {
            Num(_) | Pi => num(0),
            X => num(1),
            Neg(a) => Neg(Box::new(a.diff_inner())),
            Add(a, b) => Add(Box::new(a.diff_inner()), Box::new(b.diff_inner())),
            Sub(a, b) => Sub(Box::new(a.diff_inner()), Box::new(b.diff_inner())),
            Mul(a, b) => Add(
                Box::new(Mul(Box::new(a.diff_inner()), b.clone())),
                Box::new(Mul(a.clone(), Box::new(b.diff_inner()))),
            ),
            Div(a, b) => {
                // (a'b - ab') / b^2
                let numer = Sub(
                    Box::new(Mul(Box::new(a.diff_inner()), b.clone())),
                    Box::new(Mul(a.clone(), Box::new(b.diff_inner()))),
                );
                Div(
                    Box::new(numer),
                    Box::new(Pow(b.clone(), Box::new(num(2)))),
                )
            }
            Pow(base, exponent) => match exponent.as_ref() {
                Num(r) => {
                    // c u^(c-1) u'
                    let lowered = Pow(
                        base.clone(),
                        Box::new(Num(Rational::from(r - Rational::from(1)))),
                    );
                    Mul(
                        Box::new(Mul(Box::new(Num(r.clone())), Box::new(lowered))),
                        Box::new(base.diff_inner()),
                    )
                }
                _ => {
                    // u^v (v' ln u + v u'/u)
                    let term1 = Mul(Box::new(exponent.diff_inner()), Box::new(Ln(base.clone())));
                    let term2 = Div(
                        Box::new(Mul(exponent.clone(), Box::new(base.diff_inner()))),
                        base.clone(),
                    );
                    Mul(
                        Box::new(self.clone()),
                        Box::new(Add(Box::new(term1), Box::new(term2))),
                    )
                }
            },
            Exp(a) => Mul(Box::new(self.clone()), Box::new(a.diff_inner())),
            Ln(a) => Div(Box::new(a.diff_inner()), a.clone()),
            Sin(a) => Mul(Box::new(Cos(a.clone())), Box::new(a.diff_inner())),
            Cos(a) => Neg(Box::new(Mul(Box::new(Sin(a.clone())), Box::new(a.diff_inner())))),
        }
    }

    /// Constant folding and unit/zero elimination; keeps derivative trees
    /// from ballooning across repeated differentiation.
    pub fn simplified(&self) -> Expr {
        use Expr::*;
        let is_zero = |e: &Expr| matches!(e, Num(r) if *r == 0);
        let is_one = |e: &Expr| matches!(e, Num(r) if *r == 1);
        match self {
            Num(_) | X | Pi => self.clone(),
            Neg(a) => match a.simplified() {
                Num(r) => Num(Rational::from(-r)),
                Neg(inner) => *inner,
                s => Neg(Box::new(s)),
            },
            Add(a, b) => match (a.simplified(), b.simplified()) {
                (Num(p), Num(q)) => Num(Rational::from(p + q)),
                (s, t) if is_zero(&s) => t,
                (s, t) if is_zero(&t) => s,
                (s, t) => Add(Box::new(s), Box::new(t)),
            },
            Sub(a, b) => match (a.simplified(), b.simplified()) {
                (Num(p), Num(q)) => Num(Rational::from(p - q)),
                (s, t) if is_zero(&t) => s,
                (s, t) if is_zero(&s) => Neg(Box::new(t)).simplified(),
                (s, t) => Sub(Box::new(s), Box::new(t)),
            },
            Mul(a, b) => match (a.simplified(), b.simplified()) {
                (Num(p), Num(q)) => Num(Rational::from(p * q)),
                (s, t) if is_zero(&s) || is_zero(&t) => Num(Rational::from(0)),
                (s, t) if is_one(&s) => t,
                (s, t) if is_one(&t) => s,
                (s, t) => Mul(Box::new(s), Box::new(t)),
            },
            Div(a, b) => match (a.simplified(), b.simplified()) {
                (s, t) if is_zero(&s) && !is_zero(&t) => Num(Rational::from(0)),
                (Num(p), Num(q)) if q != 0 => Num(Rational::from(p / q)),
                (s, t) if is_one(&t) => s,
                (s, t) => Div(Box::new(s), Box::new(t)),
            },
            Pow(a, b) => match (a.simplified(), b.simplified()) {
                (s, t) if is_one(&t) => s,
                (_, t) if is_zero(&t) => Num(Rational::from(1)),
                (s, _) if is_one(&s) => Num(Rational::from(1)),
                (s, t) => Pow(Box::new(s), Box::new(t)),
            },
            Exp(a) => Exp(Box::new(a.simplified())),
            Ln(a) => Ln(Box::new(a.simplified())),
            Sin(a) => Sin(Box::new(a.simplified())),
            Cos(a) => Cos(Box::new(a.simplified())),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_expr(e: &Expr, f: &mut fmt::Formatter<'_>, parent_prec: u8) -> fmt::Result {
            let prec = match e {
                Expr::Add(..) | Expr::Sub(..) => 1,
                Expr::Mul(..) | Expr::Div(..) => 2,
                Expr::Neg(..) => 3,
                Expr::Pow(..) => 4,
                _ => 5,
            };
            let needs_parens = prec < parent_prec;
            if needs_parens {
                write!(f, "(")?;
            }
            match e {
                Expr::Num(r) => {
                    if *r.denom() == 1 {
                        write!(f, "{}", r.numer())?;
                    } else {
                        write!(f, "{}/{}", r.numer(), r.denom())?;
                    }
                }
                Expr::X => write!(f, "x")?,
                Expr::Pi => write!(f, "pi")?,
                Expr::Neg(a) => {
                    write!(f, "-")?;
                    write_expr(a, f, 3)?;
                }
                Expr::Add(a, b) => {
                    write_expr(a, f, 1)?;
                    write!(f, " + ")?;
                    write_expr(b, f, 2)?;
                }
                Expr::Sub(a, b) => {
                    write_expr(a, f, 1)?;
                    write!(f, " - ")?;
                    write_expr(b, f, 2)?;
                }
                Expr::Mul(a, b) => {
                    write_expr(a, f, 2)?;
                    write!(f, "*")?;
                    write_expr(b, f, 3)?;
                }
                Expr::Div(a, b) => {
                    write_expr(a, f, 2)?;
                    write!(f, "/")?;
                    write_expr(b, f, 3)?;
                }
                Expr::Pow(a, b) => {
                    write_expr(a, f, 5)?;
                    write!(f, "^")?;
                    write_expr(b, f, 5)?;
                }
                Expr::Exp(a) => {
                    write!(f, "exp(")?;
                    write_expr(a, f, 0)?;
                    write!(f, ")")?;
                }
                Expr::Ln(a) => {
                    write!(f, "ln(")?;
                    write_expr(a, f, 0)?;
                    write!(f, ")")?;
                }
                Expr::Sin(a) => {
                    write!(f, "sin(")?;
                    write_expr(a, f, 0)?;
                    write!(f, ")")?;
                }
                Expr::Cos(a) => {
                    write!(f, "cos(")?;
                    write_expr(a, f, 0)?;
                    write!(f, ")")?;
                }
            }
            if needs_parens {
                write!(f, ")")?;
            }
            Ok(())
        }
        write_expr(self, f, 0)
    }
}
