//! Surface syntax for Fermat reals.
//!
//! Grammar:
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' nat]
//! atom     := rational | 'eps(' rational ')' | '(' expr ')' | '-' atom
//! rational := integer ['/' positive-integer] | decimal literal
//! ```
//! Decimal literals convert exactly (0.1 = 1/10). Whitespace is
//! insensitive. The parser accepts any rational eps argument; evaluation
//! rejects non-positive exponents, while exponents above 1 vanish under
//! normalization.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::real::{FermatReal, Rational};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("semantic error: eps exponent must be positive, got {0}")]
    NonPositiveEps(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Rational),
    Eps(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval(&self) -> Result<FermatReal, ExprError> {
        match self {
            Expr::Lit(r) => Ok(FermatReal::from_rational(r.clone())),
            Expr::Eps(a) => {
                if !a.is_positive() {
                    return Err(ExprError::NonPositiveEps(a.to_string()));
                }
                Ok(FermatReal::eps(a.clone()).expect("positive exponent"))
            }
            Expr::Neg(e) => Ok(-e.eval()?),
            Expr::Add(a, b) => Ok(a.eval()? + b.eval()?),
            Expr::Sub(a, b) => Ok(a.eval()? - b.eval()?),
            Expr::Mul(a, b) => Ok(a.eval()? * b.eval()?),
            Expr::Pow(e, n) => Ok(e.eval()?.pow_nat(*n)),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(r) => write!(f, "{r}"),
            Expr::Eps(a) => write!(f, "eps({a})"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Pow(e, n) => write!(f, "({e})^{n}"),
        }
    }
}

/// Parse a source string into an expression tree.
pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Parse and evaluate in one step.
pub fn parse_real(src: &str) -> Result<FermatReal, ExprError> {
    parse(src)?.eval()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ExprError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                self.skip_ws();
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                self.skip_ws();
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let n = self.natural()?;
            Ok(Expr::Pow(Box::new(atom), n))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'e') => {
                if self.src[self.pos..].starts_with(b"eps") {
                    self.pos += 3;
                    self.skip_ws();
                    self.expect(b'(')?;
                    self.skip_ws();
                    let neg = self.eat(b'-');
                    let mut a = self.rational()?;
                    if neg {
                        a = -a;
                    }
                    self.skip_ws();
                    self.expect(b')')?;
                    Ok(Expr::Eps(a))
                } else {
                    Err(self.err("expected 'eps'"))
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Lit(self.rational()?)),
            Some(c) => Err(self.err(&format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ExprError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn natural(&mut self) -> Result<u32, ExprError> {
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| self.err("exponent too large"))
    }

    fn rational(&mut self) -> Result<Rational, ExprError> {
        let int_part = self.digits()?;
        match self.peek() {
            Some(b'/') => {
                self.pos += 1;
                let den = self.digits()?;
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                Ok(BigRational::new(int_part, den))
            }
            Some(b'.') => {
                self.pos += 1;
                let start = self.pos;
                let frac = self.digits()?;
                let places = (self.pos - start) as u32;
                let den = BigInt::from(10u32).pow(places);
                Ok(BigRational::new(int_part * &den + frac, den))
            }
            _ => Ok(BigRational::from_integer(int_part)),
        }
    }
}
