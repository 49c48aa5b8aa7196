//! Canonical little-oh polynomials with exact rational scalars.
//!
//! A value is `r + Σ αᵢ t^{aᵢ}` with `0 < aᵢ ≤ 1`, exponents strictly
//! increasing and coefficients nonzero. Every constructor and ring
//! operation returns this canonical form, so equality in the quotient
//! ring is structural equality of representatives.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RealError {
    #[error("negative exponent {0} is not a little-oh polynomial")]
    NegativeExponent(String),
    #[error("evaluation point must be positive, got {0}")]
    NonPositiveEvalPoint(String),
}

/// A Fermat real in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FermatReal {
    standard_part: Rational,
    /// (exponent, coefficient), exponents strictly increasing in (0, 1],
    /// coefficients nonzero.
    terms: Vec<(Rational, Rational)>,
}

impl FermatReal {
    /// Canonicalize a raw constant plus term list: exponent-0 terms fold
    /// into the constant, like exponents merge, zero coefficients and
    /// exponents > 1 drop, survivors sort by increasing exponent.
    pub fn normalize(
        constant: Rational,
        raw_terms: impl IntoIterator<Item = (Rational, Rational)>,
    ) -> Result<Self, RealError> {
        let one = Rational::one();
        let mut standard_part = constant;
        let mut terms: Vec<(Rational, Rational)> = Vec::new();
        for (exp, coeff) in raw_terms {
            if exp.is_negative() {
                return Err(RealError::NegativeExponent(exp.to_string()));
            }
            if coeff.is_zero() || exp > one {
                continue;
            }
            if exp.is_zero() {
                standard_part += coeff;
                continue;
            }
            match terms.binary_search_by(|(e, _)| e.cmp(&exp)) {
                Ok(i) => {
                    terms[i].1 += coeff;
                    if terms[i].1.is_zero() {
                        terms.remove(i);
                    }
                }
                Err(i) => terms.insert(i, (exp, coeff)),
            }
        }
        Ok(FermatReal {
            standard_part,
            terms,
        })
    }

    pub fn from_rational(r: Rational) -> Self {
        FermatReal {
            standard_part: r,
            terms: Vec::new(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The pure infinitesimal ε(a) = t^a. Exponents outside (0, 1]
    /// normalize away exactly like any other raw term.
    pub fn eps(exponent: Rational) -> Result<Self, RealError> {
        Self::normalize(Rational::zero(), [(exponent, Rational::one())])
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn standard_part(&self) -> &Rational {
        &self.standard_part
    }

    /// x minus its standard part.
    pub fn infinitesimal_part(&self) -> FermatReal {
        FermatReal {
            standard_part: Rational::zero(),
            terms: self.terms.clone(),
        }
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.standard_part.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.standard_part.is_zero() && self.terms.is_empty()
    }

    /// Smallest-exponent term; dominates as t → 0⁺. Absent for constants.
    pub fn leading_term(&self) -> Option<(&Rational, &Rational)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    pub fn pow_nat(&self, n: u32) -> FermatReal {
        let mut acc = FermatReal::from_int(1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric value r + Σ αᵢ t^{aᵢ} at t > 0, with fractional powers
    /// approximated to `digits` significant decimal digits. Independent
    /// oracle for the symbolic order and equality procedures.
    pub fn eval_at_digits(&self, t: &Rational, digits: u32) -> Result<Rational, RealError> {
        if !t.is_positive() {
            return Err(RealError::NonPositiveEvalPoint(t.to_string()));
        }
        let mut acc = self.standard_part.clone();
        for (exp, coeff) in &self.terms {
            acc += coeff * pow_rat(t, exp, digits);
        }
        Ok(acc)
    }

    /// eval_at with the default precision (60 digits; the decision grid
    /// requires at least 50).
    pub fn eval_at(&self, t: &Rational) -> Result<Rational, RealError> {
        self.eval_at_digits(t, 60)
    }
}

/// t^{p/q} for t > 0 and reduced p/q > 0, to `digits` decimal digits:
/// the integer q-th root of t^p scaled by 10^{digits·q}.
fn pow_rat(t: &Rational, exp: &Rational, digits: u32) -> Rational {
    let p = exp
        .numer()
        .to_u32()
        .expect("canonical exponents have small numerators");
    let q = exp
        .denom()
        .to_u32()
        .expect("canonical exponents have small denominators");
    let tp = num_traits::pow::pow(t.clone(), p as usize);
    if q == 1 {
        return tp;
    }
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (tp.numer() * scale.pow(q)) / tp.denom();
    Rational::new(scaled.nth_root(q), scale)
}

impl Add for &FermatReal {
    type Output = FermatReal;
    fn add(self, rhs: &FermatReal) -> FermatReal {
        let raw = self
            .terms
            .iter()
            .chain(rhs.terms.iter())
            .map(|(e, c)| (e.clone(), c.clone()));
        FermatReal::normalize(&self.standard_part + &rhs.standard_part, raw)
            .expect("canonical inputs have nonnegative exponents")
    }
}

impl Sub for &FermatReal {
    type Output = FermatReal;
    fn sub(self, rhs: &FermatReal) -> FermatReal {
        self + &(-rhs)
    }
}

impl Neg for &FermatReal {
    type Output = FermatReal;
    fn neg(self) -> FermatReal {
        FermatReal {
            standard_part: -&self.standard_part,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &FermatReal {
    type Output = FermatReal;
    fn mul(self, rhs: &FermatReal) -> FermatReal {
        let one = Rational::one();
        let mut raw: Vec<(Rational, Rational)> = Vec::new();
        // cross terms t^{a+b} survive only while a + b ≤ 1
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea + eb;
                if e <= one {
                    raw.push((e, ca * cb));
                }
            }
        }
        for (e, c) in &self.terms {
            raw.push((e.clone(), c * &rhs.standard_part));
        }
        for (e, c) in &rhs.terms {
            raw.push((e.clone(), c * &self.standard_part));
        }
        FermatReal::normalize(&self.standard_part * &rhs.standard_part, raw)
            .expect("canonical inputs have nonnegative exponents")
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for FermatReal {
            type Output = FermatReal;
            fn $m(self, rhs: FermatReal) -> FermatReal { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for FermatReal {
    type Output = FermatReal;
    fn neg(self) -> FermatReal {
        -&self
    }
}

/// Canonical surface syntax: `r + c*eps(a) - ...`, parseable back by the
/// expression grammar.
impl fmt::Display for FermatReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.standard_part.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.standard_part)?;
            wrote = true;
        }
        for (exp, coeff) in &self.terms {
            if wrote {
                write!(f, " {} ", if coeff.is_negative() { "-" } else { "+" })?;
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            let mag = coeff.abs();
            if mag.is_one() {
                write!(f, "eps({exp})")?;
            } else {
                write!(f, "{mag}*eps({exp})")?;
            }
            wrote = true;
        }
        Ok(())
    }
}
