//! A scalar of the working field: a rational number or a rational
//! function in q. Arithmetic never mixes the two kinds; matrices and all
//! higher layers enforce a single field per computation at construction.

use super::format;
use super::ratfunc::RationalFunction;
use super::rational::Rational;
use super::{FieldError, FieldKind};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    RatFn(RationalFunction),
}

impl Scalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Rat(_) => FieldKind::Rationals,
            Scalar::RatFn(_) => FieldKind::RationalFunctions,
        }
    }

    pub fn zero(kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Rationals => Scalar::Rat(Rational::zero()),
            FieldKind::RationalFunctions => Scalar::RatFn(RationalFunction::zero()),
        }
    }

    pub fn one(kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Rationals => Scalar::Rat(Rational::one()),
            FieldKind::RationalFunctions => Scalar::RatFn(RationalFunction::one()),
        }
    }

    pub fn int(n: i64, kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Rationals => Scalar::Rat(Rational::from_int(n)),
            FieldKind::RationalFunctions => {
                Scalar::RatFn(RationalFunction::from_rational(Rational::from_int(n)))
            }
        }
    }

    pub fn rational(r: Rational, kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Rationals => Scalar::Rat(r),
            FieldKind::RationalFunctions => Scalar::RatFn(RationalFunction::from_rational(r)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::RatFn(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::RatFn(f) => f.is_one(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        match self {
            Scalar::Rat(r) => r.inv().map(Scalar::Rat),
            Scalar::RatFn(f) => f.inv().map(Scalar::RatFn),
        }
        .ok_or(FieldError::DivisionByZero)
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents of zero are a `DivisionByZero`.
    pub fn pow(&self, e: i64) -> Result<Scalar, FieldError> {
        match self {
            Scalar::Rat(r) => r.pow(e).map(Scalar::Rat),
            Scalar::RatFn(f) => f.pow(e).map(Scalar::RatFn),
        }
        .ok_or(FieldError::DivisionByZero)
    }

    /// Exact square root in the same field, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.sqrt().map(Scalar::Rat),
            Scalar::RatFn(f) => f.sqrt().map(Scalar::RatFn),
        }
    }

    /// Parses per the scalar text grammar of the given field.
    pub fn parse(s: &str, kind: FieldKind) -> Result<Scalar, FieldError> {
        match kind {
            FieldKind::Rationals => Rational::parse(s)
                .map(Scalar::Rat)
                .map_err(FieldError::Parse),
            FieldKind::RationalFunctions => format::parse_ratfunc(s)
                .map(Scalar::RatFn)
                .map_err(FieldError::Parse),
        }
    }

    fn pair<'a>(&'a self, rhs: &'a Scalar) -> (&'a Scalar, &'a Scalar) {
        assert_eq!(self.kind(), rhs.kind(), "mixed field elements");
        (self, rhs)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match self.pair(rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Scalar::RatFn(a + b),
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match self.pair(rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Scalar::RatFn(a - b),
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match self.pair(rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Scalar::RatFn(a * b),
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::RatFn(f) => Scalar::RatFn(-f),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::RatFn(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_and_parse() {
        let a = Scalar::parse("5/6", FieldKind::Rationals).unwrap();
        assert_eq!(a.to_string(), "5/6");
        let b = Scalar::parse("(q^2 + 1)/(q)", FieldKind::RationalFunctions).unwrap();
        assert_eq!(b.to_string(), "(q^2 + 1)/(q)");
        assert!(Scalar::parse("q + 1", FieldKind::Rationals).is_err());
    }

    #[test]
    fn inverse_errors() {
        let z = Scalar::zero(FieldKind::Rationals);
        assert!(matches!(z.inv(), Err(FieldError::DivisionByZero)));
        assert!(matches!(z.pow(-2), Err(FieldError::DivisionByZero)));
    }

    #[test]
    #[should_panic(expected = "mixed field elements")]
    fn mixed_kinds_panic() {
        let _ = &Scalar::one(FieldKind::Rationals) + &Scalar::one(FieldKind::RationalFunctions);
    }
}
