//! Arbitrary-precision rationals in canonical form.
//!
//! Backed by `num::BigRational`, which keeps numerator and denominator
//! coprime with a positive denominator, so equality is structural.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Integer power, with negative exponents; `None` for `0^(-k)`.
    pub fn pow(&self, e: i64) -> Option<Rational> {
        if e == 0 {
            return Some(Rational::one());
        }
        if self.is_zero() {
            return if e > 0 { Some(Rational::zero()) } else { None };
        }
        let base = if e > 0 { self.0.clone() } else { self.0.recip() };
        let mut out = BigRational::one();
        for _ in 0..e.unsigned_abs() {
            out *= &base;
        }
        Some(Rational(out))
    }

    /// Exact nonnegative square root, if this is the square of a rational.
    pub fn sqrt(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(Rational(BigRational::new(ns, ds)))
        } else {
            None
        }
    }

    /// Parses `"a"` or `"a/b"` with an optional leading sign.
    pub fn parse(s: &str) -> Result<Rational, String> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = parse_int(num_str)?;
        let den = match den_str {
            Some(d) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(format!("zero denominator in {s:?}"));
                }
                den
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(num, den)))
    }
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    if s.is_empty() {
        return Err("empty integer literal".into());
    }
    let body = s.strip_prefix('+').or_else(|| s.strip_prefix('-')).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid integer literal {s:?}"));
    }
    s.parse::<BigInt>().map_err(|e| format!("invalid integer literal {s:?}: {e}"))
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(1, -2), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, 7), Rational::zero());
        assert_eq!(Rational::new(0, 7).denom(), Rational::one().denom());
    }

    #[test]
    fn arithmetic() {
        // 1/2 + 1/3 = 5/6
        let sum = &Rational::new(1, 2) + &Rational::new(1, 3);
        assert_eq!(sum, Rational::new(5, 6));
        assert_eq!(Rational::new(3, 4).inv(), Some(Rational::new(4, 3)));
        assert_eq!(Rational::zero().inv(), None);
    }

    #[test]
    fn powers_and_sqrt() {
        assert_eq!(Rational::new(2, 3).pow(-2), Some(Rational::new(9, 4)));
        assert_eq!(Rational::zero().pow(-1), None);
        assert_eq!(Rational::new(9, 4).sqrt(), Some(Rational::new(3, 2)));
        assert_eq!(Rational::new(2, 1).sqrt(), None);
        assert_eq!(Rational::new(-4, 1).sqrt(), None);
    }

    #[test]
    fn parsing() {
        assert_eq!(Rational::parse("-5/10").unwrap(), Rational::new(-1, 2));
        assert_eq!(Rational::parse(" 7 ").unwrap(), Rational::from_int(7));
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("1.5").is_err());
        assert_eq!(Rational::parse("3/2").unwrap().to_string(), "3/2");
        assert_eq!(Rational::parse("-4/2").unwrap().to_string(), "-2");
    }
}
