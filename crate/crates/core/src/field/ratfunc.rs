//! Rational functions in the indeterminate q, kept in canonical form:
//! the denominator is monic and coprime to the numerator, zero is 0/1.

use super::poly::QPoly;
use super::rational::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form. Panics if `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        rf
    }

    pub fn from_poly(p: QPoly) -> Self {
        RationalFunction { num: p, den: QPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        RationalFunction::from_poly(QPoly::constant(c))
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(QPoly::one())
    }

    /// The generator q.
    pub fn q() -> Self {
        RationalFunction::from_poly(QPoly::gen())
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The constant value, when this is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.degree().map_or(true, |d| d == 0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = QPoly::one();
            return;
        }
        // Strip the common power of q first; most denominators produced by
        // the q-case constructions are plain monomials, for which this
        // avoids the Euclidean gcd entirely.
        let nv = self.num.valuation().unwrap();
        let dv = self.den.valuation().unwrap();
        let shift = nv.min(dv);
        if shift > 0 {
            self.num = self.num.shift_down(shift);
            self.den = self.den.shift_down(shift);
        }
        if self.den.degree() != Some(0) && self.num.degree() != Some(0) {
            let g = self.num.gcd(&self.den);
            if g.degree().is_some_and(|d| d > 0) {
                self.num = self.num.divrem(&g).0;
                self.den = self.den.divrem(&g).0;
            }
        }
        let lead = self.den.leading().unwrap();
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn inv(&self) -> Option<RationalFunction> {
        if self.is_zero() {
            return None;
        }
        Some(RationalFunction::new(self.den.clone(), self.num.clone()))
    }

    /// Integer power, with negative exponents; `None` for `0^(-k)`.
    pub fn pow(&self, e: i64) -> Option<RationalFunction> {
        if e == 0 {
            return Some(RationalFunction::one());
        }
        let base = if e > 0 { self.clone() } else { self.inv()? };
        let mut out = RationalFunction::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Some(out)
    }

    /// Exact square root, if one exists; the numerator's leading
    /// coefficient of the root is taken positive.
    pub fn sqrt(&self) -> Option<RationalFunction> {
        let num = self.num.sqrt()?;
        let den = self.den.sqrt()?;
        Some(RationalFunction::new(num, den))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::ratfunc_string(self))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    #[test]
    fn gcd_cancellation() {
        // (q^2 - 1)/(q + 1) normalizes to q - 1
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[1, 1]));
        assert_eq!(f, RationalFunction::from_poly(p(&[-1, 1])));
    }

    #[test]
    fn monic_denominator() {
        // q / (2q + 2) -> (1/2 q) / (q + 1)
        let f = RationalFunction::new(p(&[0, 1]), p(&[2, 2]));
        assert!(f.denominator().leading().unwrap().is_one());
        let back = &f * &RationalFunction::from_poly(p(&[1, 1]));
        assert_eq!(
            back,
            RationalFunction::from_poly(QPoly::monomial(Rational::new(1, 2), 1))
        );
    }

    #[test]
    fn monomial_stripping() {
        // q^3 / q^2 = q
        let f = RationalFunction::new(p(&[0, 0, 0, 1]), p(&[0, 0, 1]));
        assert_eq!(f, RationalFunction::q());
    }

    #[test]
    fn inverse_and_powers() {
        let q = RationalFunction::q();
        assert_eq!(q.pow(-1).unwrap(), RationalFunction::new(p(&[1]), p(&[0, 1])));
        let id = &q.pow(-3).unwrap() * &q.pow(3).unwrap();
        assert!(id.is_one());
        assert!(RationalFunction::zero().inv().is_none());
    }

    #[test]
    fn sqrt_cases() {
        let q = RationalFunction::q();
        assert_eq!(q.pow(2).unwrap().sqrt(), Some(q.clone()));
        assert_eq!(q.pow(-4).unwrap().sqrt(), Some(q.pow(-2).unwrap()));
        assert_eq!(q.sqrt(), None);
        // 4 -> 2, 2 -> none
        assert_eq!(
            RationalFunction::from_rational(Rational::from_int(4)).sqrt(),
            Some(RationalFunction::from_rational(Rational::from_int(2)))
        );
        assert_eq!(RationalFunction::from_rational(Rational::from_int(2)).sqrt(), None);
    }
}
