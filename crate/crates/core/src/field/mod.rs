//! Exact field arithmetic over Q and the rational-function field Q(q).
//!
//! Every value carries a canonical form, so equality is structural and
//! all algebraic identities downstream can be checked exactly. All types
//! here are immutable; operations are pure functions.

pub mod format;
mod poly;
mod ratfunc;
mod rational;
mod scalar;

pub use poly::QPoly;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no q available: field is Q without a numeric q")]
    MissingQ,
    #[error("invalid numeric q {0}: q must avoid 0, 1, -1")]
    InvalidNumericQ(String),
    #[error("scalar parse error: {0}")]
    Parse(String),
}

/// Which exact field the computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    RationalFunctions,
}

/// The working field, together with a concrete value for q when the field
/// is Q and one is needed. A numeric q must avoid 0 and +-1: those are
/// exactly the rational roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    kind: FieldKind,
    numeric_q: Option<Rational>,
}

impl FieldContext {
    pub fn rationals() -> Self {
        FieldContext { kind: FieldKind::Rationals, numeric_q: None }
    }

    pub fn rational_functions() -> Self {
        FieldContext { kind: FieldKind::RationalFunctions, numeric_q: None }
    }

    pub fn rationals_with_q(q: Rational) -> Result<Self, FieldError> {
        if q.is_zero() || q.is_one() || (-&q).is_one() {
            return Err(FieldError::InvalidNumericQ(q.to_string()));
        }
        Ok(FieldContext { kind: FieldKind::Rationals, numeric_q: Some(q) })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn numeric_q(&self) -> Option<&Rational> {
        self.numeric_q.as_ref()
    }

    /// The canonical q of this context: the generator of Q(q), or the
    /// numeric q over Q when one was supplied.
    pub fn q_element(&self) -> Result<Scalar, FieldError> {
        match self.kind {
            FieldKind::RationalFunctions => Ok(Scalar::RatFn(RationalFunction::q())),
            FieldKind::Rationals => self
                .numeric_q
                .clone()
                .map(Scalar::Rat)
                .ok_or(FieldError::MissingQ),
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.kind)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.kind)
    }

    pub fn int(&self, n: i64) -> Scalar {
        Scalar::int(n, self.kind)
    }

    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        Scalar::parse(s, self.kind)
    }
}

/// The q-integer [n] = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n),
/// evaluated in the context's field.
pub fn q_integer(n: u32, ctx: &FieldContext) -> Result<Scalar, FieldError> {
    let q = ctx.q_element()?;
    q_integer_of(n, &q)
}

/// The q-integer [n] at an explicit q.
pub fn q_integer_of(n: u32, q: &Scalar) -> Result<Scalar, FieldError> {
    let mut acc = Scalar::zero(q.kind());
    for j in 0..n {
        let e = i64::from(n) - 1 - 2 * i64::from(j);
        acc = &acc + &q.pow(e)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_validation() {
        assert!(FieldContext::rationals_with_q(Rational::from_int(0)).is_err());
        assert!(FieldContext::rationals_with_q(Rational::from_int(1)).is_err());
        assert!(FieldContext::rationals_with_q(Rational::from_int(-1)).is_err());
        assert!(FieldContext::rationals_with_q(Rational::new(1, 2)).is_ok());
    }

    #[test]
    fn q_integers_small() {
        let ctx = FieldContext::rational_functions();
        assert!(q_integer(0, &ctx).unwrap().is_zero());
        assert!(q_integer(1, &ctx).unwrap().is_one());
        // [2] = (q^2 + 1)/q
        let two = q_integer(2, &ctx).unwrap();
        assert_eq!(two.to_string(), "(q^2 + 1)/(q)");
    }

    #[test]
    fn q_integer_numeric() {
        // [3] at q = 2 is q^2 + 1 + q^-2 = 21/4
        let ctx = FieldContext::rationals_with_q(Rational::from_int(2)).unwrap();
        assert_eq!(q_integer(3, &ctx).unwrap(), Scalar::Rat(Rational::new(21, 4)));
        // missing q
        let plain = FieldContext::rationals();
        assert!(matches!(q_integer(2, &plain), Err(FieldError::MissingQ)));
    }

    #[test]
    fn q_integer_defining_identity() {
        // [n](q - q^-1) = q^n - q^-n for 0 <= n <= 12
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let diff = &q - &q.pow(-1).unwrap();
        for n in 0..=12u32 {
            let lhs = &q_integer(n, &ctx).unwrap() * &diff;
            let rhs = &q.pow(i64::from(n)).unwrap() - &q.pow(-i64::from(n)).unwrap();
            assert_eq!(lhs, rhs, "[{n}]");
        }
    }
}
