//! Polynomials in one variable with coefficients in the working field,
//! used for characteristic/minimal polynomials, relation polynomials and
//! interpolation. The variable is abstract and unrelated to the q inside
//! the coefficients.

use crate::field::{FieldKind, Scalar};
use crate::linalg::Matrix;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct ScalarPoly {
    kind: FieldKind,
    coeffs: Vec<Scalar>, // lowest degree first, trailing zeros stripped
}

impl ScalarPoly {
    pub fn new(kind: FieldKind, mut coeffs: Vec<Scalar>) -> Self {
        assert!(coeffs.iter().all(|c| c.kind() == kind), "mixed field elements");
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        ScalarPoly { kind, coeffs }
    }

    pub fn zero(kind: FieldKind) -> Self {
        ScalarPoly { kind, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        let kind = c.kind();
        ScalarPoly::new(kind, vec![c])
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Scalar::zero(self.kind))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    /// Number of zero roots: the index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn shift_down(&self, k: usize) -> ScalarPoly {
        debug_assert!(self.coeffs.iter().take(k).all(Scalar::is_zero));
        ScalarPoly::new(self.kind, self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn make_monic(&self) -> ScalarPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                ScalarPoly::new(self.kind, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.kind);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Applies the polynomial to a square matrix by Horner evaluation.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let one = Scalar::one(self.kind);
        let mut acc = Matrix::zero(m.rows(), m.cols(), m.ctx());
        for c in self.coeffs.iter().rev() {
            acc = (&acc * m).affine(&one, c);
        }
        acc
    }

    pub fn add(&self, rhs: &ScalarPoly) -> ScalarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPoly::new(self.kind, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &ScalarPoly) -> ScalarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPoly::new(self.kind, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &ScalarPoly) -> ScalarPoly {
        if self.is_zero() || rhs.is_zero() {
            return ScalarPoly::zero(self.kind);
        }
        let mut coeffs = vec![Scalar::zero(self.kind); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        ScalarPoly::new(self.kind, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> ScalarPoly {
        ScalarPoly::new(self.kind, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division.
    pub fn divrem(&self, div: &ScalarPoly) -> (ScalarPoly, ScalarPoly) {
        let dd = div.degree().expect("division by zero polynomial");
        let lead_inv = div.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ScalarPoly::zero(self.kind), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![Scalar::zero(self.kind); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in div.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * d);
            }
            quot[i] = c;
        }
        (ScalarPoly::new(self.kind, quot), ScalarPoly::new(self.kind, rem))
    }

    pub fn divides(&self, other: &ScalarPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Synthetic division by the linear factor `(x - r)`; the remainder
    /// is `self(r)`.
    pub fn deflate(&self, r: &Scalar) -> (ScalarPoly, Scalar) {
        if self.is_zero() {
            return (self.clone(), Scalar::zero(self.kind));
        }
        let n = self.coeffs.len();
        let mut quot = vec![Scalar::zero(self.kind); n - 1];
        let mut carry = Scalar::zero(self.kind);
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &(&carry * r);
            if i == 0 {
                return (ScalarPoly::new(self.kind, quot), v);
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(kind: FieldKind, roots: &[Scalar]) -> ScalarPoly {
        let mut p = ScalarPoly::constant(Scalar::one(kind));
        for r in roots {
            let factor = ScalarPoly::new(kind, vec![-r, Scalar::one(kind)]);
            p = p.mul(&factor);
        }
        p
    }
}

impl fmt::Debug for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn p(ctx: &FieldContext, coeffs: &[i64]) -> ScalarPoly {
        ScalarPoly::new(ctx.kind(), coeffs.iter().map(|&c| ctx.int(c)).collect())
    }

    #[test]
    fn deflate_matches_divrem() {
        let ctx = FieldContext::rationals();
        // x^2 - 3x + 2 at root 2
        let f = p(&ctx, &[2, -3, 1]);
        let (q, r) = f.deflate(&ctx.int(2));
        assert!(r.is_zero());
        assert_eq!(q, p(&ctx, &[-1, 1]));
        let (q2, r2) = f.divrem(&p(&ctx, &[-2, 1]));
        assert_eq!(q, q2);
        assert!(r2.is_zero());
        let (_, r3) = f.deflate(&ctx.int(5));
        assert_eq!(r3, ctx.int(12));
    }

    #[test]
    fn matrix_evaluation() {
        let ctx = FieldContext::rationals();
        let m = Matrix::from_int_rows(&[&[0, 1], &[0, 0]], &ctx);
        // x^2 annihilates the nilpotent block
        let sq = p(&ctx, &[0, 0, 1]);
        assert!(sq.eval_matrix(&m).is_zero());
        // x + 1 -> M + I
        let lin = p(&ctx, &[1, 1]);
        assert_eq!(lin.eval_matrix(&m), Matrix::from_int_rows(&[&[1, 1], &[0, 1]], &ctx));
    }

    #[test]
    fn from_roots_expands() {
        let ctx = FieldContext::rationals();
        let f = ScalarPoly::from_roots(ctx.kind(), &[ctx.int(1), ctx.int(2)]);
        assert_eq!(f, p(&ctx, &[2, -3, 1]));
    }
}
