//! Characteristic and minimal polynomials.
//!
//! The characteristic polynomial is computed by the Faddeev-LeVerrier
//! recurrence, which needs only matrix products and exact division by the
//! integers 1..n (always possible in characteristic zero). The minimal
//! polynomial is found as the first linear dependence among the
//! vectorized powers I, M, M^2, ...

use crate::field::Scalar;
use crate::linalg::{rref, LinalgError, Matrix, ScalarPoly};

/// Monic characteristic polynomial `det(xI - M)`.
pub fn char_poly(m: &Matrix) -> Result<ScalarPoly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let n = m.rows();
    let kind = m.ctx().kind();
    let mut coeffs = vec![Scalar::zero(kind); n + 1];
    coeffs[n] = Scalar::one(kind);
    let mut aux = Matrix::identity(n, m.ctx());
    for k in 1..=n {
        let prod = m * &aux;
        let tr = trace(&prod);
        let c = (&(-&tr) * &Scalar::int(k as i64, kind).inv().unwrap()).clone();
        aux = prod.affine(&Scalar::one(kind), &c);
        coeffs[n - k] = c;
    }
    Ok(ScalarPoly::new(kind, coeffs))
}

/// Monic minimal polynomial of a square matrix.
pub fn min_poly(m: &Matrix) -> Result<ScalarPoly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let n = m.rows();
    let kind = m.ctx().kind();
    // Stack vec(I), vec(M), ... as columns until the new power is a
    // combination of the previous ones.
    let mut power = Matrix::identity(n, m.ctx());
    let mut stack = power.vectorize();
    loop {
        power = &power * m;
        let target = power.vectorize();
        if let Some(x) = rref::solve(&stack, &target) {
            let k = stack.cols();
            let mut coeffs: Vec<Scalar> = (0..k).map(|i| -x.at(i, 0)).collect();
            coeffs.push(Scalar::one(kind));
            return Ok(ScalarPoly::new(kind, coeffs));
        }
        stack = stack.hstack(&target);
        assert!(stack.cols() <= n + 1, "minimal polynomial search exceeded degree bound");
    }
}

/// Both polynomials at once.
pub fn char_min_poly(m: &Matrix) -> Result<(ScalarPoly, ScalarPoly), LinalgError> {
    Ok((char_poly(m)?, min_poly(m)?))
}

pub fn trace(m: &Matrix) -> Scalar {
    let mut acc = Scalar::zero(m.ctx().kind());
    for i in 0..m.rows().min(m.cols()) {
        acc = &acc + m.at(i, i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn p(ctx: &FieldContext, coeffs: &[i64]) -> ScalarPoly {
        ScalarPoly::new(ctx.kind(), coeffs.iter().map(|&c| ctx.int(c)).collect())
    }

    #[test]
    fn diagonal_example() {
        let ctx = FieldContext::rationals();
        let m = Matrix::diagonal(&[ctx.int(1), ctx.int(2)], &ctx);
        let (cp, mp) = char_min_poly(&m).unwrap();
        // (x-1)(x-2) = x^2 - 3x + 2, minimal polynomial equal
        assert_eq!(cp, p(&ctx, &[2, -3, 1]));
        assert_eq!(mp, cp);
    }

    #[test]
    fn repeated_eigenvalue() {
        let ctx = FieldContext::rationals();
        let (cp, mp) = char_min_poly(&Matrix::identity(3, &ctx)).unwrap();
        assert_eq!(cp, p(&ctx, &[-1, 3, -3, 1]));
        assert_eq!(mp, p(&ctx, &[-1, 1]));
    }

    #[test]
    fn nilpotent_detection() {
        let ctx = FieldContext::rationals();
        let m = Matrix::from_int_rows(&[&[0, 1], &[0, 0]], &ctx);
        let (cp, mp) = char_min_poly(&m).unwrap();
        assert_eq!(cp, p(&ctx, &[0, 0, 1]));
        // x^2: detects non-diagonalizability
        assert_eq!(mp, p(&ctx, &[0, 0, 1]));
    }

    #[test]
    fn min_divides_char_and_annihilates() {
        let ctx = FieldContext::rationals();
        let m = Matrix::from_int_rows(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 5]], &ctx);
        let (cp, mp) = char_min_poly(&m).unwrap();
        assert!(mp.divides(&cp));
        assert!(mp.eval_matrix(&m).is_zero());
        assert!(cp.eval_matrix(&m).is_zero());
        assert_eq!(mp.degree(), Some(3));
    }

    #[test]
    fn over_rational_functions() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let m = Matrix::diagonal(&[q.clone(), q.pow(-1).unwrap()], &ctx);
        let mp = min_poly(&m).unwrap();
        // x^2 - (q + q^-1) x + 1
        let expected = ScalarPoly::new(
            ctx.kind(),
            vec![ctx.one(), -&(&q + &q.pow(-1).unwrap()), ctx.one()],
        );
        assert_eq!(mp, expected);
    }
}
