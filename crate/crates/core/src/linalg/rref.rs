//! Exact Gaussian elimination: reduced row echelon form, rank, kernel,
//! linear solves, and inverses.

use crate::linalg::{Matrix, Subspace};

pub struct Echelon {
    pub reduced: Matrix,
    pub rank: usize,
    /// Column index of the pivot in each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form by exact elimination.
pub fn rref(m: &Matrix) -> Echelon {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a.at(r, j).clone();
                a.set(r, j, a.at(p, j).clone());
                a.set(p, j, tmp);
            }
        }
        let inv = a.at(r, c).inv().expect("pivot is nonzero");
        for j in c..cols {
            a.set(r, j, a.at(r, j) * &inv);
        }
        for i in 0..rows {
            if i == r || a.at(i, c).is_zero() {
                continue;
            }
            let f = a.at(i, c).clone();
            for j in c..cols {
                let v = a.at(i, j) - &(&f * a.at(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, rank: r, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Kernel basis as the columns of a `cols x nullity` matrix, read off the
/// reduced echelon form with free variables set to unit values.
pub fn kernel(m: &Matrix) -> Matrix {
    let ech = rref(m);
    let cols = m.cols();
    let ctx = m.ctx();
    let free: Vec<usize> = (0..cols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut out = Matrix::zero(cols, free.len(), ctx);
    for (k, &fc) in free.iter().enumerate() {
        out.set(fc, k, ctx.one());
        for (row, &pc) in ech.pivots.iter().enumerate() {
            let v = ech.reduced.at(row, fc);
            if !v.is_zero() {
                out.set(pc, k, -v);
            }
        }
    }
    out
}

/// Reduced form, rank, and kernel of a matrix in one pass.
pub fn rref_rank_kernel(m: &Matrix) -> (Matrix, usize, Subspace) {
    let ech = rref(m);
    let ker = Subspace::from_span(&kernel(m));
    (ech.reduced, ech.rank, ker)
}

/// Solves `M x = b` for each column of `b` exactly; `None` if any column
/// is inconsistent. Free variables are set to zero.
pub fn solve(m: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows(), b.rows(), "shape mismatch in solve");
    let aug = m.hstack(b);
    let ech = rref(&aug);
    let ctx = m.ctx();
    // A pivot landing in the right-hand block means some column is
    // inconsistent.
    if ech.pivots.iter().any(|&c| c >= m.cols()) {
        return None;
    }
    let mut x = Matrix::zero(m.cols(), b.cols(), ctx);
    for (row, &pc) in ech.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(pc, j, ech.reduced.at(row, m.cols() + j).clone());
        }
    }
    Some(x)
}

/// Inverse of a square matrix; `None` when singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let ech = rref(&m.hstack(&Matrix::identity(n, m.ctx())));
    if ech.rank < n || ech.pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(ech.reduced.submatrix(0, n, n, n))
}

/// Canonical basis matrix for the column span: reduced column echelon
/// form with zero columns dropped. Two matrices have equal column spans
/// exactly when their canonical forms are identical.
pub fn canonical_columns(m: &Matrix) -> Matrix {
    let ech = rref(&m.transpose());
    ech.reduced.submatrix(0, 0, ech.rank, m.rows()).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldContext, Scalar};

    #[test]
    fn identity_and_zero() {
        let ctx = FieldContext::rationals();
        let (_, rank, ker) = rref_rank_kernel(&Matrix::identity(3, &ctx));
        assert_eq!(rank, 3);
        assert_eq!(ker.dim(), 0);
        let (_, rank, ker) = rref_rank_kernel(&Matrix::zero(2, 2, &ctx));
        assert_eq!(rank, 0);
        assert_eq!(ker.dim(), 2);
        assert_eq!(ker, Subspace::full(2, &ctx));
    }

    #[test]
    fn kernel_over_qq() {
        // [[1, q], [q, q^2]] has rank 1 with kernel spanned by (-q, 1)
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let m = Matrix::from_rows(
            vec![
                vec![ctx.one(), q.clone()],
                vec![q.clone(), &q * &q],
            ],
            &ctx,
        )
        .unwrap();
        let (_, rank, ker) = rref_rank_kernel(&m);
        assert_eq!(rank, 1);
        assert_eq!(ker.dim(), 1);
        let v = Matrix::from_rows(vec![vec![-&q], vec![ctx.one()]], &ctx).unwrap();
        assert!(ker.contains_vector(&v).unwrap());
        assert!((&m * &v).is_zero());
    }

    #[test]
    fn solve_cases() {
        let ctx = FieldContext::rationals();
        // M = I
        let b = Matrix::from_int_rows(&[&[4], &[5]], &ctx);
        assert_eq!(solve(&Matrix::identity(2, &ctx), &b), Some(b.clone()));
        // [[1,1],[0,1]] x = (3,1) -> (2,1)
        let m = Matrix::from_int_rows(&[&[1, 1], &[0, 1]], &ctx);
        let b = Matrix::from_int_rows(&[&[3], &[1]], &ctx);
        assert_eq!(solve(&m, &b), Some(Matrix::from_int_rows(&[&[2], &[1]], &ctx)));
        // inconsistent
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, 1]], &ctx);
        let b = Matrix::from_int_rows(&[&[0], &[1]], &ctx);
        assert_eq!(solve(&m, &b), None);
    }

    #[test]
    fn inverse_round_trip() {
        let ctx = FieldContext::rationals();
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]], &ctx);
        let inv = invert(&m).unwrap();
        assert!((&m * &inv).is_identity());
        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]], &ctx);
        assert!(invert(&singular).is_none());
    }

    #[test]
    fn canonical_column_span() {
        let ctx = FieldContext::rationals();
        // Same span, different presentations.
        let a = Matrix::from_int_rows(&[&[1, 2], &[1, 2], &[0, 1]], &ctx);
        let b = Matrix::from_int_rows(&[&[3, 1], &[3, 1], &[1, 0]], &ctx);
        assert_eq!(canonical_columns(&a), canonical_columns(&b));
        let z = Matrix::zero(3, 2, &ctx);
        assert_eq!(canonical_columns(&z).cols(), 0);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let ctx = FieldContext::rationals();
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]], &ctx);
        let k = kernel(&m);
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        let _ = Scalar::zero(crate::field::FieldKind::Rationals);
    }
}
