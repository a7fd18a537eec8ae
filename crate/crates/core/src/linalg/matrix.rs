//! Dense exact matrices over a single field context.

use crate::field::{FieldContext, Scalar};
use crate::linalg::LinalgError;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Row-major dense matrix. All entries share the context's field kind;
/// that is checked once at construction, after which arithmetic between
/// matrices of the same context cannot mix fields.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
    ctx: FieldContext,
}

impl Matrix {
    pub fn new(
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
        ctx: FieldContext,
    ) -> Result<Matrix, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.kind() != ctx.kind()) {
            return Err(LinalgError::MixedFieldContexts);
        }
        Ok(Matrix { rows, cols, entries, ctx })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        ctx: &FieldContext,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.kind(), ctx.kind(), "mixed field elements");
                entries.push(e);
            }
        }
        Matrix { rows, cols, entries, ctx: ctx.clone() }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, ctx: &FieldContext) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect(), ctx.clone())
    }

    /// Convenience for integer test data.
    pub fn from_int_rows(rows: &[&[i64]], ctx: &FieldContext) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(r, c, ctx, |i, j| ctx.int(rows[i][j]))
    }

    pub fn zero(rows: usize, cols: usize, ctx: &FieldContext) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![ctx.zero(); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn identity(n: usize, ctx: &FieldContext) -> Matrix {
        Matrix::from_fn(n, n, ctx, |i, j| if i == j { ctx.one() } else { ctx.zero() })
    }

    pub fn diagonal(diag: &[Scalar], ctx: &FieldContext) -> Matrix {
        Matrix::from_fn(diag.len(), diag.len(), ctx, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                ctx.zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.kind(), self.ctx.kind(), "mixed field elements");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, &self.ctx, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| self.at(i, j) * c)
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, &self.ctx, |i, _| self.at(i, j).clone())
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols);
        Matrix::from_fn(rows, cols, &self.ctx, |i, j| self.at(row0 + i, col0 + j).clone())
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hstack(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows, "row mismatch in hstack");
        assert_eq!(self.ctx, right.ctx, "context mismatch in hstack");
        Matrix::from_fn(self.rows, self.cols + right.cols, &self.ctx, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                right.at(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "column mismatch in vstack");
        assert_eq!(self.ctx, below.ctx, "context mismatch in vstack");
        Matrix::from_fn(self.rows + below.rows, self.cols, &self.ctx, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                below.at(i - self.rows, j).clone()
            }
        })
    }

    /// Block-diagonal assembly.
    pub fn block_diagonal(blocks: &[Matrix], ctx: &FieldContext) -> Matrix {
        let rows: usize = blocks.iter().map(Matrix::rows).sum();
        let cols: usize = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zero(rows, cols, ctx);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            assert_eq!(b.ctx, *ctx, "context mismatch in block_diagonal");
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.at(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `a*self + b*I`; the matrix must be square.
    pub fn affine(&self, a: &Scalar, b: &Scalar) -> Matrix {
        assert!(self.is_square(), "affine combination of a non-square matrix");
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| {
            let s = self.at(i, j) * a;
            if i == j {
                &s + b
            } else {
                s
            }
        })
    }

    /// Commutator `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Flattens row-major into a single column.
    pub fn vectorize(&self) -> Matrix {
        Matrix {
            rows: self.rows * self.cols,
            cols: 1,
            entries: self.entries.clone(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = Matrix::identity(self.rows, &self.ctx);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        assert_eq!(self.ctx, rhs.ctx, "context mismatch");
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        assert_eq!(self.ctx, rhs.ctx, "context mismatch");
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        assert_eq!(self.ctx, rhs.ctx, "context mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = &out.entries[i * rhs.cols + j] + &(a * b);
                    out.entries[i * rhs.cols + j] = t;
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, &self.ctx, |i, j| -self.at(i, j))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    #[test]
    fn construction_checks() {
        let ctx = FieldContext::rationals();
        let bad = Matrix::new(2, 2, vec![ctx.one(); 3], ctx.clone());
        assert!(matches!(bad, Err(LinalgError::DimensionMismatch(_))));
        let qq = FieldContext::rational_functions();
        let mixed = Matrix::new(1, 2, vec![ctx.one(), qq.one()], ctx);
        assert!(matches!(mixed, Err(LinalgError::MixedFieldContexts)));
    }

    #[test]
    fn product_and_commutator() {
        let ctx = FieldContext::rationals();
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 1]], &ctx);
        let b = Matrix::from_int_rows(&[&[1, 0], &[1, 1]], &ctx);
        let ab = &a * &b;
        assert_eq!(ab, Matrix::from_int_rows(&[&[2, 1], &[1, 1]], &ctx));
        let c = a.commutator(&b);
        assert_eq!(c, Matrix::from_int_rows(&[&[1, 0], &[0, -1]], &ctx));
    }

    #[test]
    fn affine_combination() {
        let ctx = FieldContext::rationals();
        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]], &ctx);
        let got = a.affine(&ctx.int(2), &ctx.int(-1));
        assert_eq!(got, Matrix::from_int_rows(&[&[1, 4], &[6, 7]], &ctx));
    }
}
