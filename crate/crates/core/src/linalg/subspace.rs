//! Subspaces of a finite-dimensional ambient space, stored as canonical
//! column-echelon bases so that equality of subspaces is equality of
//! representations.

use crate::field::FieldContext;
use crate::linalg::{rref, LinalgError, Matrix};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of the columns of `m`, canonicalized. The ambient dimension
    /// must be positive; the subspace itself may be zero.
    pub fn from_span(m: &Matrix) -> Subspace {
        assert!(m.rows() > 0, "ambient space must have positive dimension");
        Subspace { ambient: m.rows(), basis: rref::canonical_columns(m) }
    }

    pub fn zero_space(ambient: usize, ctx: &FieldContext) -> Subspace {
        Subspace::from_span(&Matrix::zero(ambient, 0, ctx))
    }

    pub fn full(ambient: usize, ctx: &FieldContext) -> Subspace {
        Subspace::from_span(&Matrix::identity(ambient, ctx))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis, one column per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn ctx(&self) -> &FieldContext {
        self.basis.ctx()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch);
        }
        if self.ctx() != other.ctx() {
            return Err(LinalgError::MixedFieldContexts);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        Ok(Subspace::from_span(&self.basis.hstack(&other.basis)))
    }

    /// Intersection via the kernel of the stacked constraint system
    /// `[U | -W]`: solutions pair up coefficients with equal images.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero_space(self.ambient, self.ctx()));
        }
        let stacked = self.basis.hstack(&(-&other.basis));
        let ker = rref::kernel(&stacked);
        let coeffs = ker.submatrix(0, 0, self.dim(), ker.cols());
        Ok(Subspace::from_span(&(&self.basis * &coeffs)))
    }

    pub fn contains_vector(&self, v: &Matrix) -> Result<bool, LinalgError> {
        if v.rows() != self.ambient || v.cols() != 1 {
            return Err(LinalgError::AmbientMismatch);
        }
        if v.ctx() != self.ctx() {
            return Err(LinalgError::MixedFieldContexts);
        }
        if v.is_zero() {
            return Ok(true);
        }
        Ok(rref::solve(&self.basis, v).is_some())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Ok(true);
        }
        Ok(rref::solve(&self.basis, &other.basis).is_some())
    }

    /// Sum of several subspaces.
    pub fn sum_of(spaces: &[Subspace]) -> Subspace {
        assert!(!spaces.is_empty(), "sum of no subspaces");
        let mut acc = spaces[0].basis.clone();
        for s in &spaces[1..] {
            assert_eq!(s.ambient, spaces[0].ambient, "ambient mismatch");
            acc = acc.hstack(&s.basis);
        }
        Subspace::from_span(&acc)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}
