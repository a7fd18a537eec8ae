//! Generic exact dense linear algebra over a `FieldContext`: elimination,
//! kernels and solves, subspace lattice operations, characteristic and
//! minimal polynomials, root extraction, eigendecomposition, spectral
//! projectors, and interpolation.

mod charpoly;
mod eigen;
mod interp;
mod matrix;
mod roots;
pub mod rref;
mod scalar_poly;
mod subspace;

pub use charpoly::{char_min_poly, char_poly, min_poly, trace};
pub use eigen::{eigendecompose, lagrange_projector, EigenOutcome};
pub use interp::interpolate;
pub use matrix::Matrix;
pub use roots::{linear_roots, RootSearch};
pub use rref::{canonical_columns, invert, kernel, rank, rref_rank_kernel, solve};
pub use scalar_poly::ScalarPoly;
pub use subspace::Subspace;

use crate::field::FieldError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrices belong to different field contexts")]
    MixedFieldContexts,
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("matrix is not square")]
    NotSquare,
    #[error("eigenvalues are not pairwise distinct")]
    DuplicateEigenvalues,
    #[error("interpolation nodes are not pairwise distinct")]
    DuplicateNodes,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}
