//! The bidiagonal-pair calculus: verification against the definition,
//! parameter arrays and classification, the fundamental relation,
//! reduction to canonical form, split decomposition, highest spaces,
//! third operators, and constructive isomorphism.
//!
//! A `BidiagonalPair` is immutable once built by `verify`; every
//! operation here is a pure function of its inputs.

mod checks;
mod iso;
mod params;
mod reduce;
mod relation;
mod spaces;
mod third;
mod verify;

pub use checks::LemmaSuite;
pub use iso::isomorphism;
pub use params::{
    affine, affine_matrices, classify_check, parameter_array, AffineWitness, ClassClause,
    ClassifyVerdict, ClauseStatus, ParameterArray,
};
pub use reduce::{eigenvalue_form, is_reduced, reduce, reduced_kind, EigenvalueForm, ReducedKind};
pub use relation::{base, fundamental_relation, relation_polynomials, FundamentalRelation};
pub use spaces::{highest_spaces, split_subspaces, ChainLabel, SubspaceChain};
pub use third::{third_operator, third_operator_kernel_dim};
pub use verify::{verify, Clause, Finding, VerificationReport, VerifyOutcome};

use crate::field::{FieldContext, Scalar};
use crate::linalg::{invert, LinalgError, Matrix, Subspace};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("eigenvalues of {operator} fall outside the working field; supply hints or change the field")]
    Unsupported { operator: String },
    #[error("operation requires diameter at least {needs}")]
    DiameterTooSmall { needs: usize },
    #[error("eigenvalue ratios are inconsistent")]
    InconsistentRatios,
    #[error("affine scale factors must be nonzero")]
    ZeroScale,
    #[error("no square root of 1/b = {base} in the working field; use the rational-function field")]
    NoSquareRoot { base: String },
    #[error("eigenvalue sequences do not fit the closed form: {0}")]
    FitFailure(String),
    #[error("pair is not reduced")]
    NotReduced,
    #[error("parameter array components have different lengths")]
    LengthMismatch,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// Eigenvalues, eigenspaces, and projectors of one transformation, in a
/// standard ordering. The concatenated eigenbasis and its inverse are
/// kept for block computations: column block i of `frame` spans the i-th
/// eigenspace.
#[derive(Clone)]
pub struct EigenData {
    eigenvalues: Vec<Scalar>,
    eigenspaces: Vec<Subspace>,
    projectors: Vec<Matrix>,
    frame: Matrix,
    frame_inv: Matrix,
    offsets: Vec<usize>,
}

impl EigenData {
    /// Assembles eigendata from an ordered list of eigenpairs. The
    /// eigenspace dimensions must fill the ambient space.
    pub(crate) fn assemble(ordered: Vec<(Scalar, Subspace)>) -> EigenData {
        assert!(!ordered.is_empty(), "eigendata needs at least one eigenspace");
        let mut offsets = vec![0usize];
        let mut frame = ordered[0].1.basis().clone();
        offsets.push(frame.cols());
        for (_, space) in &ordered[1..] {
            assert!(space.dim() > 0, "eigenspaces must be nonzero");
            frame = frame.hstack(space.basis());
            offsets.push(frame.cols());
        }
        let n = frame.rows();
        assert_eq!(frame.cols(), n, "eigenspace dimensions must fill the space");
        let frame_inv = invert(&frame).expect("eigenspaces are independent");
        let mut projectors = Vec::with_capacity(ordered.len());
        let mut sum = Matrix::zero(n, n, frame.ctx());
        for k in 0..ordered.len() {
            let cols = frame.submatrix(0, offsets[k], n, offsets[k + 1] - offsets[k]);
            let rows = frame_inv.submatrix(offsets[k], 0, offsets[k + 1] - offsets[k], n);
            let p = &cols * &rows;
            sum = &sum + &p;
            projectors.push(p);
        }
        assert!(sum.is_identity(), "projectors must resolve the identity");
        let (eigenvalues, eigenspaces) = ordered.into_iter().unzip();
        EigenData { eigenvalues, eigenspaces, projectors, frame, frame_inv, offsets }
    }

    /// Number of eigenspaces minus one.
    pub fn diameter(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn eigenspaces(&self) -> &[Subspace] {
        &self.eigenspaces
    }

    /// Projection onto the i-th eigenspace along the others.
    pub fn projectors(&self) -> &[Matrix] {
        &self.projectors
    }

    pub fn dims(&self) -> Vec<usize> {
        self.eigenspaces.iter().map(Subspace::dim).collect()
    }

    /// Concatenated eigenbasis.
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    pub fn frame_inv(&self) -> &Matrix {
        &self.frame_inv
    }

    /// Row/column range of block `k` in frame coordinates.
    pub fn block(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    /// Expresses `m` in frame coordinates: `frame_inv * m * frame`.
    pub fn coordinates_of(&self, m: &Matrix) -> Matrix {
        &(&self.frame_inv * m) * &self.frame
    }

    fn with_eigenvalues(&self, eigenvalues: Vec<Scalar>) -> EigenData {
        assert_eq!(eigenvalues.len(), self.eigenvalues.len());
        EigenData { eigenvalues, ..self.clone() }
    }
}

/// A verified bidiagonal pair with its standard-ordered eigenstructure.
#[derive(Clone)]
pub struct BidiagonalPair {
    a: Matrix,
    a_star: Matrix,
    eig: EigenData,
    eig_star: EigenData,
}

impl std::fmt::Debug for BidiagonalPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BidiagonalPair(dim {}, d {}, theta {:?}, theta* {:?})",
            self.dim(),
            self.diameter(),
            self.eig.eigenvalues(),
            self.eig_star.eigenvalues()
        )
    }
}

#[cfg(any())]
pub struct BidiagonalPairFields {
    a: Matrix,
    a_star: Matrix,
    eig: EigenData,
    eig_star: EigenData,
}

impl BidiagonalPair {
    pub(crate) fn assemble(
        a: Matrix,
        a_star: Matrix,
        eig: EigenData,
        eig_star: EigenData,
    ) -> BidiagonalPair {
        assert_eq!(eig.diameter(), eig_star.diameter(), "d = delta");
        let d = eig.diameter();
        let dims = eig.dims();
        let dims_star = eig_star.dims();
        for i in 0..=d {
            assert!(
                dims[i] == dims_star[i] && dims[i] == dims[d - i],
                "eigenspace dimension lemma violated"
            );
        }
        BidiagonalPair { a, a_star, eig, eig_star }
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn a_star(&self) -> &Matrix {
        &self.a_star
    }

    pub fn eig(&self) -> &EigenData {
        &self.eig
    }

    pub fn eig_star(&self) -> &EigenData {
        &self.eig_star
    }

    pub fn diameter(&self) -> usize {
        self.eig.diameter()
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    pub fn ctx(&self) -> &FieldContext {
        self.a.ctx()
    }

    /// `[A, A*] = A A* - A* A`.
    pub fn commutator(&self) -> Matrix {
        self.a.commutator(&self.a_star)
    }

    /// Shape: the common dimension of V_i, V_{d-i}, V*_i, V*_{d-i}.
    pub fn shape(&self) -> Vec<usize> {
        self.eig.dims()
    }

    /// The pair with the roles of A and A* swapped.
    pub fn dual(&self) -> BidiagonalPair {
        BidiagonalPair {
            a: self.a_star.clone(),
            a_star: self.a.clone(),
            eig: self.eig_star.clone(),
            eig_star: self.eig.clone(),
        }
    }
}
