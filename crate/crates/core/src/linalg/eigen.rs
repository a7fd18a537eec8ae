//! Eigendecomposition and spectral projectors, exactly.

use crate::field::Scalar;
use crate::linalg::roots::{linear_roots, RootSearch};
use crate::linalg::{charpoly, rref, LinalgError, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenOutcome {
    /// Eigenvalue/eigenspace pairs whose dimensions sum to the ambient
    /// dimension, in a canonical (not yet standard) order.
    Diagonalizable(Vec<(Scalar, Subspace)>),
    /// All eigenvalues lie in the field but the eigenspaces do not fill
    /// the space.
    NotDiagonalizable,
    /// Some eigenvalue falls outside the working field (or outside the
    /// search pattern over Q(q)); supply hints or change the field.
    Unsupported,
}

/// Decomposes `m` into eigenspaces. When `known` is given it must list
/// all eigenvalues (distinct); otherwise eigenvalues are discovered from
/// the minimal polynomial, with `candidates` as extra root hints.
pub fn eigendecompose(
    m: &Matrix,
    known: Option<&[Scalar]>,
    candidates: &[Scalar],
) -> Result<EigenOutcome, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let n = m.rows();
    let eigenvalues: Vec<Scalar> = match known {
        Some(list) => {
            let mut seen: Vec<&Scalar> = Vec::new();
            for v in list {
                if seen.contains(&v) {
                    return Err(LinalgError::DuplicateEigenvalues);
                }
                seen.push(v);
            }
            list.to_vec()
        }
        None => {
            let mp = charpoly::min_poly(m)?;
            match linear_roots(&mp, candidates) {
                RootSearch::Unsupported => return Ok(EigenOutcome::Unsupported),
                RootSearch::Complete(roots) => {
                    // A repeated root of the minimal polynomial already
                    // rules out diagonalizability.
                    let mut distinct: Vec<Scalar> = Vec::new();
                    for r in roots {
                        if distinct.contains(&r) {
                            return Ok(EigenOutcome::NotDiagonalizable);
                        }
                        distinct.push(r);
                    }
                    distinct
                }
            }
        }
    };

    let mut spaces: Vec<(Scalar, Subspace)> = Vec::new();
    let mut total = 0usize;
    for theta in eigenvalues {
        let shifted = m.affine(&Scalar::one(m.ctx().kind()), &-&theta);
        let ker = Subspace::from_span(&rref::kernel(&shifted));
        if ker.dim() > 0 {
            total += ker.dim();
            spaces.push((theta, ker));
        }
    }
    if total != n {
        return Ok(EigenOutcome::NotDiagonalizable);
    }
    // Canonical order for reproducibility; standard orderings are
    // discovered later from the pair structure.
    spaces.sort_by_key(|(v, _)| v.to_string());
    Ok(EigenOutcome::Diagonalizable(spaces))
}

/// The projector onto the eigenspace of `theta` along the others,
/// realized as the Lagrange product  prod_{j != i} (M - theta_j I) / (theta_i - theta_j).
pub fn lagrange_projector(
    m: &Matrix,
    theta: &Scalar,
    all_eigenvalues: &[Scalar],
) -> Result<Matrix, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let mut seen: Vec<&Scalar> = Vec::new();
    for v in all_eigenvalues {
        if seen.contains(&v) {
            return Err(LinalgError::DuplicateEigenvalues);
        }
        seen.push(v);
    }
    assert!(all_eigenvalues.contains(theta), "theta must be one of the eigenvalues");
    let one = Scalar::one(m.ctx().kind());
    let mut p = Matrix::identity(m.rows(), m.ctx());
    for other in all_eigenvalues {
        if other == theta {
            continue;
        }
        let denom_inv = (theta - other).inv().expect("eigenvalues are distinct");
        let factor = m.affine(&one, &-other).scale(&denom_inv);
        p = &p * &factor;
    }
    Ok(p)
}
