//! Parameter arrays: extraction, the classification predicate, and the
//! affine action on pairs.

use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::pair::{BidiagonalPair, PairError};

/// The classification invariant of a pair: eigenvalue sequence, dual
/// eigenvalue sequence, and shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterArray {
    theta: Vec<Scalar>,
    theta_star: Vec<Scalar>,
    rho: Vec<usize>,
}

impl ParameterArray {
    pub fn new(
        theta: Vec<Scalar>,
        theta_star: Vec<Scalar>,
        rho: Vec<usize>,
    ) -> Result<ParameterArray, PairError> {
        if theta.len() != theta_star.len() || theta.len() != rho.len() || theta.is_empty() {
            return Err(PairError::LengthMismatch);
        }
        Ok(ParameterArray { theta, theta_star, rho })
    }

    pub fn diameter(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn theta(&self) -> &[Scalar] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[Scalar] {
        &self.theta_star
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    /// Total dimension of any pair with this array.
    pub fn dimension(&self) -> usize {
        self.rho.iter().sum()
    }

    /// The array of the dual pair: theta and theta* swap, the shape stays.
    pub fn dual(&self) -> ParameterArray {
        ParameterArray {
            theta: self.theta_star.clone(),
            theta_star: self.theta.clone(),
            rho: self.rho.clone(),
        }
    }
}

/// Reads the parameter array off a verified pair.
pub fn parameter_array(pair: &BidiagonalPair) -> ParameterArray {
    ParameterArray {
        theta: pair.eig().eigenvalues().to_vec(),
        theta_star: pair.eig_star().eigenvalues().to_vec(),
        rho: pair.shape(),
    }
}

/// The clauses of the classification predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassClause {
    /// Eigenvalues pairwise distinct in each sequence.
    Distinct,
    /// Successive-difference ratios equal and constant.
    ConstantRatio,
    /// Shape entries are positive integers.
    PositiveShape,
    /// Shape is symmetric.
    SymmetricShape,
    /// Shape is non-decreasing on the first half.
    UnimodalShape,
}

impl ClassClause {
    pub fn id(&self) -> &'static str {
        match self {
            ClassClause::Distinct => "thm-class.i",
            ClassClause::ConstantRatio => "thm-class.ii",
            ClassClause::PositiveShape => "thm-class.iii",
            ClassClause::SymmetricShape => "thm-class.iv",
            ClassClause::UnimodalShape => "thm-class.v",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseStatus {
    Pass,
    /// Passes because the index range is empty at this diameter.
    Vacuous,
    Fail,
}

#[derive(Debug, Clone)]
pub struct ClauseVerdict {
    pub clause: ClassClause,
    pub status: ClauseStatus,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ClassifyVerdict {
    pub clauses: Vec<ClauseVerdict>,
    pub pass: bool,
    /// The common ratio b when clause (ii) holds (1 for d <= 1).
    pub base: Option<Scalar>,
}

/// Evaluates the five classification clauses independently. The overall
/// verdict is positive exactly when a bidiagonal pair with this array
/// exists (construction may demand the rational-function field).
pub fn classify_check(params: &ParameterArray) -> ClassifyVerdict {
    let d = params.diameter();
    let mut clauses = Vec::new();

    // (i) distinctness
    let mut distinct_ok = true;
    let mut detail = None;
    'outer: for (label, seq) in [("theta", params.theta()), ("theta*", params.theta_star())] {
        for i in 0..seq.len() {
            for j in 0..i {
                if seq[i] == seq[j] {
                    distinct_ok = false;
                    detail = Some(format!("{label}[{j}] equals {label}[{i}]"));
                    break 'outer;
                }
            }
        }
    }
    clauses.push(ClauseVerdict {
        clause: ClassClause::Distinct,
        status: if d == 0 {
            ClauseStatus::Vacuous
        } else if distinct_ok {
            ClauseStatus::Pass
        } else {
            ClauseStatus::Fail
        },
        detail,
    });

    // (ii) the two ratio families agree and are constant
    let (ratio_status, ratio_detail, base) = ratio_clause(params, distinct_ok);
    clauses.push(ClauseVerdict {
        clause: ClassClause::ConstantRatio,
        status: ratio_status,
        detail: ratio_detail,
    });

    // (iii) rho positive: enforced by the unsigned type except for zero
    let zero_at = params.rho().iter().position(|&r| r == 0);
    clauses.push(ClauseVerdict {
        clause: ClassClause::PositiveShape,
        status: if zero_at.is_none() { ClauseStatus::Pass } else { ClauseStatus::Fail },
        detail: zero_at.map(|i| format!("rho[{i}] is zero")),
    });

    // (iv) rho symmetric
    let asym = (0..=d).find(|&i| params.rho()[i] != params.rho()[d - i]);
    clauses.push(ClauseVerdict {
        clause: ClassClause::SymmetricShape,
        status: if asym.is_none() { ClauseStatus::Pass } else { ClauseStatus::Fail },
        detail: asym.map(|i| {
            format!("rho[{i}] = {} differs from rho[{}] = {}", params.rho()[i], d - i, params.rho()[d - i])
        }),
    });

    // (v) rho non-decreasing below the middle
    let dip = (0..=d).filter(|&i| 2 * i < d).find(|&i| params.rho()[i] > params.rho()[i + 1]);
    clauses.push(ClauseVerdict {
        clause: ClassClause::UnimodalShape,
        status: if d == 0 {
            ClauseStatus::Vacuous
        } else if dip.is_none() {
            ClauseStatus::Pass
        } else {
            ClauseStatus::Fail
        },
        detail: dip.map(|i| {
            format!("rho[{i}] = {} exceeds rho[{}] = {}", params.rho()[i], i + 1, params.rho()[i + 1])
        }),
    });

    let pass = clauses.iter().all(|c| c.status != ClauseStatus::Fail);
    ClassifyVerdict { clauses, pass, base: if pass { base } else { None } }
}

fn ratio_clause(
    params: &ParameterArray,
    distinct_ok: bool,
) -> (ClauseStatus, Option<String>, Option<Scalar>) {
    let d = params.diameter();
    let kind = params.theta()[0].kind();
    if d <= 1 {
        return (ClauseStatus::Vacuous, None, Some(Scalar::one(kind)));
    }
    if !distinct_ok {
        return (
            ClauseStatus::Fail,
            Some("ratios undefined: repeated eigenvalues".into()),
            None,
        );
    }
    let theta = params.theta();
    let ts = params.theta_star();
    let mut base: Option<Scalar> = None;
    for i in 1..d {
        let num = &theta[i + 1] - &theta[i];
        let den = (&theta[i] - &theta[i - 1]).inv().expect("distinct eigenvalues");
        let r = &num * &den;
        let num_s = &ts[i] - &ts[i - 1];
        let den_s = (&ts[i + 1] - &ts[i]).inv().expect("distinct eigenvalues");
        let r_s = &num_s * &den_s;
        if r != r_s {
            return (
                ClauseStatus::Fail,
                Some(format!("ratio at i={i} is {r} for theta but {r_s} for theta*")),
                None,
            );
        }
        match &base {
            None => base = Some(r),
            Some(b) if *b != r => {
                return (
                    ClauseStatus::Fail,
                    Some(format!("ratio changes from {b} to {r} at i={i}")),
                    None,
                );
            }
            _ => {}
        }
    }
    (ClauseStatus::Pass, None, base)
}

/// The affine map (A, A*) -> (p A + q I, r A* + s I); p and r nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWitness {
    pub p: Scalar,
    pub q_scale: Scalar,
    pub r: Scalar,
    pub s: Scalar,
}

impl AffineWitness {
    pub fn identity(kind: crate::field::FieldKind) -> AffineWitness {
        AffineWitness {
            p: Scalar::one(kind),
            q_scale: Scalar::zero(kind),
            r: Scalar::one(kind),
            s: Scalar::zero(kind),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.p.is_one() && self.q_scale.is_zero() && self.r.is_one() && self.s.is_zero()
    }
}

/// Applies an affine witness to a verified pair. The eigenspaces (and
/// hence the shape and the standard orderings) are unchanged; the
/// eigenvalue sequences transform affinely.
pub fn affine(pair: &BidiagonalPair, w: &AffineWitness) -> Result<BidiagonalPair, PairError> {
    if w.p.is_zero() || w.r.is_zero() {
        return Err(PairError::ZeroScale);
    }
    let a = pair.a().affine(&w.p, &w.q_scale);
    let a_star = pair.a_star().affine(&w.r, &w.s);
    let theta: Vec<Scalar> = pair
        .eig()
        .eigenvalues()
        .iter()
        .map(|t| &(&w.p * t) + &w.q_scale)
        .collect();
    let theta_star: Vec<Scalar> = pair
        .eig_star()
        .eigenvalues()
        .iter()
        .map(|t| &(&w.r * t) + &w.s)
        .collect();
    let eig = pair.eig().with_eigenvalues(theta);
    let eig_star = pair.eig_star().with_eigenvalues(theta_star);
    Ok(BidiagonalPair::assemble(a, a_star, eig, eig_star))
}

/// Matrix form of the affine image, for callers that only need the
/// transformed operators.
pub fn affine_matrices(pair: &BidiagonalPair, w: &AffineWitness) -> (Matrix, Matrix) {
    (pair.a().affine(&w.p, &w.q_scale), pair.a_star().affine(&w.r, &w.s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::linalg::Matrix;
    use crate::pair::verify;

    fn ints(ctx: &FieldContext, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| ctx.int(x)).collect()
    }

    fn sl2_d2_pair() -> BidiagonalPair {
        let ctx = FieldContext::rationals();
        let a = Matrix::from_int_rows(&[&[-2, 0, 0], &[-2, 0, 0], &[0, -4, 2]], &ctx);
        let astar = Matrix::diagonal(&[ctx.int(2), ctx.int(0), ctx.int(-2)], &ctx);
        verify(&a, &astar, None).unwrap().pair.unwrap()
    }

    #[test]
    fn classify_positive() {
        let ctx = FieldContext::rationals();
        let params = ParameterArray::new(
            ints(&ctx, &[-3, -1, 1, 3]),
            ints(&ctx, &[3, 1, -1, -3]),
            vec![1, 2, 2, 1],
        )
        .unwrap();
        let verdict = classify_check(&params);
        assert!(verdict.pass);
        assert_eq!(verdict.base, Some(ctx.one()));
    }

    #[test]
    fn classify_shape_dip() {
        let ctx = FieldContext::rationals();
        let params = ParameterArray::new(
            ints(&ctx, &[0, 1, 2]),
            ints(&ctx, &[2, 1, 0]),
            vec![2, 1, 2],
        )
        .unwrap();
        let verdict = classify_check(&params);
        assert!(!verdict.pass);
        let v = verdict
            .clauses
            .iter()
            .find(|c| c.clause == ClassClause::UnimodalShape)
            .unwrap();
        assert_eq!(v.status, ClauseStatus::Fail);
        // all other clauses pass
        assert!(verdict
            .clauses
            .iter()
            .filter(|c| c.clause != ClassClause::UnimodalShape)
            .all(|c| c.status != ClauseStatus::Fail));
    }

    #[test]
    fn classify_ratio_mismatch() {
        let ctx = FieldContext::rationals();
        let params = ParameterArray::new(
            ints(&ctx, &[0, 1, 3]),
            ints(&ctx, &[0, -1, -3]),
            vec![1, 1, 1],
        )
        .unwrap();
        let verdict = classify_check(&params);
        assert!(!verdict.pass);
        let v = verdict
            .clauses
            .iter()
            .find(|c| c.clause == ClassClause::ConstantRatio)
            .unwrap();
        assert_eq!(v.status, ClauseStatus::Fail);
    }

    #[test]
    fn vacuous_clauses_at_small_diameter() {
        let ctx = FieldContext::rationals();
        let d0 = ParameterArray::new(ints(&ctx, &[5]), ints(&ctx, &[7]), vec![2]).unwrap();
        let verdict = classify_check(&d0);
        assert!(verdict.pass);
        assert!(verdict
            .clauses
            .iter()
            .filter(|c| matches!(
                c.clause,
                ClassClause::Distinct | ClassClause::ConstantRatio | ClassClause::UnimodalShape
            ))
            .all(|c| c.status == ClauseStatus::Vacuous));
        let d1 = ParameterArray::new(ints(&ctx, &[0, 1]), ints(&ctx, &[1, 0]), vec![2, 2]).unwrap();
        let verdict = classify_check(&d1);
        assert!(verdict.pass);
    }

    #[test]
    fn dual_swaps_sequences() {
        let pair = sl2_d2_pair();
        let params = parameter_array(&pair);
        let dual = pair.dual();
        let dual_params = parameter_array(&dual);
        assert_eq!(dual_params, params.dual());
        assert_eq!(dual_params.rho(), params.rho());
        // involution
        let back = parameter_array(&dual.dual());
        assert_eq!(back, params);
    }

    #[test]
    fn affine_transforms_array() {
        let ctx = FieldContext::rationals();
        let pair = sl2_d2_pair();
        let w = AffineWitness {
            p: ctx.int(1),
            q_scale: ctx.int(7),
            r: ctx.int(2),
            s: ctx.int(-1),
        };
        let image = affine(&pair, &w).unwrap();
        let params = parameter_array(&image);
        assert_eq!(params.theta(), &ints(&ctx, &[5, 7, 9]));
        assert_eq!(params.theta_star(), &ints(&ctx, &[3, -1, -5]));
        assert_eq!(params.rho(), &[1, 1, 1]);
        // identity witness is the identity
        let same = affine(&pair, &AffineWitness::identity(ctx.kind())).unwrap();
        assert_eq!(same.a(), pair.a());
        assert_eq!(same.a_star(), pair.a_star());
        // zero scale rejected
        let bad = AffineWitness { p: ctx.zero(), ..w };
        assert!(matches!(affine(&pair, &bad), Err(PairError::ZeroScale)));
    }
}
