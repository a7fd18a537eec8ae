//! Eigenvalue closed forms and reduction to the canonical pair whose
//! eigenvalue sequences are {2i-d}/{d-2i} (base 1) or
//! {q^(d-2i)}/{q^(2i-d)} (base q^-2).

use crate::field::Scalar;
use crate::pair::params::{affine, AffineWitness, ParameterArray};
use crate::pair::{base, parameter_array, BidiagonalPair, PairError};

/// Closed form of the eigenvalue sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenvalueForm {
    /// theta_i = b1 + 2 b2 i, theta*_i = c1 - 2 c2 i.
    BaseOne { b1: Scalar, b2: Scalar, c1: Scalar, c2: Scalar },
    /// theta_i = b1 + b2 q^(-2i), theta*_i = c1 + c2 q^(2i), with
    /// q^(-2) = b.
    BaseQ { q: Scalar, b1: Scalar, b2: Scalar, c1: Scalar, c2: Scalar },
}

/// Fits the closed form to the full sequences (asserted exactly, not
/// just at the endpoints). For base b != 1 a square root of 1/b must
/// exist in the working field; the positive root is chosen.
pub fn eigenvalue_form(
    params: &ParameterArray,
    b: &Scalar,
) -> Result<EigenvalueForm, PairError> {
    let kind = params.theta()[0].kind();
    let d = params.diameter();
    let theta = params.theta();
    let ts = params.theta_star();
    let one = Scalar::one(kind);
    let two = Scalar::int(2, kind);
    if b.is_one() {
        let (b1, b2) = if d == 0 {
            (theta[0].clone(), one.clone())
        } else {
            let b2 = (&theta[1] - &theta[0]).div(&two)?;
            (theta[0].clone(), b2)
        };
        let (c1, c2) = if d == 0 {
            (ts[0].clone(), one.clone())
        } else {
            let c2 = (&ts[0] - &ts[1]).div(&two)?;
            (ts[0].clone(), c2)
        };
        if b2.is_zero() || c2.is_zero() {
            return Err(PairError::FitFailure("slope coefficient is zero".into()));
        }
        for i in 0..=d {
            let step = Scalar::int(2 * i as i64, kind);
            if theta[i] != &b1 + &(&b2 * &step) {
                return Err(PairError::FitFailure(format!("theta[{i}] off the line")));
            }
            if ts[i] != &c1 - &(&c2 * &step) {
                return Err(PairError::FitFailure(format!("theta*[{i}] off the line")));
            }
        }
        Ok(EigenvalueForm::BaseOne { b1, b2, c1, c2 })
    } else {
        let q = b
            .inv()?
            .sqrt()
            .ok_or_else(|| PairError::NoSquareRoot { base: b.to_string() })?;
        let (b1, b2, c1, c2) = if d == 0 {
            (
                &theta[0] - &one,
                one.clone(),
                &ts[0] - &one,
                one.clone(),
            )
        } else {
            // theta_0 - theta_1 = b2 (1 - q^-2), theta*_1 - theta*_0 = c2 (q^2 - 1)
            let b2 = (&theta[0] - &theta[1]).div(&(&one - &q.pow(-2)?))?;
            let b1 = &theta[0] - &b2;
            let c2 = (&ts[1] - &ts[0]).div(&(&q.pow(2)? - &one))?;
            let c1 = &ts[0] - &c2;
            (b1, b2, c1, c2)
        };
        if b2.is_zero() || c2.is_zero() {
            return Err(PairError::FitFailure("geometric coefficient is zero".into()));
        }
        for i in 0..=d {
            let e = 2 * i as i64;
            if theta[i] != &b1 + &(&b2 * &q.pow(-e)?) {
                return Err(PairError::FitFailure(format!("theta[{i}] off the curve")));
            }
            if ts[i] != &c1 + &(&c2 * &q.pow(e)?) {
                return Err(PairError::FitFailure(format!("theta*[{i}] off the curve")));
            }
        }
        Ok(EigenvalueForm::BaseQ { q, b1, b2, c1, c2 })
    }
}

/// How a pair is reduced, if it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducedKind {
    No,
    /// Eigenvalues {2i-d}, dual {d-2i}.
    BaseOne,
    /// Eigenvalues {q^(d-2i)}, dual {q^(2i-d)} for this q.
    BaseQ(Scalar),
}

/// Classifies the eigenvalue pattern of a verified pair against the two
/// reduced shapes. For d = 0 the patterns are (0, 0) and (1, 1); the
/// latter needs a q in the context to name, matching the trivial module
/// of the quantum-group side.
pub fn reduced_kind(pair: &BidiagonalPair) -> ReducedKind {
    let ctx = pair.ctx();
    let kind = ctx.kind();
    let d = pair.diameter();
    let theta = pair.eig().eigenvalues();
    let ts = pair.eig_star().eigenvalues();

    let base_one = (0..=d).all(|i| {
        theta[i] == Scalar::int(2 * i as i64 - d as i64, kind)
            && ts[i] == Scalar::int(d as i64 - 2 * i as i64, kind)
    });
    if base_one {
        return ReducedKind::BaseOne;
    }

    if d == 0 {
        if theta[0].is_one() && ts[0].is_one() {
            if let Ok(q) = ctx.q_element() {
                return ReducedKind::BaseQ(q);
            }
        }
        return ReducedKind::No;
    }

    // candidate q from theta_0 / theta_1 = q^2, both signs
    if theta.iter().any(Scalar::is_zero) {
        return ReducedKind::No;
    }
    let Ok(sq) = theta[0].div(&theta[1]) else {
        return ReducedKind::No;
    };
    let Some(root) = sq.sqrt() else {
        return ReducedKind::No;
    };
    'sign: for q in [root.clone(), -&root] {
        if q.is_zero() || q.is_one() || (-&q).is_one() {
            continue;
        }
        for i in 0..=d {
            let e = d as i64 - 2 * i as i64;
            let Ok(pow) = q.pow(e) else { continue 'sign };
            let Ok(pow_inv) = q.pow(-e) else { continue 'sign };
            if theta[i] != pow || ts[i] != pow_inv {
                continue 'sign;
            }
        }
        return ReducedKind::BaseQ(q);
    }
    ReducedKind::No
}

pub fn is_reduced(pair: &BidiagonalPair) -> bool {
    reduced_kind(pair) != ReducedKind::No
}

/// Reduces a pair by the affine maps determined by its eigenvalue form,
/// returning the reduced pair and the witness mapping it back: applying
/// the witness to the reduced pair reproduces the input exactly. A pair
/// that is already reduced comes back unchanged with the identity
/// witness.
pub fn reduce(pair: &BidiagonalPair) -> Result<(BidiagonalPair, AffineWitness), PairError> {
    let kind = pair.ctx().kind();
    let d = pair.diameter() as i64;
    let b = base(pair)?;
    let params = parameter_array(pair);
    let form = eigenvalue_form(&params, &b)?;
    let (reducing, witness) = match &form {
        EigenvalueForm::BaseOne { b1, b2, c1, c2 } => {
            let b2_inv = b2.inv()?;
            let c2_inv = c2.inv()?;
            let dd = Scalar::int(d, kind);
            // sigma = b2^-1 x - b1 b2^-1 - d, tau = c2^-1 x - c1 c2^-1 + d
            let reducing = AffineWitness {
                p: b2_inv.clone(),
                q_scale: -&(&(b1 * &b2_inv) + &dd),
                r: c2_inv.clone(),
                s: &dd - &(c1 * &c2_inv),
            };
            let witness = AffineWitness {
                p: b2.clone(),
                q_scale: b1 + &(b2 * &dd),
                r: c2.clone(),
                s: c1 - &(c2 * &dd),
            };
            (reducing, witness)
        }
        EigenvalueForm::BaseQ { q, b1, b2, c1, c2 } => {
            let qd = q.pow(d)?;
            let qdi = q.pow(-d)?;
            // sigma' = b2^-1 q^d (x - b1), tau' = c2^-1 q^-d (x - c1)
            let p = &b2.inv()? * &qd;
            let r = &c2.inv()? * &qdi;
            let reducing = AffineWitness {
                q_scale: -&(&p * b1),
                s: -&(&r * c1),
                p,
                r,
            };
            let witness = AffineWitness {
                p: &qdi * b2,
                q_scale: b1.clone(),
                r: &qd * c2,
                s: c1.clone(),
            };
            (reducing, witness)
        }
    };
    let reduced = affine(pair, &reducing)?;
    assert!(is_reduced(&reduced), "reduction must land on a reduced pair");
    // round trip is exact
    let back = affine(&reduced, &witness)?;
    assert_eq!(back.a(), pair.a(), "witness must reproduce A");
    assert_eq!(back.a_star(), pair.a_star(), "witness must reproduce A*");
    Ok((reduced, witness))
}
