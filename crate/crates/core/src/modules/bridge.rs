//! The two bridges between parameter arrays and module theory: building
//! a bidiagonal pair with a prescribed parameter array from the
//! equitable pair acting on a segregated module, and recovering the
//! module structure carried by a reduced pair.

use super::assemble::segregation;
use super::{
    check_sl2_module, check_uq_module, direct_sum, module_from_shape, ModuleError,
    ModuleMatrices, ModuleSpec, ModuleVariant,
};
use crate::field::{FieldContext, Scalar};
use crate::linalg::invert;
use crate::pair::{
    classify_check, eigenvalue_form, parameter_array, reduced_kind, third_operator,
    verify, BidiagonalPair, EigenvalueForm, PairError, ParameterArray, ReducedKind,
};
use std::collections::BTreeMap;

/// Builds a bidiagonal pair with the given parameter array: the shape
/// determines a segregated module, the equitable pair (Y, Z) or (y, z)
/// acts on it as a reduced bidiagonal pair, and the eigenvalue closed
/// form supplies the affine maps. The result is verified and its
/// parameter array is asserted to reproduce the input exactly.
pub fn pair_from_parameter_array(
    params: &ParameterArray,
    ctx: &FieldContext,
) -> Result<BidiagonalPair, ModuleError> {
    let verdict = classify_check(params);
    if !verdict.pass {
        return Err(ModuleError::classification(&verdict));
    }
    let b = verdict.base.expect("base accompanies a passing verdict");
    let d = params.diameter();
    let form = eigenvalue_form(params, &b).map_err(ModuleError::Pair)?;

    let (a, a_star) = match &form {
        EigenvalueForm::BaseOne { b1, b2, c1, c2 } => {
            let spec = module_from_shape(d, params.rho(), ModuleVariant::Sl2)?;
            let (mm, seg) = direct_sum(&spec, ctx)?;
            assert!(seg.segregated, "shape construction is segregated");
            let dd = Scalar::int(d as i64, ctx.kind());
            // A = b2 Y + (b2 d + b1) I, A* = c2 Z + (c1 - c2 d) I
            let a = mm.equitable_generator("Y").affine(b2, &(&(b2 * &dd) + b1));
            let a_star = mm.equitable_generator("Z").affine(c2, &(c1 - &(c2 * &dd)));
            (a, a_star)
        }
        EigenvalueForm::BaseQ { q, b1, b2, c1, c2 } => {
            let spec = module_from_shape(d, params.rho(), ModuleVariant::UqSl2)?;
            let blocks = super::assemble::assemble_blocks(&spec, ctx, Some(q))?;
            assert!(segregation(&spec).segregated, "shape construction is segregated");
            let qd = q.pow(d as i64).map_err(PairError::Field)?;
            let qdi = q.pow(-(d as i64)).map_err(PairError::Field)?;
            // A = q^-d b2 y + b1 I, A* = q^d c2 z + c1 I
            let a = blocks.equitable_generator("y").affine(&(&qdi * b2), b1);
            let a_star = blocks.equitable_generator("z").affine(&(&qd * c2), c1);
            (a, a_star)
        }
    };

    let outcome = verify(&a, &a_star, Some((params.theta(), params.theta_star())))
        .map_err(ModuleError::Pair)?;
    let pair = outcome.pair.unwrap_or_else(|| {
        panic!(
            "constructed pair must verify; failures: {:?}",
            outcome.report.failures
        )
    });
    assert_eq!(
        &parameter_array(&pair),
        params,
        "constructed pair must reproduce the parameter array"
    );
    Ok(pair)
}

/// Recovers the module structure carried by a reduced pair: Y = A,
/// Z = A* (resp. y = A, z = A*), the third operator completes the
/// equitable triple, and the classical generators come back through the
/// inverse of the equitable isomorphism. All defining relations are
/// asserted, and the multiset of irreducibles is read off the shape.
pub fn module_from_reduced_pair(
    pair: &BidiagonalPair,
) -> Result<(ModuleMatrices, ModuleSpec), ModuleError> {
    let d = pair.diameter();
    let rho = pair.shape();
    let n = pair.dim();
    let ctx = pair.ctx();
    match reduced_kind(pair) {
        ReducedKind::No => Err(ModuleError::Pair(PairError::NotReduced)),
        ReducedKind::BaseOne => {
            let x = third_operator(pair)?;
            let y = pair.a().clone();
            let z = pair.a_star().clone();
            // e = (X + Z)/2, f = -(Y + Z)/2, h = Z
            let half = Scalar::int(2, ctx.kind()).inv().map_err(PairError::Field)?;
            let e = (&x + &z).scale(&half);
            let f = (&y + &z).scale(&-&half);
            let h = z.clone();
            let generators = BTreeMap::from([
                ("h".to_string(), h),
                ("e".to_string(), e),
                ("f".to_string(), f),
            ]);
            let equitable = BTreeMap::from([
                ("X".to_string(), x),
                ("Y".to_string(), y),
                ("Z".to_string(), z),
            ]);
            let mm = ModuleMatrices {
                variant: ModuleVariant::Sl2,
                dim: n,
                generators,
                equitable,
                q: None,
            };
            check_sl2_module(&mm).expect("recovered sl2 structure satisfies the relations");
            finish_recovery(pair, mm, ModuleVariant::Sl2, d, &rho)
        }
        ReducedKind::BaseQ(q) => {
            let x = third_operator(pair)?;
            let x_inv = invert(&x).expect("third operator has nonzero eigenvalues");
            let y = pair.a().clone();
            let z = pair.a_star().clone();
            // The printed inverse of the equitable isomorphism must be
            // read with the scalar factors inverted; the defining
            // relations pin it down:
            //   f = (y - x^-1) / (q - q^-1),
            //   e = (1 - x z) q^-1 / (q - q^-1).
            let qi = q.pow(-1).map_err(PairError::Field)?;
            let diff_inv = (&q - &qi).inv().map_err(PairError::Field)?;
            let f = (&y - &x_inv).scale(&diff_inv);
            let one = Scalar::one(ctx.kind());
            let e = (&x * &z)
                .affine(&-&one, &one)
                .scale(&(&qi * &diff_inv));
            let generators = BTreeMap::from([
                ("k".to_string(), x.clone()),
                ("k_inv".to_string(), x_inv.clone()),
                ("e".to_string(), e),
                ("f".to_string(), f),
            ]);
            let equitable = BTreeMap::from([
                ("x".to_string(), x),
                ("x_inv".to_string(), x_inv),
                ("y".to_string(), y),
                ("z".to_string(), z),
            ]);
            let mm = ModuleMatrices {
                variant: ModuleVariant::UqSl2,
                dim: n,
                generators,
                equitable,
                q: Some(q),
            };
            check_uq_module(&mm).expect("recovered Uq structure satisfies the relations");
            finish_recovery(pair, mm, ModuleVariant::UqSl2, d, &rho)
        }
    }
}

fn finish_recovery(
    pair: &BidiagonalPair,
    mm: ModuleMatrices,
    variant: ModuleVariant,
    d: usize,
    rho: &[usize],
) -> Result<(ModuleMatrices, ModuleSpec), ModuleError> {
    let spec = module_from_shape(d, rho, variant)?;
    assert_eq!(spec.dimension(), pair.dim(), "module dimension matches");
    assert!(segregation(&spec).segregated, "recovered module is segregated");
    // the equitable pair of the recovered structure is (A, A*) itself
    let (gy, gz) = match variant {
        ModuleVariant::Sl2 => (mm.equitable_generator("Y"), mm.equitable_generator("Z")),
        ModuleVariant::UqSl2 => (mm.equitable_generator("y"), mm.equitable_generator("z")),
    };
    assert_eq!(gy, pair.a(), "equitable partner Y equals A");
    assert_eq!(gz, pair.a_star(), "equitable partner Z equals A*");
    Ok((mm, spec))
}
