//! The irreducible Uq(sl2) module V(d, eps) on its weight basis:
//! k.v_i = eps q^(d-2i) v_i, f.v_i = [i+1] v_{i+1},
//! e.v_i = eps [d-i+1] v_{i-1}, with the equitable generators
//! x = k, y = k^-1 + f(q - q^-1), z = k^-1 - k^-1 e q (q - q^-1).

use super::{check_uq_module, ModuleError, ModuleMatrices, ModuleVariant};
use crate::field::{q_integer_of, Scalar};
use crate::linalg::Matrix;
use std::collections::BTreeMap;

pub fn uq_irreducible(d: usize, eps: i8, q: &Scalar) -> Result<ModuleMatrices, ModuleError> {
    assert!(eps == 1 || eps == -1, "type must be +1 or -1");
    let n = d + 1;
    let kind = q.kind();
    let ctx = match kind {
        crate::field::FieldKind::Rationals => crate::field::FieldContext::rationals(),
        crate::field::FieldKind::RationalFunctions => {
            crate::field::FieldContext::rational_functions()
        }
    };
    let sign = Scalar::int(eps as i64, kind);
    let mut k_diag = Vec::with_capacity(n);
    let mut k_inv_diag = Vec::with_capacity(n);
    for i in 0..n {
        let e = d as i64 - 2 * i as i64;
        k_diag.push(&sign * &q.pow(e)?);
        k_inv_diag.push(&sign * &q.pow(-e)?);
    }
    let k = Matrix::diagonal(&k_diag, &ctx);
    let k_inv = Matrix::diagonal(&k_inv_diag, &ctx);
    let mut f = Matrix::zero(n, n, &ctx);
    let mut e = Matrix::zero(n, n, &ctx);
    for i in 0..d {
        f.set(i + 1, i, q_integer_of(i as u32 + 1, q)?);
        e.set(i, i + 1, &sign * &q_integer_of((d - i) as u32, q)?);
    }
    let qi = q.pow(-1)?;
    let diff = q - &qi;
    let x = k.clone();
    let x_inv = k_inv.clone();
    let y = &k_inv + &f.scale(&diff);
    let z = &k_inv - &(&k_inv * &e).scale(&(q * &diff));
    let generators = BTreeMap::from([
        ("k".to_string(), k),
        ("k_inv".to_string(), k_inv),
        ("e".to_string(), e),
        ("f".to_string(), f),
    ]);
    let equitable = BTreeMap::from([
        ("x".to_string(), x),
        ("x_inv".to_string(), x_inv),
        ("y".to_string(), y),
        ("z".to_string(), z),
    ]);
    let m = ModuleMatrices {
        variant: ModuleVariant::UqSl2,
        dim: n,
        generators,
        equitable,
        q: Some(q.clone()),
    };
    check_uq_module(&m).expect("weight-basis matrices satisfy the relations");
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    #[test]
    fn d1_plus_matrices() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let qi = q.pow(-1).unwrap();
        let diff = &q - &qi;
        let m = uq_irreducible(1, 1, &q).unwrap();
        assert_eq!(*m.generator("k"), Matrix::diagonal(&[q.clone(), qi.clone()], &ctx));
        let y = Matrix::from_rows(
            vec![vec![qi.clone(), ctx.zero()], vec![diff.clone(), q.clone()]],
            &ctx,
        )
        .unwrap();
        assert_eq!(*m.equitable_generator("y"), y);
        let z = Matrix::from_rows(
            vec![vec![qi.clone(), -&diff], vec![ctx.zero(), q.clone()]],
            &ctx,
        )
        .unwrap();
        assert_eq!(*m.equitable_generator("z"), z);
    }

    #[test]
    fn d0_trivial() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let m = uq_irreducible(0, 1, &q).unwrap();
        assert!(m.generator("k").is_identity());
        assert!(m.equitable_generator("y").is_identity());
        assert!(m.equitable_generator("z").is_identity());
    }

    #[test]
    fn d2_ladder_coefficients() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let m = uq_irreducible(2, 1, &q).unwrap();
        let f = m.generator("f");
        // [1] = 1, [2] = q + q^-1
        assert!(f.at(1, 0).is_one());
        assert_eq!(*f.at(2, 1), &q + &q.pow(-1).unwrap());
    }

    #[test]
    fn negative_type_relations_hold() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let m = uq_irreducible(2, -1, &q).unwrap();
        // k carries the sign
        assert_eq!(*m.generator("k").at(0, 0), -&q.pow(2).unwrap());
    }

    #[test]
    fn numeric_q_module() {
        let ctx = FieldContext::rationals_with_q(crate::field::Rational::from_int(2)).unwrap();
        let q = ctx.q_element().unwrap();
        let m = uq_irreducible(2, 1, &q).unwrap();
        // [2] at q = 2 is 5/2
        assert_eq!(
            *m.generator("f").at(2, 1),
            Scalar::Rat(crate::field::Rational::new(5, 2))
        );
    }
}
