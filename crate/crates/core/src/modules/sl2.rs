//! The irreducible sl2 module of highest weight d on its weight basis:
//! h.v_i = (d-2i) v_i, f.v_i = (i+1) v_{i+1}, e.v_i = (d-i+1) v_{i-1},
//! with the equitable basis X = 2e - h, Y = -2f - h, Z = h.

use super::{check_sl2_module, ModuleMatrices, ModuleVariant};
use crate::field::FieldContext;
use crate::linalg::Matrix;
use std::collections::BTreeMap;

pub fn sl2_irreducible(d: usize, ctx: &FieldContext) -> ModuleMatrices {
    let n = d + 1;
    let h = Matrix::from_fn(n, n, ctx, |i, j| {
        if i == j {
            ctx.int(d as i64 - 2 * i as i64)
        } else {
            ctx.zero()
        }
    });
    let f = Matrix::from_fn(n, n, ctx, |i, j| {
        if i == j + 1 {
            ctx.int(i as i64)
        } else {
            ctx.zero()
        }
    });
    let e = Matrix::from_fn(n, n, ctx, |i, j| {
        if j == i + 1 {
            ctx.int(d as i64 - i as i64)
        } else {
            ctx.zero()
        }
    });
    let two = ctx.int(2);
    let x = &e.scale(&two) - &h;
    let y = &f.scale(&-&two) - &h;
    let z = h.clone();
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
    let m = ModuleMatrices {
        variant: ModuleVariant::Sl2,
        dim: n,
        generators,
        equitable,
        q: None,
    };
    check_sl2_module(&m).expect("weight-basis matrices satisfy the relations");
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    #[test]
    fn d2_matrices() {
        let ctx = FieldContext::rationals();
        let m = sl2_irreducible(2, &ctx);
        assert_eq!(
            *m.generator("h"),
            Matrix::diagonal(&[ctx.int(2), ctx.int(0), ctx.int(-2)], &ctx)
        );
        // f: v0 -> v1, v1 -> 2 v2
        assert_eq!(
            *m.generator("f"),
            Matrix::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]], &ctx)
        );
        // e: v1 -> 2 v0, v2 -> v1
        assert_eq!(
            *m.generator("e"),
            Matrix::from_int_rows(&[&[0, 2, 0], &[0, 0, 1], &[0, 0, 0]], &ctx)
        );
        // Y matches the lower-bidiagonal action (2i-d, -2(i+1))
        assert_eq!(
            *m.equitable_generator("Y"),
            Matrix::from_int_rows(&[&[-2, 0, 0], &[-2, 0, 0], &[0, -4, 2]], &ctx)
        );
    }

    #[test]
    fn d0_trivial() {
        let ctx = FieldContext::rationals();
        let m = sl2_irreducible(0, &ctx);
        assert!(m.generator("h").is_zero());
        assert!(m.equitable_generator("X").is_zero());
        assert!(m.equitable_generator("Y").is_zero());
        assert!(m.equitable_generator("Z").is_zero());
    }

    #[test]
    fn d1_equitable_x() {
        let ctx = FieldContext::rationals();
        let m = sl2_irreducible(1, &ctx);
        assert_eq!(
            *m.equitable_generator("X"),
            Matrix::from_int_rows(&[&[-1, 2], &[0, 1]], &ctx)
        );
    }
}
