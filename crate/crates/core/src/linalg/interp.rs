//! Exact polynomial interpolation through distinct nodes (the unique
//! polynomial of degree < n through n points), via Newton's divided
//! differences.

use crate::field::Scalar;
use crate::linalg::{LinalgError, ScalarPoly};

pub fn interpolate(nodes: &[Scalar], values: &[Scalar]) -> Result<ScalarPoly, LinalgError> {
    assert_eq!(nodes.len(), values.len(), "node/value length mismatch");
    assert!(!nodes.is_empty(), "interpolation needs at least one point");
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[..i] {
            if a == b {
                return Err(LinalgError::DuplicateNodes);
            }
        }
    }
    let kind = nodes[0].kind();
    let n = nodes.len();
    // divided-difference table, updated in place
    let mut table: Vec<Scalar> = values.to_vec();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in 0..(n - level) {
            let num = &table[i + 1] - &table[i];
            let den = (&nodes[i + level] - &nodes[i]).inv().expect("nodes are distinct");
            table[i] = &num * &den;
        }
        coeffs.push(table[0].clone());
    }
    // Horner assembly: c0 + (x - x0)(c1 + (x - x1)(...))
    let mut p = ScalarPoly::constant(coeffs[n - 1].clone());
    for i in (0..n - 1).rev() {
        let linear = ScalarPoly::new(kind, vec![-&nodes[i], Scalar::one(kind)]);
        p = p.mul(&linear).add(&ScalarPoly::constant(coeffs[i].clone()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn s(ctx: &FieldContext, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| ctx.int(x)).collect()
    }

    #[test]
    fn relation_polynomial_nodes() {
        let ctx = FieldContext::rationals();
        // through (0,2), (-2,0): x + 2
        let g = interpolate(&s(&ctx, &[0, -2]), &s(&ctx, &[2, 0])).unwrap();
        assert_eq!(g, ScalarPoly::new(ctx.kind(), s(&ctx, &[2, 1])));
        // through (2,4), (0,0), (-2,-4): 2x
        let h = interpolate(&s(&ctx, &[2, 0, -2]), &s(&ctx, &[4, 0, -4])).unwrap();
        assert_eq!(h, ScalarPoly::new(ctx.kind(), s(&ctx, &[0, 2])));
    }

    #[test]
    fn single_node_constant() {
        let ctx = FieldContext::rationals();
        let p = interpolate(&s(&ctx, &[7]), &s(&ctx, &[3])).unwrap();
        assert_eq!(p, ScalarPoly::constant(ctx.int(3)));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let ctx = FieldContext::rationals();
        let r = interpolate(&s(&ctx, &[1, 1]), &s(&ctx, &[2, 2]));
        assert!(matches!(r, Err(LinalgError::DuplicateNodes)));
    }

    #[test]
    fn interpolates_exactly() {
        let ctx = FieldContext::rationals();
        let nodes = s(&ctx, &[-2, -1, 0, 1, 2]);
        let values = s(&ctx, &[7, -3, 1, 0, 5]);
        let p = interpolate(&nodes, &values).unwrap();
        assert!(p.degree().unwrap() <= 4);
        for (x, y) in nodes.iter().zip(&values) {
            assert_eq!(&p.eval(x), y);
        }
    }
}
