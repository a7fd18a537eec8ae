//! The third operator completing a reduced pair to an equitable triple:
//! diagonalizable on the split decomposition with eigenvalues 2i-d
//! (base 1) or q^(d-2i) (base q^-2), satisfying the three equitable
//! relations and the four triple-bidiagonality inclusions.

use crate::field::Scalar;
use crate::linalg::{invert, kernel, Matrix, Subspace};
use crate::pair::{reduced_kind, split_subspaces, BidiagonalPair, PairError, ReducedKind};

/// Builds the third operator of a reduced pair and asserts the
/// equitable relations and the bidiagonal inclusions exactly.
pub fn third_operator(pair: &BidiagonalPair) -> Result<Matrix, PairError> {
    match reduced_kind(pair) {
        ReducedKind::No => Err(PairError::NotReduced),
        kind => build(pair, &kind),
    }
}

fn build(pair: &BidiagonalPair, kind: &ReducedKind) -> Result<Matrix, PairError> {
    let d = pair.diameter();
    let ctx = pair.ctx();
    let w = split_subspaces(pair)?;
    let mut frame = w.spaces[0].basis().clone();
    let mut diag: Vec<Scalar> = Vec::new();
    for (i, space) in w.spaces.iter().enumerate() {
        if i > 0 {
            frame = frame.hstack(space.basis());
        }
        let value = match kind {
            ReducedKind::BaseOne => ctx.int(2 * i as i64 - d as i64),
            ReducedKind::BaseQ(q) => q.pow(d as i64 - 2 * i as i64)?,
            ReducedKind::No => unreachable!(),
        };
        for _ in 0..space.dim() {
            diag.push(value.clone());
        }
    }
    let frame_inv = invert(&frame).expect("split decomposition is a direct sum");
    let b = &(&frame * &Matrix::diagonal(&diag, ctx)) * &frame_inv;

    let a = pair.a();
    let astar = pair.a_star();
    match kind {
        ReducedKind::BaseOne => {
            assert!(equitable_residual_base_one(a, astar).is_zero(), "[A,A*] = 2A + 2A*");
            assert!(equitable_residual_base_one(astar, &b).is_zero(), "[A*,B] = 2A* + 2B");
            assert!(equitable_residual_base_one(&b, a).is_zero(), "[B,A] = 2B + 2A");
        }
        ReducedKind::BaseQ(q) => {
            assert!(equitable_residual_base_q(a, astar, q)?.is_zero(), "q-Weyl for (A, A*)");
            assert!(equitable_residual_base_q(astar, &b, q)?.is_zero(), "q-Weyl for (A*, B)");
            assert!(equitable_residual_base_q(&b, a, q)?.is_zero(), "q-Weyl for (B, A)");
        }
        ReducedKind::No => unreachable!(),
    }

    // triple bidiagonality: A and A* act bidiagonally on the W chain,
    // B acts bidiagonally on both eigenspace chains
    let zero = Subspace::zero_space(pair.dim(), ctx);
    for i in 0..=d {
        let up = w.spaces.get(i + 1).unwrap_or(&zero);
        let down = if i == 0 { &zero } else { &w.spaces[i - 1] };
        assert!(
            maps_into(a, &w.spaces[i], &w.spaces[i].sum(up)?),
            "A W_{i} within W_{i} + W_{}", i + 1
        );
        assert!(
            maps_into(astar, &w.spaces[i], &down.sum(&w.spaces[i])?),
            "A* W_{i} within W_{} + W_{i}", i as i64 - 1
        );
        let v = pair.eig().eigenspaces();
        let vdown = if i == 0 { &zero } else { &v[i - 1] };
        assert!(
            maps_into(&b, &v[i], &vdown.sum(&v[i])?),
            "B V_{i} within V_{} + V_{i}", i as i64 - 1
        );
        let vs = pair.eig_star().eigenspaces();
        let vsdown = if i == 0 { &zero } else { &vs[i - 1] };
        assert!(
            maps_into(&b, &vs[i], &vsdown.sum(&vs[i])?),
            "B V*_{i} within V*_{} + V*_{i}", i as i64 - 1
        );
    }
    Ok(b)
}

/// X Y - Y X - 2X - 2Y.
fn equitable_residual_base_one(x: &Matrix, y: &Matrix) -> Matrix {
    let two = Scalar::int(2, x.ctx().kind());
    let mut res = x.commutator(y);
    res = &res - &x.scale(&two);
    &res - &y.scale(&two)
}

/// (q X Y - q^-1 Y X) / (q - q^-1) - I.
fn equitable_residual_base_q(x: &Matrix, y: &Matrix, q: &Scalar) -> Result<Matrix, PairError> {
    let qi = q.pow(-1)?;
    let diff_inv = (q - &qi).inv()?;
    let lhs = &(x * y).scale(q) - &(y * x).scale(&qi);
    Ok(lhs.scale(&diff_inv).affine(&Scalar::one(x.ctx().kind()), &-&Scalar::one(x.ctx().kind())))
}

fn maps_into(m: &Matrix, from: &Subspace, target: &Subspace) -> bool {
    let image = m * from.basis();
    target.contains(&Subspace::from_span(&image)).unwrap_or(false)
}

/// Dimension of the solution space of the homogeneous third-operator
/// system: matrices M with
///   M A - A M - 2M = 0 and A* M - M A* - 2M = 0          (base 1), or
///   q M A - q^-1 A M = 0 and q A* M - q^-1 M A* = 0      (base q^-2).
/// Zero means the inhomogeneous system pinning down the third operator
/// has exactly one solution. The first equation confines M, in the
/// eigencoordinates of A, to the blocks (j, k) with theta_k = theta_j + 2
/// (resp. theta_k = q^-2 theta_j); the second is solved there.
pub fn third_operator_kernel_dim(pair: &BidiagonalPair) -> Result<usize, PairError> {
    let kind = reduced_kind(pair);
    if kind == ReducedKind::No {
        return Err(PairError::NotReduced);
    }
    let d = pair.diameter();
    let eig = pair.eig();
    let theta = eig.eigenvalues();
    let n = pair.dim();
    let ctx = pair.ctx();

    // blocks allowed by the first equation
    let mut allowed: Vec<(usize, usize)> = Vec::new();
    for j in 0..=d {
        for k in 0..=d {
            let ok = match &kind {
                ReducedKind::BaseOne => theta[k] == &theta[j] + &Scalar::int(2, ctx.kind()),
                ReducedKind::BaseQ(q) => &theta[k] * &q.pow(2)? == theta[j],
                ReducedKind::No => unreachable!(),
            };
            if ok {
                allowed.push((j, k));
            }
        }
    }

    // unknown entries range over the allowed blocks in eigencoordinates
    let mut positions: Vec<(usize, usize)> = Vec::new();
    for &(j, k) in &allowed {
        for r in eig.block(j) {
            for c in eig.block(k) {
                positions.push((r, c));
            }
        }
    }
    if positions.is_empty() {
        return Ok(0);
    }

    // second equation applied to each unknown direction M = S E_(r,c) S^-1
    let g = eig.coordinates_of(pair.a_star());
    let mut columns: Vec<Matrix> = Vec::new();
    for &(r, c) in &positions {
        let mut e = Matrix::zero(n, n, ctx);
        e.set(r, c, ctx.one());
        let residual = match &kind {
            ReducedKind::BaseOne => {
                let two = Scalar::int(2, ctx.kind());
                &g.commutator(&e) - &e.scale(&two)
            }
            ReducedKind::BaseQ(q) => {
                let qi = q.pow(-1)?;
                &(&g * &e).scale(q) - &(&e * &g).scale(&qi)
            }
            ReducedKind::No => unreachable!(),
        };
        columns.push(residual.vectorize());
    }
    let mut system = columns[0].clone();
    for col in &columns[1..] {
        system = system.hstack(col);
    }
    Ok(kernel(&system).cols())
}
