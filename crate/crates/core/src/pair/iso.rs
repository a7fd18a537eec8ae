//! Constructive isomorphism testing: two pairs are isomorphic exactly
//! when their parameter arrays agree, and then an intertwiner is built
//! from the commutator ladders over the highest spaces.

use crate::linalg::{invert, Matrix};
use crate::pair::spaces::{commutator_powers, highest_spaces};
use crate::pair::{parameter_array, BidiagonalPair, PairError};

/// Returns an invertible mu with mu A = B mu and mu A* = B* mu, or
/// `None` when the parameter arrays differ. Both identities and
/// invertibility are asserted before returning.
pub fn isomorphism(
    p: &BidiagonalPair,
    q: &BidiagonalPair,
) -> Result<Option<Matrix>, PairError> {
    if p.ctx() != q.ctx() {
        return Err(crate::linalg::LinalgError::MixedFieldContexts.into());
    }
    if parameter_array(p) != parameter_array(q) {
        return Ok(None);
    }
    let vp = ladder_basis(p)?;
    let vq = ladder_basis(q)?;
    let vp_inv = invert(&vp).expect("ladder spans the space");
    let mu = &vq * &vp_inv;
    assert!(invert(&mu).is_some(), "intertwiner must be invertible");
    assert_eq!(&(&mu * p.a()), &(q.a() * &mu), "mu A = B mu");
    assert_eq!(&(&mu * p.a_star()), &(q.a_star() * &mu), "mu A* = B* mu");
    Ok(Some(mu))
}

/// Basis v_{i,j,k} = [A,A*]^k v_{i,j}, where the v_{i,j} run over the
/// canonical bases of the highest spaces H_i. Columns are grouped by i,
/// then by power k, then by j, identically for every pair, so matching
/// columns across two pairs with equal parameter arrays intertwine.
fn ladder_basis(pair: &BidiagonalPair) -> Result<Matrix, PairError> {
    let d = pair.diameter();
    let (h_chain, _) = highest_spaces(pair)?;
    let powers = commutator_powers(&pair.commutator(), d);
    let mut columns: Option<Matrix> = None;
    for (i, h) in h_chain.spaces.iter().enumerate() {
        if h.is_zero() {
            continue;
        }
        for k in 0..=(d - 2 * i) {
            let block = &powers[k] * h.basis();
            columns = Some(match columns {
                None => block,
                Some(acc) => acc.hstack(&block),
            });
        }
    }
    let m = columns.expect("highest spaces are nonempty");
    assert_eq!(m.cols(), pair.dim(), "ladder basis must be square");
    Ok(m)
}
