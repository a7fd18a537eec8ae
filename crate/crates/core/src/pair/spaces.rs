//! The split decomposition W_i and the highest spaces H_i, H*_i.

use crate::linalg::{Matrix, Subspace};
use crate::pair::{BidiagonalPair, PairError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainLabel {
    SplitW,
    HighestH,
    HighestHStar,
}

#[derive(Clone)]
pub struct SubspaceChain {
    pub label: ChainLabel,
    pub spaces: Vec<Subspace>,
}

/// W_i = (V*_0 + ... + V*_i) cap (V_0 + ... + V_{d-i}). The result is a
/// decomposition of the whole space refining the dual eigenspace
/// filtration: dim W_i = dim V*_i and W_0 + ... + W_i = V*_0 + ... + V*_i.
/// All of that is asserted here.
pub fn split_subspaces(pair: &BidiagonalPair) -> Result<SubspaceChain, PairError> {
    let d = pair.diameter();
    let n = pair.dim();
    let star_prefix = prefixes(pair.eig_star().eigenspaces());
    let plain_prefix = prefixes(pair.eig().eigenspaces());
    let mut spaces = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let w = star_prefix[i].intersect(&plain_prefix[d - i])?;
        assert!(!w.is_zero(), "W_{i} must be nonzero");
        spaces.push(w);
    }
    // decomposition: dimensions add up and the sum is everything
    let dims: usize = spaces.iter().map(Subspace::dim).sum();
    assert_eq!(dims, n, "W spaces must fill the space directly");
    let total = Subspace::sum_of(&spaces);
    assert_eq!(total.dim(), n, "W spaces must span");
    // dim W_i = dim V*_i and prefix sums agree
    let mut running = spaces[0].clone();
    for i in 0..=d {
        assert_eq!(
            spaces[i].dim(),
            pair.eig_star().eigenspaces()[i].dim(),
            "dim W_{i} = dim V*_{i}"
        );
        if i > 0 {
            running = running.sum(&spaces[i])?;
        }
        assert_eq!(running, star_prefix[i], "W prefix sum at {i}");
    }
    Ok(SubspaceChain { label: ChainLabel::SplitW, spaces })
}

/// H_i: the part of V_i killed by the (d-2i+1)-st commutator power, for
/// 0 <= i <= d/2, and dually H*_i inside V*_i. Their dimensions are the
/// shape increments rho_i - rho_{i-1}, and the commutator ladder rebuilds
/// each eigenspace: V_i = sum_j [A,A*]^(i-j) H_j (direct). Asserted.
pub fn highest_spaces(
    pair: &BidiagonalPair,
) -> Result<(SubspaceChain, SubspaceChain), PairError> {
    let comm = pair.commutator();
    let h = highest_chain(pair, &comm, pair.eig().eigenspaces(), ChainLabel::HighestH)?;
    let h_star = highest_chain(
        pair,
        &comm,
        pair.eig_star().eigenspaces(),
        ChainLabel::HighestHStar,
    )?;
    Ok((h, h_star))
}

fn highest_chain(
    pair: &BidiagonalPair,
    comm: &Matrix,
    eigenspaces: &[Subspace],
    label: ChainLabel,
) -> Result<SubspaceChain, PairError> {
    let d = pair.diameter();
    let rho = pair.shape();
    let powers = commutator_powers(comm, d + 1);
    let mut spaces = Vec::new();
    for i in 0..=d / 2 {
        let annihilator = &powers[d - 2 * i + 1];
        let space = kernel_within(annihilator, &eigenspaces[i]);
        let expected = rho[i] - if i == 0 { 0 } else { rho[i - 1] };
        assert_eq!(space.dim(), expected, "dim H_{i} = rho_{i} - rho_{}", i as i64 - 1);
        spaces.push(space);
    }
    // ladder refinement of every eigenspace
    for i in 0..=d {
        let top = i.min(d - i);
        let mut pieces = Vec::new();
        let mut dim_sum = 0;
        for (j, h) in spaces.iter().enumerate().take(top + 1) {
            if h.is_zero() {
                continue;
            }
            let image = &powers[i - j] * h.basis();
            let piece = Subspace::from_span(&image);
            dim_sum += piece.dim();
            pieces.push(piece);
        }
        let joined = Subspace::sum_of(&pieces);
        assert_eq!(joined, eigenspaces[i], "ladder must rebuild eigenspace {i}");
        assert_eq!(joined.dim(), dim_sum, "ladder sum at {i} must be direct");
    }
    Ok(SubspaceChain { label, spaces })
}

/// The subspace {v in within : m v = 0}.
pub(crate) fn kernel_within(m: &Matrix, within: &Subspace) -> Subspace {
    if within.is_zero() {
        return within.clone();
    }
    let image = m * within.basis();
    let coeffs = crate::linalg::kernel(&image);
    Subspace::from_span(&(within.basis() * &coeffs))
}

pub(crate) fn commutator_powers(comm: &Matrix, up_to: usize) -> Vec<Matrix> {
    let mut powers = Vec::with_capacity(up_to + 1);
    powers.push(Matrix::identity(comm.rows(), comm.ctx()));
    for j in 1..=up_to {
        powers.push(&powers[j - 1] * comm);
    }
    powers
}

fn prefixes(spaces: &[Subspace]) -> Vec<Subspace> {
    let mut out = Vec::with_capacity(spaces.len());
    let mut acc = spaces[0].clone();
    out.push(acc.clone());
    for s in &spaces[1..] {
        acc = acc.sum(s).expect("eigenspaces share an ambient space");
        out.push(acc.clone());
    }
    out
}
