//! Exact-arithmetic toolkit for bidiagonal pairs.
//!
//! A bidiagonal pair is an ordered pair of diagonalizable linear
//! transformations on a finite-dimensional vector space, each acting on
//! the other's ordered eigenspaces by raising indices at most one step,
//! with prescribed commutator-power bijections between mirror eigenspaces.
//! This crate verifies the definition, extracts and classifies parameter
//! arrays, constructs pairs from sl2 and Uq(sl2) modules, reduces pairs to
//! canonical form, computes split decompositions and third operators, and
//! decides isomorphism constructively. All arithmetic is exact, over Q or
//! the rational-function field Q(q).

pub mod field;
pub mod json;
pub mod linalg;
pub mod modules;
pub mod pair;
