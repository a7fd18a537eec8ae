//! Explicit matrix models of finite-dimensional sl2 and Uq(sl2) modules
//! on the weight basis, equitable generators, segregation analysis, and
//! the bridges between parameter arrays and bidiagonal pairs.

mod assemble;
mod bridge;
mod omega;
mod sl2;
mod uq;

pub use assemble::{direct_sum, module_from_shape, SegregationReport};
pub use bridge::{module_from_reduced_pair, pair_from_parameter_array};
pub use omega::solve_cycling_operator;
pub use sl2::sl2_irreducible;
pub use uq::uq_irreducible;

use crate::field::{FieldError, Scalar};
use crate::linalg::{LinalgError, Matrix};
use crate::pair::{ClassifyVerdict, PairError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("shape is not admissible: {0}")]
    ShapeInvalid(String),
    #[error("parameter array fails classification: {0}")]
    ClassificationFailed(String),
    #[error("no invertible solution of the cycling system")]
    NoInvertibleSolution,
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl ModuleError {
    pub fn classification(verdict: &ClassifyVerdict) -> ModuleError {
        let failed: Vec<&str> = verdict
            .clauses
            .iter()
            .filter(|c| c.status == crate::pair::ClauseStatus::Fail)
            .map(|c| c.clause.id())
            .collect();
        ModuleError::ClassificationFailed(failed.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleVariant {
    Sl2,
    UqSl2,
}

/// One isotypic block: the irreducible of highest weight `d` with a
/// multiplicity, and (for the quantum case) the sign of the type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub d: usize,
    pub multiplicity: usize,
    pub eps: i8,
}

/// A module presented as a multiset of irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub variant: ModuleVariant,
    pub summands: Vec<Summand>,
}

impl ModuleSpec {
    pub fn dimension(&self) -> usize {
        self.summands.iter().map(|s| (s.d + 1) * s.multiplicity).sum()
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        if self.summands.is_empty() {
            return Err(ModuleError::ShapeInvalid("no summands".into()));
        }
        for s in &self.summands {
            if s.multiplicity == 0 {
                return Err(ModuleError::ShapeInvalid(format!(
                    "summand of weight {} has multiplicity zero",
                    s.d
                )));
            }
            if s.eps != 1 && s.eps != -1 {
                return Err(ModuleError::ShapeInvalid(format!(
                    "summand of weight {} has type {}, expected +1 or -1",
                    s.d, s.eps
                )));
            }
        }
        Ok(())
    }
}

/// Generator and equitable-generator matrices of a concrete module, in
/// the weight basis (direct sums concatenate summand bases in order).
#[derive(Debug, Clone)]
pub struct ModuleMatrices {
    pub variant: ModuleVariant,
    pub dim: usize,
    /// h, e, f for sl2; k, k_inv, e, f for Uq(sl2).
    pub generators: BTreeMap<String, Matrix>,
    /// X, Y, Z for sl2; x, x_inv, y, z for Uq(sl2).
    pub equitable: BTreeMap<String, Matrix>,
    /// The deformation parameter, for the quantum case.
    pub q: Option<Scalar>,
}

impl ModuleMatrices {
    pub fn generator(&self, name: &str) -> &Matrix {
        self.generators
            .get(name)
            .unwrap_or_else(|| panic!("no generator named {name}"))
    }

    pub fn equitable_generator(&self, name: &str) -> &Matrix {
        self.equitable
            .get(name)
            .unwrap_or_else(|| panic!("no equitable generator named {name}"))
    }
}

/// Verifies the defining and equitable relations of an sl2 module:
/// [h,e] = 2e, [h,f] = -2f, [e,f] = h, [X,Y] = 2X + 2Y and cyclically.
pub fn check_sl2_module(m: &ModuleMatrices) -> Result<(), String> {
    let h = m.generator("h");
    let e = m.generator("e");
    let f = m.generator("f");
    let two = Scalar::int(2, h.ctx().kind());
    if h.commutator(e) != e.scale(&two) {
        return Err("[h,e] != 2e".into());
    }
    if h.commutator(f) != f.scale(&-&two) {
        return Err("[h,f] != -2f".into());
    }
    if &e.commutator(f) != h {
        return Err("[e,f] != h".into());
    }
    let x = m.equitable_generator("X");
    let y = m.equitable_generator("Y");
    let z = m.equitable_generator("Z");
    for (name, u, v) in [("XY", x, y), ("YZ", y, z), ("ZX", z, x)] {
        if u.commutator(v) != &u.scale(&two) + &v.scale(&two) {
            return Err(format!("equitable relation fails for {name}"));
        }
    }
    Ok(())
}

/// Verifies the defining and equitable relations of a Uq(sl2) module:
/// k k^-1 = 1, k e = q^2 e k, k f = q^-2 f k,
/// e f - f e = (k - k^-1)/(q - q^-1), and the three q-Weyl identities
/// of the equitable generators.
pub fn check_uq_module(m: &ModuleMatrices) -> Result<(), String> {
    let q = m.q.as_ref().ok_or("missing q")?;
    let k = m.generator("k");
    let k_inv = m.generator("k_inv");
    let e = m.generator("e");
    let f = m.generator("f");
    if !(k * k_inv).is_identity() || !(k_inv * k).is_identity() {
        return Err("k k^-1 != 1".into());
    }
    let q2 = q.pow(2).map_err(|e| e.to_string())?;
    let qm2 = q.pow(-2).map_err(|e| e.to_string())?;
    if k * e != (e * k).scale(&q2) {
        return Err("k e != q^2 e k".into());
    }
    if k * f != (f * k).scale(&qm2) {
        return Err("k f != q^-2 f k".into());
    }
    let qi = q.pow(-1).map_err(|e| e.to_string())?;
    let diff_inv = (q - &qi).inv().map_err(|e| e.to_string())?;
    if e.commutator(f) != (&(k - k_inv)).scale(&diff_inv) {
        return Err("[e,f] != (k - k^-1)/(q - q^-1)".into());
    }
    let x = m.equitable_generator("x");
    let x_inv = m.equitable_generator("x_inv");
    let y = m.equitable_generator("y");
    let z = m.equitable_generator("z");
    if !(x * x_inv).is_identity() || !(x_inv * x).is_identity() {
        return Err("x x^-1 != 1".into());
    }
    let one = Scalar::one(q.kind());
    for (name, u, v) in [("xy", x, y), ("yz", y, z), ("zx", z, x)] {
        let weyl = (&(u * v).scale(q) - &(v * u).scale(&qi)).scale(&diff_inv);
        if !weyl.affine(&one, &-&one).is_zero() {
            return Err(format!("q-Weyl relation fails for {name}"));
        }
    }
    Ok(())
}
