//! Direct sums of irreducibles, the segregation report, and the unique
//! segregated module with a prescribed weight-space shape.

use super::{
    sl2_irreducible, uq_irreducible, ModuleError, ModuleMatrices, ModuleSpec, ModuleVariant,
    Summand,
};
use crate::field::FieldContext;
use crate::linalg::Matrix;
use std::collections::BTreeMap;

/// Dimensions of the four sign/parity components of the weight structure
/// (the sign components are trivial for sl2), and the segregation
/// verdict: a module is segregated when it is all even of type +1 or all
/// odd of type +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegregationReport {
    pub segregated: bool,
    pub even_plus: usize,
    pub odd_plus: usize,
    pub even_minus: usize,
    pub odd_minus: usize,
}

/// Assembles the block-diagonal module of a spec and reports its
/// parity/type split. The quantum case takes q from the context.
pub fn direct_sum(
    spec: &ModuleSpec,
    ctx: &FieldContext,
) -> Result<(ModuleMatrices, SegregationReport), ModuleError> {
    let q = match spec.variant {
        ModuleVariant::Sl2 => None,
        ModuleVariant::UqSl2 => Some(ctx.q_element()?),
    };
    let matrices = assemble_blocks(spec, ctx, q.as_ref())?;
    Ok((matrices, segregation(spec)))
}

/// Block-diagonal assembly at an explicit q (which may differ from the
/// context's canonical q, e.g. a rational square root of 1/b).
pub(crate) fn assemble_blocks(
    spec: &ModuleSpec,
    ctx: &FieldContext,
    q: Option<&crate::field::Scalar>,
) -> Result<ModuleMatrices, ModuleError> {
    spec.validate()?;
    let mut blocks: Vec<ModuleMatrices> = Vec::new();
    for s in &spec.summands {
        let block = match spec.variant {
            ModuleVariant::Sl2 => sl2_irreducible(s.d, ctx),
            ModuleVariant::UqSl2 => {
                let q = q.ok_or(crate::field::FieldError::MissingQ)?;
                uq_irreducible(s.d, s.eps, q)?
            }
        };
        for _ in 0..s.multiplicity {
            blocks.push(block.clone());
        }
    }
    let names: Vec<String> = blocks[0].generators.keys().cloned().collect();
    let eq_names: Vec<String> = blocks[0].equitable.keys().cloned().collect();
    let mut generators = BTreeMap::new();
    for name in names {
        let parts: Vec<Matrix> = blocks.iter().map(|b| b.generators[&name].clone()).collect();
        generators.insert(name, Matrix::block_diagonal(&parts, ctx));
    }
    let mut equitable = BTreeMap::new();
    for name in eq_names {
        let parts: Vec<Matrix> = blocks.iter().map(|b| b.equitable[&name].clone()).collect();
        equitable.insert(name, Matrix::block_diagonal(&parts, ctx));
    }
    Ok(ModuleMatrices {
        variant: spec.variant,
        dim: spec.dimension(),
        generators,
        equitable,
        q: blocks[0].q.clone(),
    })
}

/// The parity/type split, read off the highest weights.
pub fn segregation(spec: &ModuleSpec) -> SegregationReport {
    let mut report = SegregationReport {
        segregated: false,
        even_plus: 0,
        odd_plus: 0,
        even_minus: 0,
        odd_minus: 0,
    };
    for s in &spec.summands {
        let dim = (s.d + 1) * s.multiplicity;
        match (s.d % 2 == 0, s.eps >= 0 || spec.variant == ModuleVariant::Sl2) {
            (true, true) => report.even_plus += dim,
            (false, true) => report.odd_plus += dim,
            (true, false) => report.even_minus += dim,
            (false, false) => report.odd_minus += dim,
        }
    }
    let total = report.even_plus + report.odd_plus + report.even_minus + report.odd_minus;
    report.segregated = report.even_plus == total || report.odd_plus == total;
    report
}

/// The unique segregated module whose weight-space dimensions are a
/// given admissible shape: summands of highest weight d - 2j with
/// multiplicity rho_j - rho_{j-1}.
pub fn module_from_shape(
    d: usize,
    rho: &[usize],
    variant: ModuleVariant,
) -> Result<ModuleSpec, ModuleError> {
    if rho.len() != d + 1 {
        return Err(ModuleError::ShapeInvalid(format!(
            "shape has {} entries for diameter {d}",
            rho.len()
        )));
    }
    if let Some(i) = rho.iter().position(|&r| r == 0) {
        return Err(ModuleError::ShapeInvalid(format!("rho[{i}] is zero")));
    }
    for i in 0..=d {
        if rho[i] != rho[d - i] {
            return Err(ModuleError::ShapeInvalid(format!(
                "rho[{i}] = {} differs from rho[{}] = {}",
                rho[i],
                d - i,
                rho[d - i]
            )));
        }
        if 2 * i < d && rho[i] > rho[i + 1] {
            return Err(ModuleError::ShapeInvalid(format!(
                "rho[{i}] = {} exceeds rho[{}] = {}",
                rho[i],
                i + 1,
                rho[i + 1]
            )));
        }
    }
    let mut summands = Vec::new();
    for j in 0..=d / 2 {
        let m = rho[j] - if j == 0 { 0 } else { rho[j - 1] };
        if m > 0 {
            summands.push(Summand { d: d - 2 * j, multiplicity: m, eps: 1 });
        }
    }
    let spec = ModuleSpec { variant, summands };
    debug_assert_eq!(spec.dimension(), rho.iter().sum::<usize>());
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn spec(variant: ModuleVariant, summands: &[(usize, usize, i8)]) -> ModuleSpec {
        ModuleSpec {
            variant,
            summands: summands
                .iter()
                .map(|&(d, m, eps)| Summand { d, multiplicity: m, eps })
                .collect(),
        }
    }

    #[test]
    fn segregated_odd_sum() {
        let ctx = FieldContext::rationals();
        let s = spec(ModuleVariant::Sl2, &[(3, 1, 1), (1, 1, 1)]);
        let (m, report) = direct_sum(&s, &ctx).unwrap();
        assert!(report.segregated);
        assert_eq!(m.dim, 6);
        assert_eq!(report.odd_plus, 6);
    }

    #[test]
    fn mixed_parity_not_segregated() {
        let s = spec(ModuleVariant::Sl2, &[(2, 1, 1), (1, 1, 1)]);
        let report = segregation(&s);
        assert!(!report.segregated);
        assert_eq!(report.even_plus, 3);
        assert_eq!(report.odd_plus, 2);
    }

    #[test]
    fn mixed_type_not_segregated() {
        let s = spec(ModuleVariant::UqSl2, &[(1, 1, 1), (1, 1, -1)]);
        let report = segregation(&s);
        assert!(!report.segregated);
        assert_eq!(report.odd_plus, 2);
        assert_eq!(report.odd_minus, 2);
    }

    #[test]
    fn shape_to_module() {
        // d = 3, rho = (1,2,2,1): V(3) + V(1)
        let s = module_from_shape(3, &[1, 2, 2, 1], ModuleVariant::Sl2).unwrap();
        assert_eq!(
            s.summands,
            vec![
                Summand { d: 3, multiplicity: 1, eps: 1 },
                Summand { d: 1, multiplicity: 1, eps: 1 }
            ]
        );
        assert_eq!(s.dimension(), 6);
        // d = 0
        let s0 = module_from_shape(0, &[1], ModuleVariant::Sl2).unwrap();
        assert_eq!(s0.summands, vec![Summand { d: 0, multiplicity: 1, eps: 1 }]);
        // d = 2, rho = (1,1,1): multiplicity 0 in the middle is dropped
        let s2 = module_from_shape(2, &[1, 1, 1], ModuleVariant::Sl2).unwrap();
        assert_eq!(s2.summands, vec![Summand { d: 2, multiplicity: 1, eps: 1 }]);
    }

    #[test]
    fn invalid_shapes_rejected() {
        assert!(module_from_shape(2, &[1, 2], ModuleVariant::Sl2).is_err());
        assert!(module_from_shape(2, &[2, 1, 2], ModuleVariant::Sl2).is_err());
        assert!(module_from_shape(2, &[1, 2, 2], ModuleVariant::Sl2).is_err());
        assert!(module_from_shape(1, &[0, 0], ModuleVariant::Sl2).is_err());
    }

    #[test]
    fn uq_direct_sum_over_qq() {
        let ctx = FieldContext::rational_functions();
        let s = spec(ModuleVariant::UqSl2, &[(2, 1, 1), (0, 2, 1)]);
        let (m, report) = direct_sum(&s, &ctx).unwrap();
        assert!(report.segregated);
        assert_eq!(m.dim, 5);
        // h-analogue: k eigenvalue q^0 = 1 has multiplicity 1 + 2
        let k = m.generator("k");
        let ones = (0..5).filter(|&i| k.at(i, i).is_one()).count();
        assert_eq!(ones, 3);
    }

    #[test]
    fn uq_without_q_fails() {
        let ctx = FieldContext::rationals();
        let s = spec(ModuleVariant::UqSl2, &[(1, 1, 1)]);
        assert!(direct_sum(&s, &ctx).is_err());
    }
}
