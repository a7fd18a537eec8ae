//! The cycling operator of the equitable presentation: an invertible
//! Omega with Omega^-1 x Omega = y, Omega^-1 y Omega = z,
//! Omega^-1 z Omega = x on a finite-dimensional Uq(sl2) module.

use super::{ModuleError, ModuleMatrices, ModuleVariant};
use crate::field::Scalar;
use crate::linalg::{invert, kernel, Matrix};

/// Solves the homogeneous linear system x O = O y, y O = O z, z O = O x
/// and searches the solution space for an invertible element: single
/// kernel basis vectors first, then integer combinations with small
/// coefficients. The three conjugation identities are asserted on the
/// result.
pub fn solve_cycling_operator(m: &ModuleMatrices) -> Result<Matrix, ModuleError> {
    assert_eq!(m.variant, ModuleVariant::UqSl2, "cycling needs the equitable generators");
    let x = m.equitable_generator("x");
    let y = m.equitable_generator("y");
    let z = m.equitable_generator("z");
    let n = m.dim;
    let ctx = x.ctx();

    // rows of the stacked constraint system, one per entry of the three
    // residuals; unknown omega_(r,s) sits at column r*n + s
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(3 * n * n);
    for (left, right) in [(x, y), (y, z), (z, x)] {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![ctx.zero(); n * n];
                for r in 0..n {
                    // (L O)_(i,j) picks up L[i,r] O[r,j]
                    let c = left.at(i, r);
                    if !c.is_zero() {
                        row[r * n + j] = &row[r * n + j] + c;
                    }
                    // (O R)_(i,j) picks up O[i,r] R[r,j]
                    let c = right.at(r, j);
                    if !c.is_zero() {
                        row[i * n + r] = &row[i * n + r] - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows, ctx)?;
    let basis = kernel(&system);
    let dim = basis.cols();
    if dim == 0 {
        return Err(ModuleError::NoInvertibleSolution);
    }
    let reshape = |col: &Matrix| Matrix::from_fn(n, n, ctx, |i, j| col.at(i * n + j, 0).clone());
    let candidates = combination_coefficients(dim);
    for coeffs in candidates {
        let mut col = Matrix::zero(n * n, 1, ctx);
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                col = &col + &basis.column(k).scale(&ctx.int(c));
            }
        }
        let omega = reshape(&col);
        if let Some(inv) = invert(&omega) {
            for (left, right) in [(x, y), (y, z), (z, x)] {
                let conj = &(&inv * left) * &omega;
                assert_eq!(&conj, right, "conjugation identity must hold");
            }
            return Ok(omega);
        }
    }
    Err(ModuleError::NoInvertibleSolution)
}

/// Single basis vectors, then pairs with coefficients in -2..2, then a
/// few fixed full combinations.
fn combination_coefficients(dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for k in 0..dim {
        let mut v = vec![0i64; dim];
        v[k] = 1;
        out.push(v);
    }
    for a in 0..dim {
        for b in (a + 1)..dim {
            for ca in [1i64, -1, 2, -2] {
                for cb in [1i64, -1, 2, -2] {
                    let mut v = vec![0i64; dim];
                    v[a] = ca;
                    v[b] = cb;
                    out.push(v);
                }
            }
        }
    }
    for scale in 1..=3i64 {
        out.push((0..dim).map(|k| 1 + scale * k as i64).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::modules::uq_irreducible;

    #[test]
    fn trivial_module() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let m = uq_irreducible(0, 1, &q).unwrap();
        let omega = solve_cycling_operator(&m).unwrap();
        assert_eq!(omega.rows(), 1);
        assert!(!omega.at(0, 0).is_zero());
    }

    #[test]
    fn two_dimensional_module() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        let m = uq_irreducible(1, 1, &q).unwrap();
        let omega = solve_cycling_operator(&m).unwrap();
        let inv = invert(&omega).unwrap();
        let x = m.equitable_generator("x");
        let y = m.equitable_generator("y");
        assert_eq!(&(&(&inv * x) * &omega), y);
    }

    #[test]
    fn omega_cubed_is_central() {
        // Omega^3 commutes with x, y, z on an irreducible
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        for d in 0..=2usize {
            let m = uq_irreducible(d, 1, &q).unwrap();
            let omega = solve_cycling_operator(&m).unwrap();
            let cube = omega.pow(3);
            for name in ["x", "y", "z"] {
                let g = m.equitable_generator(name);
                assert_eq!(&(&cube * g), &(g * &cube), "Omega^3 commutes with {name} at d={d}");
            }
        }
    }
}
