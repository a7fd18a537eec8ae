//! Root extraction inside the working field.
//!
//! Over Q the rational-root criterion is exhaustive, so every in-field
//! root is found. Over Q(q) the search tries monomial candidates c*q^k
//! (with c drawn from the rational-root criterion applied to the rational
//! parts of the extreme coefficients) plus any caller-supplied
//! candidates; spectra outside that pattern come back `Unsupported`
//! rather than wrong.

use crate::field::{FieldKind, QPoly, Rational, RationalFunction, Scalar};
use crate::linalg::ScalarPoly;
use num::bigint::BigInt;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSearch {
    /// All roots, with multiplicity; their count equals the degree.
    Complete(Vec<Scalar>),
    /// The roots found do not account for the full degree.
    Unsupported,
}

/// Finds the roots of `p` lying in the working field, with multiplicity.
pub fn linear_roots(p: &ScalarPoly, extra_candidates: &[Scalar]) -> RootSearch {
    assert!(!p.is_zero(), "root search on the zero polynomial");
    let kind = p.kind();
    let mut roots = Vec::new();
    let v = p.valuation().unwrap();
    for _ in 0..v {
        roots.push(Scalar::zero(kind));
    }
    let mut rem = p.shift_down(v);
    if rem.degree() == Some(0) {
        return RootSearch::Complete(roots);
    }

    let mut candidates: Vec<Scalar> = extra_candidates
        .iter()
        .filter(|c| c.kind() == kind && !c.is_zero())
        .cloned()
        .collect();
    candidates.extend(field_candidates(&rem));
    candidates.sort_by_key(|c| c.to_string());
    candidates.dedup();

    for cand in &candidates {
        loop {
            if rem.degree() == Some(0) {
                return RootSearch::Complete(roots);
            }
            let (quot, r) = rem.deflate(cand);
            if r.is_zero() {
                roots.push(cand.clone());
                rem = quot;
            } else {
                break;
            }
        }
    }
    if rem.degree() == Some(0) {
        RootSearch::Complete(roots)
    } else {
        RootSearch::Unsupported
    }
}

fn field_candidates(p: &ScalarPoly) -> Vec<Scalar> {
    match p.kind() {
        FieldKind::Rationals => rational_candidates(p),
        FieldKind::RationalFunctions => monomial_candidates(p),
    }
}

/// Rational-root candidates p/s with p dividing the constant term and s
/// the leading term, after clearing coefficient denominators.
fn rational_candidates(p: &ScalarPoly) -> Vec<Scalar> {
    let rats: Vec<Rational> = p
        .coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Rat(r) => r.clone(),
            Scalar::RatFn(_) => unreachable!(),
        })
        .collect();
    // common denominator
    let mut den = BigInt::one();
    for r in &rats {
        den = lcm(&den, r.denom());
    }
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&den / r.denom()))
        .collect();
    let a0 = ints.first().cloned().unwrap_or_else(BigInt::zero);
    let an = ints.last().cloned().unwrap_or_else(BigInt::zero);
    let mut out = Vec::new();
    for num in divisors(&a0) {
        for dnm in divisors(&an) {
            let c = Rational::from_big(num.clone(), dnm.clone());
            out.push(Scalar::Rat(c.clone()));
            out.push(Scalar::Rat(-&c));
        }
    }
    out
}

/// Candidates of the form c*q^k over Q(q).
fn monomial_candidates(p: &ScalarPoly) -> Vec<Scalar> {
    let fns: Vec<&RationalFunction> = p
        .coeffs()
        .iter()
        .filter_map(|c| match c {
            Scalar::RatFn(f) if !f.is_zero() => Some(f),
            _ => None,
        })
        .collect();
    let Some(lowest) = fns.first() else {
        return Vec::new();
    };
    let highest = fns.last().unwrap();
    let mut span = 0usize;
    for f in &fns {
        span = span
            .max(f.numerator().degree().unwrap_or(0))
            .max(f.denominator().degree().unwrap_or(0));
    }
    let k_bound = (span + p.degree().unwrap_or(0) + 1) as i64;
    let mut out = Vec::new();
    for num in poly_integer_pool(lowest) {
        for dnm in poly_integer_pool(highest) {
            let c = Rational::from_big(num.clone(), dnm.clone());
            for k in -k_bound..=k_bound {
                let q_pow = RationalFunction::q().pow(k).unwrap();
                let m = RationalFunction::from_rational(c.clone());
                let cand = &m * &q_pow;
                out.push(Scalar::RatFn(cand.clone()));
                out.push(Scalar::RatFn(-&cand));
            }
        }
    }
    out
}

/// Divisor pool for the rational parts of a coefficient in Q(q): all
/// divisors of the integer numerators and denominators appearing in its
/// numerator and denominator polynomials.
fn poly_integer_pool(f: &RationalFunction) -> Vec<BigInt> {
    let mut ints = Vec::new();
    let mut push_poly = |p: &QPoly| {
        for c in p.coeffs() {
            if !c.is_zero() {
                ints.push(c.numer().abs());
                ints.push(c.denom().abs());
            }
        }
    };
    push_poly(f.numerator());
    push_poly(f.denominator());
    let mut out = vec![BigInt::one()];
    for n in ints {
        for d in divisors(&n) {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a / gcd(a, b)) * b
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// All positive divisors, via trial-division factorization. Factors
/// beyond the trial bound are kept whole, which can only shrink the
/// candidate pool (the search then reports `Unsupported` rather than an
/// incorrect root list).
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, primes: &mut Vec<(BigInt, u32)>| {
        if let Some(e) = primes.iter_mut().find(|(q, _)| *q == p) {
            e.1 += 1;
        } else {
            primes.push((p, 1));
        }
    };
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= n && d <= limit {
        while (&n % &d).is_zero() {
            n /= &d;
            push(d.clone(), &mut primes);
        }
        d += 1u32;
    }
    if !n.is_one() {
        push(n, &mut primes);
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for base in &out {
            let mut acc = base.clone();
            for _ in 0..=e {
                next.push(acc.clone());
                acc *= &p;
            }
        }
        next.sort();
        next.dedup();
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn p(ctx: &FieldContext, coeffs: &[i64]) -> ScalarPoly {
        ScalarPoly::new(ctx.kind(), coeffs.iter().map(|&c| ctx.int(c)).collect())
    }

    #[test]
    fn rational_roots() {
        let ctx = FieldContext::rationals();
        // x^2 - 3x + 2 -> {1, 2}
        match linear_roots(&p(&ctx, &[2, -3, 1]), &[]) {
            RootSearch::Complete(mut roots) => {
                roots.sort_by_key(|r| r.to_string());
                assert_eq!(roots, vec![ctx.int(1), ctx.int(2)]);
            }
            RootSearch::Unsupported => panic!("roots are rational"),
        }
        // x^2 - 2 has no rational roots
        assert_eq!(linear_roots(&p(&ctx, &[-2, 0, 1]), &[]), RootSearch::Unsupported);
        // multiplicity: (x-1)^2 x
        match linear_roots(&p(&ctx, &[0, 1, -2, 1]), &[]) {
            RootSearch::Complete(roots) => {
                assert_eq!(roots.len(), 3);
                assert_eq!(roots.iter().filter(|r| r.is_one()).count(), 2);
                assert_eq!(roots.iter().filter(|r| r.is_zero()).count(), 1);
            }
            RootSearch::Unsupported => panic!(),
        }
        // fractional root: 2x - 1
        match linear_roots(&p(&ctx, &[-1, 2]), &[]) {
            RootSearch::Complete(roots) => {
                assert_eq!(roots, vec![Scalar::Rat(Rational::new(1, 2))]);
            }
            RootSearch::Unsupported => panic!(),
        }
    }

    #[test]
    fn monomial_roots_over_qq() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        // x^2 - (q + q^-1)x + 1 -> {q, q^-1}
        let poly = ScalarPoly::new(
            ctx.kind(),
            vec![ctx.one(), -&(&q + &q.pow(-1).unwrap()), ctx.one()],
        );
        match linear_roots(&poly, &[]) {
            RootSearch::Complete(mut roots) => {
                roots.sort_by_key(|r| r.to_string());
                let mut expected = vec![q.clone(), q.pow(-1).unwrap()];
                expected.sort_by_key(|r| r.to_string());
                assert_eq!(roots, expected);
            }
            RootSearch::Unsupported => panic!("monomial spectrum"),
        }
    }

    #[test]
    fn caller_supplied_candidates() {
        let ctx = FieldContext::rational_functions();
        let q = ctx.q_element().unwrap();
        // root 1 + q is not a monomial; only found when hinted
        let root = &ctx.one() + &q;
        let poly = ScalarPoly::new(ctx.kind(), vec![-&root, ctx.one()]);
        assert_eq!(linear_roots(&poly, &[]), RootSearch::Unsupported);
        match linear_roots(&poly, &[root.clone()]) {
            RootSearch::Complete(roots) => assert_eq!(roots, vec![root]),
            RootSearch::Unsupported => panic!("hint should resolve"),
        }
    }

    #[test]
    fn divisor_enumeration() {
        let ds = divisors(&BigInt::from(12));
        assert_eq!(ds.len(), 6);
        assert!(ds.contains(&BigInt::from(6)));
        assert_eq!(divisors(&BigInt::from(1)), vec![BigInt::one()]);
    }
}
