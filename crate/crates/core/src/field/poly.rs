//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first with trailing zeros
//! stripped; the empty vector is the zero polynomial.

use super::rational::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    /// The generator `x` itself.
    pub fn gen() -> Self {
        QPoly::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by `x^k`; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> QPoly {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(self.coeffs.iter().take(k).all(Rational::is_zero));
        QPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> QPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Euclidean division; panics on zero divisor.
    pub fn divrem(&self, div: &QPoly) -> (QPoly, QPoly) {
        let dd = div.degree().expect("division by zero polynomial");
        let lead_inv = div.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in div.coeffs.iter().enumerate() {
                let t = &rem[i + j] - &(&c * d);
                rem[i + j] = t;
            }
            quot[i] = c;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn make_monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic gcd by the Euclidean algorithm with exact rational arithmetic.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.make_monic();
        }
        a.make_monic()
    }

    /// Exact square root in Q[x], if one exists; leading coefficient positive.
    pub fn sqrt(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let v = self.valuation().unwrap();
        if v % 2 != 0 {
            return None;
        }
        let p = self.shift_down(v);
        let n = p.degree().unwrap();
        if n % 2 != 0 {
            return None;
        }
        let m = n / 2;
        let lead = p.leading().unwrap().sqrt()?;
        let mut g = vec![Rational::zero(); m + 1];
        g[m] = lead;
        let two_lead_inv = (&Rational::from_int(2) * &g[m]).inv().unwrap();
        for k in (0..m).rev() {
            // coefficient of x^(m+k) in g^2 must equal p's
            let mut acc = p.coeff(m + k);
            for i in (k + 1)..m {
                let j = m + k - i;
                if j <= m && j > k {
                    acc = &acc - &(&g[i] * &g[j]);
                }
            }
            g[k] = &acc * &two_lead_inv;
        }
        let g = QPoly::new(g).shift_up(v / 2);
        if &(&g * &g) == self {
            Some(g)
        } else {
            None
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        QPoly::new(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        QPoly::new(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = t;
            }
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::poly_string(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    #[test]
    fn normalization() {
        assert!(QPoly::new(vec![Rational::zero(); 3]).is_zero());
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn divrem_exact() {
        // (x^2 - 1) / (x + 1) = x - 1 rem 0
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        // x^2 + 1 = (x)(x) + 1
        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[0, 1]));
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn gcd_cancellation() {
        // gcd(x^2 - 1, x + 1) = x + 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 1])), p(&[1, 1]));
        // coprime
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), QPoly::one());
        assert_eq!(p(&[0]).gcd(&p(&[3, 1])), p(&[3, 1]));
    }

    #[test]
    fn sqrt_detection() {
        // (x + 2)^2 = x^2 + 4x + 4
        assert_eq!(p(&[4, 4, 1]).sqrt(), Some(p(&[2, 1])));
        // 4x^2 -> 2x
        assert_eq!(p(&[0, 0, 4]).sqrt(), Some(p(&[0, 2])));
        assert_eq!(p(&[1, 1]).sqrt(), None);
        assert_eq!(p(&[2, 0, 0]).sqrt(), None);
        // -(x^2) has no square root with rational coefficients
        assert_eq!(p(&[0, 0, -1]).sqrt(), None);
    }
}
