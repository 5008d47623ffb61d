//! Dense univariate polynomials and rational functions in `z`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::TailSeries;

/// Coefficients in ascending order, trailing zeros trimmed (zero polynomial is empty).
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `z - a`
    pub fn linear(a: T) -> Self {
        Self::new(vec![-a, T::one()])
    }

    pub fn z() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(T::zero);
        Self::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::constant(T::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs.iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64_lossy())
    }
}

/// `num / den`, kept unreduced; equality is tested by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc<T> {
    pub num: Poly<T>,
    pub den: Poly<T>,
}

impl<T: Scalar> RatFunc<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        Self { num: p, den: Poly::constant(T::one()) }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            num: self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `self(inner(z))`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let d = self.num.coeffs().len().max(self.den.coeffs().len()).saturating_sub(1);
        let homogenize = |p: &Poly<T>| {
            let mut acc = Poly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                let term = inner.num.pow(i).mul(&inner.den.pow(d - i)).scale(c);
                acc = acc.add(&term);
            }
            acc
        };
        Self::new(homogenize(&self.num), homogenize(&self.den))
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Expansion at infinity as a series in `w = 1/z`, valid when `deg num <= deg den`.
    pub fn series_at_infinity(&self, order: usize) -> Result<TailSeries<T>> {
        let dd = self.den.degree().ok_or_else(|| Error::Domain("zero denominator".into()))?;
        let Some(dn) = self.num.degree() else {
            return Ok(TailSeries::zero(order));
        };
        if dn > dd {
            return Err(Error::Domain("numerator degree exceeds denominator degree".into()));
        }
        // num(z)/den(z) = w^(dd-dn) · rev(num)(w) / rev(den)(w)
        let rev = |p: &Poly<T>, deg: usize| {
            let mut c: Vec<T> = p.coeffs().iter().rev().cloned().collect();
            c.truncate(deg + 1);
            let mut s = TailSeries::new(c);
            s = s.truncate(order);
            s
        };
        let n = rev(&self.num, dn);
        let d = rev(&self.den, dd).reciprocal()?;
        Ok(n.mul(&d).shift_up(dd - dn))
    }

    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rational;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 2, 3]).sub(&p(&[1, 2, 3])), Poly::zero());
        assert_eq!(p(&[1, 0, 1]).eval(&rat(2, 1)), rat(5, 1));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn composition_and_equality() {
        // f(x) = 1/x, g(z) = z - 1 => f(g(z)) = 1/(z-1)
        let f = RatFunc::new(p(&[1]), p(&[0, 1])).unwrap();
        let g = RatFunc::from_poly(p(&[-1, 1]));
        let h = f.compose(&g).unwrap();
        assert!(h.same_as(&RatFunc::new(p(&[1]), p(&[-1, 1])).unwrap()));
        assert!(!h.same_as(&f));
    }

    #[test]
    fn expansion_at_infinity() {
        // z/(z^2 - 1) = w + w^3 + w^5
        let r = RatFunc::new(p(&[0, 1]), p(&[-1, 0, 1])).unwrap();
        let s = r.series_at_infinity(5).unwrap();
        let want: Vec<Rational> = [0, 1, 0, 1, 0, 1].iter().map(|&x| rat(x, 1)).collect();
        assert_eq!(s.coeffs(), &want[..]);
    }
}
