//! Truncated power series in `w = 1/z`.
//!
//! A [`TailSeries`] of order `N` stores `c_0 + c_1 w + ... + c_N w^N`. Binary
//! operations truncate to the smaller of the two orders.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct TailSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TailSeries<T> {
    /// Series from coefficients `c_0..c_N`; an empty vector is the order-0 zero series.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c·w^k` at the given order (zero if `k > order`).
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c: Vec<T> = self.coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, T::zero());
        Self { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    /// Multiplication by `w^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n {
            if i + k > n {
                break;
            }
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|i| self.coeffs[i].clone() + other.coeffs[i].clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|i| self.coeffs[i].clone() - other.coeffs[i].clone()).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let n = self.order();
        let inv0 = T::one() / c0.clone();
        let mut out = vec![T::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out[k] = -(acc * inv0.clone());
        }
        Ok(Self { coeffs: out })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates `outer(1/u)` where `u = z - inner(z)`, both read as series in `w = 1/z`.
    ///
    /// Uses `1/u = w · Σ_k (w·inner)^k`; the result has the common order.
    pub fn substitute_into_shifted(outer: &Self, inner: &Self) -> Self {
        let n = outer.order().min(inner.order());
        let inner = inner.truncate(n);
        let x = inner.shift_up(1);
        // geometric series in x, which has no constant term
        let mut geo = Self::one(n);
        let mut term = Self::one(n);
        for _ in 0..n {
            term = term.mul(&x);
            if term.is_zero() {
                break;
            }
            geo = geo.add(&term);
        }
        let v = geo.shift_up(1);
        Self::compose_at(outer, &v, n)
    }

    /// `Σ a_k v^k` truncated at `n`, for `v` with zero constant term (Horner form).
    fn compose_at(outer: &Self, v: &Self, n: usize) -> Self {
        let mut acc = Self::zero(n);
        for k in (0..=n.min(outer.order())).rev() {
            acc = acc.mul(v).add(&Self::constant(outer.coeffs[k].clone(), n));
        }
        acc
    }

    /// Evaluates at a point of `w` (for diagnostics and pointwise comparisons).
    pub fn eval_f64(&self, w: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * w + c.to_f64_lossy();
        }
        acc
    }
}

/// `1 + m_1 w + ... + m_N w^N`, the moment generating series `z·G(z)`.
pub fn moment_series<T: Scalar>(moments: &[T]) -> TailSeries<T> {
    let mut c = Vec::with_capacity(moments.len() + 1);
    c.push(T::one());
    c.extend(moments.iter().cloned());
    TailSeries::new(c)
}

/// Moments `m_1..m_N` to the series of `F(z) - z` (order `N - 1`, constant term `-m_1`).
pub fn moments_to_f<T: Scalar>(moments: &[T]) -> TailSeries<T> {
    if moments.is_empty() {
        return TailSeries::zero(0);
    }
    let r = moment_series(moments).reciprocal().expect("constant term is one");
    TailSeries::new(r.into_coeffs().into_iter().skip(1).collect())
}

/// Inverse of [`moments_to_f`]: a series of order `M` yields `M + 1` moments.
pub fn f_to_moments<T: Scalar>(f: &TailSeries<T>) -> Vec<T> {
    let mut c = Vec::with_capacity(f.order() + 2);
    c.push(T::one());
    c.extend(f.coeffs().iter().cloned());
    let m = TailSeries::new(c).reciprocal().expect("constant term is one");
    m.into_coeffs().into_iter().skip(1).collect()
}

/// Moments to the K-series `z - F(z)` (order `N - 1`).
pub fn moments_to_k<T: Scalar>(moments: &[T]) -> TailSeries<T> {
    moments_to_f(moments).neg()
}

pub fn k_to_moments<T: Scalar>(k: &TailSeries<T>) -> Vec<T> {
    f_to_moments(&k.neg())
}

impl<T: Scalar> Add for &TailSeries<T> {
    type Output = TailSeries<T>;
    fn add(self, rhs: Self) -> TailSeries<T> {
        TailSeries::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &TailSeries<T> {
    type Output = TailSeries<T>;
    fn sub(self, rhs: Self) -> TailSeries<T> {
        TailSeries::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &TailSeries<T> {
    type Output = TailSeries<T>;
    fn mul(self, rhs: Self) -> TailSeries<T> {
        TailSeries::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &TailSeries<T> {
    type Output = TailSeries<T>;
    fn neg(self) -> TailSeries<T> {
        TailSeries::neg(self)
    }
}
