//! Column-stored sparse matrices and sparse vectors.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector: index to non-zero entry.
pub type SparseVec<T> = BTreeMap<usize, T>;

pub fn unit<T: Scalar>(i: usize) -> SparseVec<T> {
    BTreeMap::from([(i, T::one())])
}

pub fn dot<T: Scalar>(a: &SparseVec<T>, b: &SparseVec<T>) -> T {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter_map(|(i, x)| large.get(i).map(|y| x.clone() * y.clone()))
        .fold(T::zero(), |acc, t| acc + t)
}

/// `a + c·b`, dropping exact zeros.
pub fn axpy<T: Scalar>(a: &SparseVec<T>, c: &T, b: &SparseVec<T>) -> SparseVec<T> {
    let mut out = a.clone();
    for (i, x) in b {
        let e = out.entry(*i).or_insert_with(T::zero);
        *e = e.clone() + c.clone() * x.clone();
    }
    out.retain(|_, x| !x.is_zero());
    out
}

pub fn scale_vec<T: Scalar>(v: &SparseVec<T>, c: &T) -> SparseVec<T> {
    let mut out: SparseVec<T> = v.iter().map(|(i, x)| (*i, x.clone() * c.clone())).collect();
    out.retain(|_, x| !x.is_zero());
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    dim: usize,
    cols: Vec<BTreeMap<usize, T>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, cols: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![true; dim])
    }

    /// 0/1 diagonal matrix of a mask, i.e. a coordinate projection.
    pub fn diagonal(mask: &[bool]) -> Self {
        let mut m = Self::zeros(mask.len());
        for (i, _) in mask.iter().enumerate().filter(|(_, &k)| k) {
            m.cols[i].insert(i, T::one());
        }
        m
    }

    /// Sums repeated `(row, col, value)` entries.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut m = Self::zeros(dim);
        for (r, c, v) in entries {
            m.add_entry(r, c, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.cols[c].get(&r).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: T) {
        assert!(r < self.dim && c < self.dim, "entry ({r}, {c}) outside dimension {}", self.dim);
        let e = self.cols[c].entry(r).or_insert_with(T::zero);
        *e = e.clone() + v;
        if e.is_zero() {
            self.cols[c].remove(&r);
        }
    }

    /// Non-zero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, T> {
        &self.cols[c]
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries().all(|(r, c, v)| self.get(c, r) == *v)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_entries(self.dim, self.entries().map(|(r, c, v)| (r, c, v.clone() * k.clone())))
    }

    /// `P M P` for the coordinate projection `P` of `keep`.
    pub fn compress(&self, keep: &[bool]) -> Self {
        assert_eq!(keep.len(), self.dim, "mask length");
        Self::from_entries(
            self.dim,
            self.entries().filter(|(r, c, _)| keep[*r] && keep[*c]).map(|(r, c, v)| (r, c, v.clone())),
        )
    }

    pub fn apply(&self, v: &SparseVec<T>) -> SparseVec<T> {
        let mut out: SparseVec<T> = BTreeMap::new();
        for (c, x) in v {
            for (r, m) in &self.cols[*c] {
                let e = out.entry(*r).or_insert_with(T::zero);
                *e = e.clone() + m.clone() * x.clone();
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zeros(self.dim);
        for (c, col) in other.cols.iter().enumerate() {
            out.cols[c] = self.apply(col);
        }
        out
    }

    /// Kronecker product; index `(i, j)` maps to `i·other.dim + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let n = other.dim;
        let entries = self.entries().flat_map(|(r1, c1, v1)| {
            other.entries().map(move |(r2, c2, v2)| (r1 * n + r2, c1 * n + c2, v1.clone() * v2.clone()))
        });
        Self::from_entries(self.dim * n, entries.collect::<Vec<_>>())
    }

    /// Entrywise equality, or closeness for inexact scalars.
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim
            && self.entries().all(|(r, c, v)| v.close_to(&other.get(r, c), tol))
            && other.entries().all(|(r, c, v)| v.close_to(&self.get(r, c), tol))
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }
}
