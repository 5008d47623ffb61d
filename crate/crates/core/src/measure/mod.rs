//! Measure representations and conversions between them.

mod analytic;
mod atoms;
mod jacobi;
mod json;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use analytic::{eval_f, eval_g, eval_k, periodic2_g, sfree_two_point_density, sfree_two_point_g, stieltjes_density, wigner_g};
pub use atoms::recover_atoms;
pub use jacobi::{approximant_g, approximant_k, hankel_minors, jacobi_to_moments, moments_to_jacobi, shift_jacobi};
pub use json::{measure_from_json, measure_from_str, measure_to_json, moments_json, jacobi_json, atoms_json};

/// Moments `m_1..m_N`; `m_0 = 1` is implied.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence<T> {
    moments: Vec<T>,
}

impl<T: Scalar> MomentSequence<T> {
    pub fn new(moments: Vec<T>) -> Self {
        Self { moments }
    }

    pub fn order(&self) -> usize {
        self.moments.len()
    }

    /// `m_n`, with `m_0 = 1`.
    pub fn get(&self, n: usize) -> Result<T> {
        match n {
            0 => Ok(T::one()),
            _ => self
                .moments
                .get(n - 1)
                .cloned()
                .ok_or(Error::OrderExceeded { needed: n, available: self.moments.len() }),
        }
    }

    pub fn as_slice(&self) -> &[T] {
        &self.moments
    }

    pub fn into_vec(self) -> Vec<T> {
        self.moments
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self { moments: self.moments.iter().take(n).cloned().collect() }
    }
}

/// How Jacobi parameters continue past the explicit entries.
#[derive(Clone, Debug, PartialEq)]
pub enum TailPolicy<T> {
    /// Every missing `α` and `ω` is zero, so the continued fraction terminates.
    Truncate,
    /// `α_n = a`, `ω_n = b` for every index past the explicit entries.
    Wigner { a: T, b: T },
    /// `α_n = a[n % 2]`, `ω_n = b[n % 2]` past the explicit entries, by absolute index.
    Periodic2 { a: [T; 2], b: [T; 2] },
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiParams<T> {
    pub alpha: Vec<T>,
    pub omega: Vec<T>,
    pub tail: TailPolicy<T>,
}

impl<T: Scalar> JacobiParams<T> {
    pub fn new(alpha: Vec<T>, omega: Vec<T>, tail: TailPolicy<T>) -> Result<Self> {
        if let Some(w) = omega.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidParameter(format!("negative omega {w}")));
        }
        match &tail {
            TailPolicy::Wigner { b, .. } if b.is_negative() => {
                return Err(Error::InvalidParameter("negative Wigner variance".into()))
            }
            TailPolicy::Periodic2 { b, .. } if b.iter().any(|x| x.is_negative()) => {
                return Err(Error::InvalidParameter("negative periodic omega".into()))
            }
            _ => {}
        }
        Ok(Self { alpha, omega, tail })
    }

    pub fn finite(alpha: Vec<T>, omega: Vec<T>) -> Result<Self> {
        Self::new(alpha, omega, TailPolicy::Truncate)
    }

    pub fn alpha_at(&self, n: usize) -> T {
        if let Some(a) = self.alpha.get(n) {
            return a.clone();
        }
        match &self.tail {
            TailPolicy::Truncate => T::zero(),
            TailPolicy::Wigner { a, .. } => a.clone(),
            TailPolicy::Periodic2 { a, .. } => a[n % 2].clone(),
        }
    }

    pub fn omega_at(&self, n: usize) -> T {
        if let Some(w) = self.omega.get(n) {
            return w.clone();
        }
        match &self.tail {
            TailPolicy::Truncate => T::zero(),
            TailPolicy::Wigner { b, .. } => b.clone(),
            TailPolicy::Periodic2 { b, .. } => b[n % 2].clone(),
        }
    }

    /// Number of levels when the fraction terminates (`ω_{L-1} = 0`), i.e. the
    /// number of atoms; `None` for an infinite fraction.
    pub fn levels(&self) -> Option<usize> {
        let explicit = self.alpha.len().max(self.omega.len());
        let tail_zero = match &self.tail {
            TailPolicy::Truncate => true,
            TailPolicy::Wigner { b, .. } => b.is_zero(),
            TailPolicy::Periodic2 { b, .. } => b[0].is_zero() || b[1].is_zero(),
        };
        let horizon = if tail_zero { explicit + 2 } else { explicit };
        (0..horizon).find(|&k| self.omega_at(k).is_zero()).map(|k| k + 1)
    }

    /// Explicit parameters covering levels `0..n`, with the tail materialized.
    pub fn materialize(&self, n: usize) -> Self {
        Self {
            alpha: (0..n).map(|k| self.alpha_at(k)).collect(),
            omega: (0..n.saturating_sub(1)).map(|k| self.omega_at(k)).collect(),
            tail: self.tail.clone(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> JacobiParams<U> {
        let tail = match &self.tail {
            TailPolicy::Truncate => TailPolicy::Truncate,
            TailPolicy::Wigner { a, b } => TailPolicy::Wigner { a: f(a), b: f(b) },
            TailPolicy::Periodic2 { a, b } => TailPolicy::Periodic2 { a: [f(&a[0]), f(&a[1])], b: [f(&b[0]), f(&b[1])] },
        };
        JacobiParams { alpha: self.alpha.iter().map(&f).collect(), omega: self.omega.iter().map(&f).collect(), tail }
    }
}

/// Finitely many atoms with strictly positive weights summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomicMeasure<T> {
    atoms: Vec<(T, T)>,
}

impl<T: Scalar> AtomicMeasure<T> {
    pub fn new(mut atoms: Vec<(T, T)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidParameter("no atoms".into()));
        }
        if atoms.iter().any(|(_, w)| !w.is_positive()) {
            return Err(Error::InvalidParameter("atom weights must be positive".into()));
        }
        let total = atoms.iter().fold(T::zero(), |acc, (_, w)| acc + w.clone());
        if !total.close_to(&T::one(), 1e-12) {
            return Err(Error::InvalidParameter(format!("atom weights sum to {total}, not 1")));
        }
        atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("ordered locations"));
        if atoms.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidParameter("atom locations must be distinct".into()));
        }
        Ok(Self { atoms })
    }

    pub fn atoms(&self) -> &[(T, T)] {
        &self.atoms
    }

    pub fn moments(&self, n: usize) -> MomentSequence<T> {
        let mut powers: Vec<T> = self.atoms.iter().map(|(_, w)| w.clone()).collect();
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let mut acc = T::zero();
            for (p, (x, _)) in powers.iter_mut().zip(&self.atoms) {
                *p = p.clone() * x.clone();
                acc = acc + p.clone();
            }
            out.push(acc);
        }
        MomentSequence::new(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Representation<T> {
    Moments(MomentSequence<T>),
    Jacobi(JacobiParams<T>),
    Atoms(AtomicMeasure<T>),
}

/// A measure in one primary representation; the Jacobi form of moment or atom
/// data is computed once on demand.
#[derive(Debug)]
pub struct MeasureRep<T> {
    repr: Representation<T>,
    jacobi_cache: OnceLock<Result<JacobiParams<T>>>,
}

impl<T: Scalar> Clone for MeasureRep<T> {
    fn clone(&self) -> Self {
        Self { repr: self.repr.clone(), jacobi_cache: self.jacobi_cache.clone() }
    }
}

impl<T: Scalar> PartialEq for MeasureRep<T> {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr
    }
}

impl<T: Scalar> From<Representation<T>> for MeasureRep<T> {
    fn from(repr: Representation<T>) -> Self {
        Self { repr, jacobi_cache: OnceLock::new() }
    }
}

impl<T: Scalar> MeasureRep<T> {
    pub fn from_moments(m: Vec<T>) -> Self {
        Representation::Moments(MomentSequence::new(m)).into()
    }

    pub fn from_jacobi(j: JacobiParams<T>) -> Self {
        Representation::Jacobi(j).into()
    }

    pub fn from_atoms(atoms: Vec<(T, T)>) -> Result<Self> {
        Ok(Representation::Atoms(AtomicMeasure::new(atoms)?).into())
    }

    pub fn representation(&self) -> &Representation<T> {
        &self.repr
    }

    /// Number of moments this representation determines (`None` means all of them).
    pub fn available_order(&self) -> Option<usize> {
        match &self.repr {
            Representation::Moments(m) => Some(m.order()),
            _ => None,
        }
    }

    /// First `n` moments, exactly.
    pub fn moments(&self, n: usize) -> Result<MomentSequence<T>> {
        match &self.repr {
            Representation::Moments(m) => {
                if n > m.order() {
                    Err(Error::OrderExceeded { needed: n, available: m.order() })
                } else {
                    Ok(m.truncate(n))
                }
            }
            Representation::Jacobi(j) => jacobi_to_moments(j, n),
            Representation::Atoms(a) => Ok(a.moments(n)),
        }
    }

    /// Jacobi parameters; for moment data this is the recursion run on all
    /// available moments, for atoms it terminates after the atom count.
    pub fn jacobi(&self) -> Result<JacobiParams<T>> {
        if let Representation::Jacobi(j) = &self.repr {
            return Ok(j.clone());
        }
        self.jacobi_cache
            .get_or_init(|| match &self.repr {
                Representation::Moments(m) => moments_to_jacobi(m),
                Representation::Atoms(a) => moments_to_jacobi(&a.moments(2 * a.atoms().len())),
                Representation::Jacobi(_) => unreachable!(),
            })
            .clone()
    }

    /// Atoms when the measure is finitely supported and the atoms are representable.
    ///
    /// For moment data the atoms must reproduce every available moment, so a
    /// quadrature rule of a measure that merely ran out of data is rejected.
    pub fn atoms(&self) -> Option<AtomicMeasure<T>> {
        match &self.repr {
            Representation::Atoms(a) => Some(a.clone()),
            Representation::Jacobi(j) => recover_atoms(j),
            Representation::Moments(m) => {
                let a = recover_atoms(&self.jacobi().ok()?)?;
                let got = a.moments(m.order());
                got.as_slice().iter().zip(m.as_slice()).all(|(x, y)| x.close_to(y, 1e-9)).then_some(a)
            }
        }
    }
}

pub fn point_mass<T: Scalar>(a: T) -> MeasureRep<T> {
    MeasureRep::from_atoms(vec![(a, T::one())]).expect("valid point mass")
}

/// `p·δ_{λ1} + (1-p)·δ_{λ2}`; collapses to a point mass when `λ1 = λ2`.
pub fn two_point<T: Scalar>(p: T, l1: T, l2: T) -> Result<MeasureRep<T>> {
    if !(p.is_positive() && p < T::one()) {
        return Err(Error::InvalidParameter(format!("two_point weight {p} not in (0, 1)")));
    }
    if l1 == l2 {
        return Ok(point_mass(l1));
    }
    let q = T::one() - p.clone();
    MeasureRep::from_atoms(vec![(l1, p), (l2, q)])
}

/// Semicircle law with mean `a` and variance `b`.
pub fn wigner<T: Scalar>(a: T, b: T) -> Result<MeasureRep<T>> {
    if b.is_negative() {
        return Err(Error::InvalidParameter("Wigner variance must be non-negative".into()));
    }
    if b.is_zero() {
        return Ok(point_mass(a));
    }
    Ok(MeasureRep::from_jacobi(JacobiParams::new(vec![], vec![], TailPolicy::Wigner { a, b })?))
}

/// `(δ_{-1} + δ_1)/2`.
pub fn bernoulli_symmetric<T: Scalar>() -> MeasureRep<T> {
    let half = T::ratio(1, 2);
    MeasureRep::from_atoms(vec![(-T::one(), half.clone()), (T::one(), half)]).expect("valid Bernoulli")
}
