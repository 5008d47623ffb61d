//! Factor operators, the free product representation, replicas and branches.

use rand::seq::index::sample;
use rand::Rng;

use super::checks::{orthogonality_check, CheckReport};
use super::sparse::{unit, SparseMatrix, SparseVec};
use super::words::{other_factor, weight, Letter, WordBasis};
use crate::error::{Error, Result};
use crate::measure::JacobiParams;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct ModelOperator<T> {
    pub matrix: SparseMatrix<T>,
    pub label: String,
}

impl<T: Scalar> ModelOperator<T> {
    pub fn new(matrix: SparseMatrix<T>, label: impl Into<String>) -> Self {
        Self { matrix, label: label.into() }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `⟨Aᵏη, η⟩` for `k = 1..=n`.
    pub fn moments(&self, state: &SparseVec<T>, n: usize) -> Vec<T> {
        let mut v = state.clone();
        (0..n)
            .map(|_| {
                v = self.matrix.apply(&v);
                super::sparse::dot(&v, state)
            })
            .collect()
    }
}

/// `d × d` tridiagonal matrix with diagonal `α_0..α_{d-1}` and off-diagonal
/// `√ω_0..√ω_{d-2}`; `e_0` is the distinguished vector.
pub fn jacobi_operator<T: Scalar>(j: &JacobiParams<T>, d: usize) -> Result<ModelOperator<T>> {
    if d == 0 {
        return Err(Error::InvalidParameter("factor dimension must be at least 1".into()));
    }
    if let Some(levels) = j.levels() {
        if levels < d {
            return Err(Error::InsufficientDepth { needed: d, available: levels });
        }
    }
    let mut entries = Vec::with_capacity(3 * d);
    for k in 0..d {
        entries.push((k, k, j.alpha_at(k)));
        if k + 1 < d {
            let w = j.omega_at(k);
            let s = w
                .exact_sqrt()
                .ok_or_else(|| Error::InvalidParameter(format!("sqrt of omega_{k} = {w} is not in the scalar field")))?;
            entries.push((k, k + 1, s.clone()));
            entries.push((k + 1, k, s));
        }
    }
    Ok(ModelOperator::new(SparseMatrix::from_entries(d, entries), format!("J_{d}")))
}

/// `λ_i(a)` on the word basis:
/// `λ_i(a)(h_1 ⊗ h) = (a h_1)⁰ ⊗ h + ⟨a h_1, ξ_i⟩ h`, with `ξ_i ⊗ h ≡ h`.
/// Components outside the basis are dropped.
pub fn free_product_rep<T: Scalar>(a: &ModelOperator<T>, factor: u8, basis: &WordBasis) -> Result<ModelOperator<T>> {
    if !(factor == 1 || factor == 2) {
        return Err(Error::InvalidParameter(format!("factor index {factor} not in {{1, 2}}")));
    }
    if a.dim() != basis.sizes()[factor as usize - 1] {
        return Err(Error::InvalidParameter(format!(
            "factor operator has dimension {}, basis expects {}",
            a.dim(),
            basis.sizes()[factor as usize - 1]
        )));
    }
    let mut entries = Vec::new();
    let mut target: Vec<Letter> = Vec::new();
    for (c, w) in basis.words().iter().enumerate() {
        let (j, tail) = match w.first() {
            Some(l) if l.factor == factor => (l.index, &w[1..]),
            _ => (0, &w[..]),
        };
        for (k, v) in a.matrix.column(j) {
            target.clear();
            if *k > 0 {
                target.push(Letter::new(factor, *k));
            }
            target.extend_from_slice(tail);
            if let Some(r) = basis.index_of(&target) {
                entries.push((r, c, v.clone()));
            }
        }
    }
    Ok(ModelOperator::new(SparseMatrix::from_entries(basis.len(), entries), format!("λ_{factor}({})", a.label)))
}

/// Unit vectors in `ℚ^m` used for superposed states.
const UNIT_COMBOS: [&[i64]; 5] = [&[3, 4, 5], &[1, 2, 2, 3], &[2, 3, 6, 7], &[1, 4, 8, 9], &[2, 6, 9, 11]];

/// Truncated free product of two Jacobi factors together with `λ_1`, `λ_2`.
#[derive(Clone, Debug)]
pub struct FreeProductModel<T> {
    basis: WordBasis,
    factors: [ModelOperator<T>; 2],
    lambda: [ModelOperator<T>; 2],
    factor_exact: [usize; 2],
}

impl<T: Scalar> FreeProductModel<T> {
    /// Factors of dimension `min(d, levels)`; words of weight `≤ weight_cap` and
    /// length `≤ depth_cap`.
    pub fn new(mu: &JacobiParams<T>, nu: &JacobiParams<T>, d: usize, weight_cap: usize, depth_cap: usize) -> Result<Self> {
        let dims = [mu, nu].map(|j| j.levels().map_or(d, |l| l.min(d)));
        // a factor cut below its level count only reproduces moments to 2d - 1
        let factor_exact = [0, 1].map(|i| match [mu, nu][i].levels() {
            Some(l) if l <= d => usize::MAX,
            _ => 2 * d - 1,
        });
        let factors = [jacobi_operator(mu, dims[0])?, jacobi_operator(nu, dims[1])?];
        let basis = WordBasis::new(dims, weight_cap, depth_cap)?;
        let lambda = [free_product_rep(&factors[0], 1, &basis)?, free_product_rep(&factors[1], 2, &basis)?];
        Ok(Self { basis, factors, lambda, factor_exact })
    }

    pub fn basis(&self) -> &WordBasis {
        &self.basis
    }

    pub fn factor(&self, i: u8) -> &ModelOperator<T> {
        &self.factors[i as usize - 1]
    }

    pub fn lambda(&self, i: u8) -> &ModelOperator<T> {
        &self.lambda[i as usize - 1]
    }

    /// `λ(a_1) + λ(a_2)`.
    pub fn sum(&self) -> ModelOperator<T> {
        ModelOperator::new(self.lambda[0].matrix.add(&self.lambda[1].matrix), "X_1 + X_2")
    }

    /// Largest replica level with a non-empty range.
    pub fn max_level(&self) -> usize {
        self.basis.depth_cap() + 1
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidParameter("levels start at 1".into()));
        }
        if n > self.max_level() {
            return Err(Error::DepthExceeded { requested: n, cap: self.max_level() });
        }
        Ok(())
    }

    /// Mask of `ℋ⁽ⁿ⁻¹⁾(j) ⊕ ℋ⁽ⁿ⁾(j̄)`: words of length `n-1` not starting with `j`
    /// and words of length `n` starting with `j`.
    pub fn projection_mask(&self, j: u8, n: usize) -> Result<Vec<bool>> {
        self.check_level(n)?;
        Ok(self
            .basis
            .words()
            .iter()
            .map(|w| {
                let starts_j = w.first().is_some_and(|l| l.factor == j);
                (w.len() + 1 == n && !starts_j) || (w.len() == n && starts_j)
            })
            .collect())
    }

    pub fn projection(&self, j: u8, n: usize) -> Result<ModelOperator<T>> {
        Ok(ModelOperator::new(SparseMatrix::diagonal(&self.projection_mask(j, n)?), format!("P_{j}({n})")))
    }

    /// `X_j(n) = P_j(n) λ(a_j) P_j(n)`.
    pub fn replica(&self, j: u8, n: usize) -> Result<ModelOperator<T>> {
        let mask = self.projection_mask(j, n)?;
        Ok(ModelOperator::new(self.lambda(j).matrix.compress(&mask), format!("X_{j}({n})")))
    }

    /// `B_j(k) = Σ_r X_j(2r + k) + Σ_r X_{j̄}(2r + k + 1)`.
    pub fn branch(&self, j: u8, k: usize) -> Result<ModelOperator<T>> {
        self.check_level(k)?;
        let jb = other_factor(j);
        // λ_j leaves each level invariant, so a sum of replicas is one compression
        let union = |f: u8, start: usize| -> Result<Vec<bool>> {
            let mut m = vec![false; self.basis.len()];
            for n in (start..=self.max_level()).step_by(2) {
                for (acc, x) in m.iter_mut().zip(self.projection_mask(f, n)?) {
                    *acc |= x;
                }
            }
            Ok(m)
        };
        let own = self.lambda(j).matrix.compress(&union(j, k)?);
        let other = if k < self.max_level() {
            self.lambda(jb).matrix.compress(&union(jb, k + 1)?)
        } else {
            SparseMatrix::zeros(self.basis.len())
        };
        Ok(ModelOperator::new(own.add(&other), format!("B_{j}({k})")))
    }

    /// `Z_j = X_1 + X_2 - X_j(1)`.
    pub fn monotone_complement(&self, j: u8) -> Result<ModelOperator<T>> {
        let x = self.replica(j, 1)?;
        Ok(ModelOperator::new(self.sum().matrix.sub(&x.matrix), format!("Z_{j}")))
    }

    pub fn vacuum(&self) -> SparseVec<T> {
        unit(0)
    }

    /// Basis indices of words of length `k` starting with factor `first`
    /// (the vacuum alone for `k = 0`).
    pub fn level_words(&self, first: u8, k: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| {
                let w = self.basis.word(i);
                w.len() == k && (k == 0 || w[0].factor == first)
            })
            .collect()
    }

    /// Unit vector on the word `(first,1)(other,1)...` of length `k`, with its weight.
    pub fn level_state(&self, first: u8, k: usize) -> Result<(SparseVec<T>, usize)> {
        let word: Vec<Letter> = (0..k).map(|i| Letter::new(if i % 2 == 0 { first } else { other_factor(first) }, 1)).collect();
        let idx = self
            .basis
            .index_of(&word)
            .ok_or(Error::DepthExceeded { requested: k, cap: self.basis.depth_cap() })?;
        Ok((unit(idx), k))
    }

    /// Rational unit combination of up to four level-`k` words of weight at most
    /// `k + 2`, with its largest weight.
    pub fn random_level_state<R: Rng>(&self, first: u8, k: usize, rng: &mut R) -> Result<(SparseVec<T>, usize)> {
        let candidates: Vec<usize> =
            self.level_words(first, k).into_iter().filter(|&i| weight(self.basis.word(i)) <= k + 2).collect();
        if candidates.is_empty() {
            return Err(Error::DepthExceeded { requested: k, cap: self.basis.depth_cap() });
        }
        let usable: Vec<&[i64]> = UNIT_COMBOS.iter().copied().filter(|c| c.len() - 1 <= candidates.len()).collect();
        if usable.is_empty() {
            return Ok((unit(candidates[0]), weight(self.basis.word(candidates[0]))));
        }
        let combo = usable[rng.gen_range(0..usable.len())];
        let (nums, den) = combo.split_at(combo.len() - 1);
        let picks = sample(rng, candidates.len(), nums.len());
        let mut v = SparseVec::new();
        let mut w_max = 0;
        for (p, &num) in picks.iter().zip(nums) {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let idx = candidates[p];
            v.insert(idx, T::ratio(sign * num, den[0]));
            w_max = w_max.max(weight(self.basis.word(idx)));
        }
        Ok((v, w_max))
    }

    /// Moments `⟨Aⁿη, η⟩` of order up to this are free of truncation error for
    /// `η` supported on words of weight at most `state_weight`.
    pub fn exact_order(&self, state_weight: usize) -> usize {
        self.basis.certified_order(state_weight).min(self.factor_exact[0]).min(self.factor_exact[1])
    }

    /// Orthogonality of `(X_j(k), B_{j̄}(k+1))` with respect to the states of
    /// unit vectors `ξ` on level `k-1` words starting with `j̄` and `η` on level
    /// `k` words starting with `j`. Random superpositions when `rng` is given.
    pub fn replica_branch_orthogonality<R: Rng>(
        &self,
        j: u8,
        k: usize,
        n_max: usize,
        rng: Option<&mut R>,
    ) -> Result<CheckReport> {
        let jb = other_factor(j);
        let ((xi, s_xi), (eta, s_eta)) = match rng {
            None => (self.level_state(jb, k - 1)?, self.level_state(j, k)?),
            Some(r) => (self.random_level_state(jb, k - 1, r)?, self.random_level_state(j, k, r)?),
        };
        let longest = 5 * n_max;
        let cap = self.basis.weight_cap().min(self.basis.depth_cap());
        let needed = (s_xi + longest / 2).max(s_eta + n_max / 2);
        if needed > cap {
            return Err(Error::DepthExceeded { requested: needed, cap });
        }
        let a = self.replica(j, k)?;
        let b = self.branch(jb, k + 1)?;
        Ok(orthogonality_check(&a.matrix, &b.matrix, &xi, &eta, n_max))
    }
}
