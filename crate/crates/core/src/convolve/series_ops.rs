//! Moment-level convolutions on slices `m_1..m_N`; every result has `N` entries.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::{k_to_moments, moment_series, moments_to_k, TailSeries};

pub fn boolean_moments<T: Scalar>(mu: &[T], nu: &[T]) -> Vec<T> {
    let n = mu.len().min(nu.len());
    k_to_moments(&moments_to_k(&mu[..n]).add(&moments_to_k(&nu[..n])))
}

/// `G_{μ▷ν} = G_μ ∘ F_ν`, i.e. `M_{μ▷ν}(w) = Σ_k m_k(μ) w^k M_ν(w)^{k+1}` with
/// `M(w) = 1 + Σ m_k w^k`.
pub fn monotone_moments<T: Scalar>(mu: &[T], nu: &[T]) -> Vec<T> {
    let n = mu.len().min(nu.len());
    if n == 0 {
        return Vec::new();
    }
    let m_nu = moment_series(&nu[..n]);
    let w = TailSeries::monomial(T::one(), 1, n);
    let mut term = m_nu.clone();
    let mut acc = m_nu.clone();
    for m in &mu[..n] {
        term = term.mul(&w).mul(&m_nu);
        acc = acc.add(&term.scale(m));
    }
    acc.into_coeffs().into_iter().skip(1).collect()
}

/// `K_{μ⊢ν}(z) = K_μ(z - K_ν(z))`.
pub fn orthogonal_moments<T: Scalar>(mu: &[T], nu: &[T]) -> Vec<T> {
    let n = mu.len().min(nu.len());
    if n == 0 {
        return Vec::new();
    }
    let k = TailSeries::substitute_into_shifted(&moments_to_k(&mu[..n]), &moments_to_k(&nu[..n]));
    k_to_moments(&k)
}

/// `μ ⊢_1 ν = μ ⊢ ν`, `μ ⊢_m ν = μ ⊢ (ν ⊢_{m-1} μ)`.
pub fn orthogonal_iterated_moments<T: Scalar>(mu: &[T], nu: &[T], m: usize) -> Result<Vec<T>> {
    if m == 0 {
        return Err(Error::InvalidParameter("iteration count must be at least 1".into()));
    }
    // unrolled from the inside: ν ⊢ μ, μ ⊢ (ν ⊢ μ), ...
    let (first, second) = if m % 2 == 1 { (mu, nu) } else { (nu, mu) };
    let mut inner = orthogonal_moments(first, second);
    let mut outer_is_first = false;
    for _ in 1..m {
        let outer = if outer_is_first { first } else { second };
        inner = orthogonal_moments(outer, &inner);
        outer_is_first = !outer_is_first;
    }
    Ok(inner)
}

/// Iterations after which `μ ⊢_m ν` has stabilized up to order `n`.
pub fn sfree_iterations(n: usize) -> usize {
    n.div_ceil(2) + 1
}

pub fn sfree_moments<T: Scalar>(mu: &[T], nu: &[T]) -> Vec<T> {
    let n = mu.len().min(nu.len());
    orthogonal_iterated_moments(mu, nu, sfree_iterations(n)).expect("positive iteration count")
}

/// The two decompositions of the free convolution: `μ ▷ (ν ⊞ₛ μ)` and
/// `(μ ⊞ₛ ν) ⊎ (ν ⊞ₛ μ)`.
pub fn free_routes<T: Scalar>(mu: &[T], nu: &[T]) -> (Vec<T>, Vec<T>) {
    let s_nu_mu = sfree_moments(nu, mu);
    let s_mu_nu = sfree_moments(mu, nu);
    let a = monotone_moments(mu, &s_nu_mu);
    let b = boolean_moments(&s_mu_nu, &s_nu_mu);
    (a, b)
}

/// Index (1-based order) of the first disagreement, exact or within `1e-9` for floats.
pub fn first_mismatch<T: Scalar>(a: &[T], b: &[T]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()) + 1);
    }
    a.iter().zip(b).position(|(x, y)| !x.close_to(y, 1e-9)).map(|i| i + 1)
}

pub fn free_moments<T: Scalar>(mu: &[T], nu: &[T]) -> Result<Vec<T>> {
    let (a, b) = free_routes(mu, nu);
    match first_mismatch(&a, &b) {
        Some(order) => Err(Error::RouteMismatch { order }),
        None => Ok(a),
    }
}
