//! Truncated K-transforms of a Jacobi measure as iterated orthogonal convolutions.

use crate::error::{Error, Result};
use crate::measure::{approximant_k, JacobiParams, MeasureRep};
use crate::poly::{Poly, RatFunc};
use crate::scalar::Scalar;

/// `μ_1, ..., μ_m` with `K_{μ_1} = α_0 + ω_0/(z - α_1)` and `K_{μ_n} = ω_{n-1}/(z - α_n)`,
/// so that `K` of `μ_1 ⊢ (μ_2 ⊢ (... ⊢ μ_m))` is `[K_μ]_m`.
pub fn jacobi_chain_decomposition<T: Scalar>(j: &JacobiParams<T>, m: usize) -> Result<Vec<MeasureRep<T>>> {
    if m == 0 {
        return Err(Error::InvalidParameter("chain length must be at least 1".into()));
    }
    if let Some(levels) = j.levels() {
        if levels < m + 1 {
            return Err(Error::InsufficientDepth { needed: m + 1, available: levels });
        }
    }
    (1..=m)
        .map(|n| {
            let a0 = if n == 1 { j.alpha_at(0) } else { T::zero() };
            let params = JacobiParams::finite(vec![a0, j.alpha_at(n)], vec![j.omega_at(n - 1)])?;
            Ok(MeasureRep::from_jacobi(params))
        })
        .collect()
}

/// `K = z - F` of a measure with finitely many Jacobi levels, as a rational function.
pub fn finite_k_transform<T: Scalar>(j: &JacobiParams<T>) -> Result<RatFunc<T>> {
    let levels = j.levels().ok_or(Error::InvalidParameter("infinite continued fraction".into()))?;
    if levels == 1 {
        return Ok(RatFunc::from_poly(Poly::constant(j.alpha_at(0))));
    }
    approximant_k(j, levels - 1)
}

/// `K_{μ⊢ν}(z) = K_μ(z - K_ν(z))` folded from the right over the chain.
pub fn chain_k_transform<T: Scalar>(chain: &[MeasureRep<T>]) -> Result<RatFunc<T>> {
    let z = RatFunc::from_poly(Poly::z());
    let mut k: Option<RatFunc<T>> = None;
    for mu in chain.iter().rev() {
        let k_mu = finite_k_transform(&mu.jacobi()?)?;
        k = Some(match k {
            None => k_mu,
            Some(inner) => k_mu.compose(&z.sub(&inner))?,
        });
    }
    k.ok_or(Error::InvalidParameter("empty chain".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolve::series_ops::orthogonal_moments;
    use crate::measure::{jacobi_to_moments, TailPolicy};
    use crate::scalar::rat;
    use crate::Rational;

    fn semicircle() -> JacobiParams<Rational> {
        JacobiParams::new(vec![], vec![], TailPolicy::Wigner { a: rat(0, 1), b: rat(1, 1) }).unwrap()
    }

    #[test]
    fn single_link() {
        let j = JacobiParams::finite(vec![rat(1, 2), rat(-1, 1), rat(3, 1)], vec![rat(2, 1), rat(1, 3)]).unwrap();
        let chain = jacobi_chain_decomposition(&j, 1).unwrap();
        let k = chain_k_transform(&chain).unwrap();
        // α_0 + ω_0/(z - α_1)
        let want = RatFunc::from_poly(Poly::constant(rat(1, 2)))
            .add(&RatFunc::new(Poly::constant(rat(2, 1)), Poly::linear(rat(-1, 1))).unwrap());
        assert!(k.same_as(&want));
    }

    #[test]
    fn semicircle_chain_matches_approximants() {
        let j = semicircle();
        for m in 1..=5 {
            let chain = jacobi_chain_decomposition(&j, m).unwrap();
            assert_eq!(chain.len(), m);
            assert!(chain_k_transform(&chain).unwrap().same_as(&approximant_k(&j, m).unwrap()), "m = {m}");
        }
    }

    #[test]
    fn chain_moments_agree_with_the_measure() {
        let j = semicircle();
        for m in 1..=5 {
            let n = 2 * m - 1;
            let chain = jacobi_chain_decomposition(&j, m).unwrap();
            let mut acc = chain.last().unwrap().moments(n).unwrap().into_vec();
            for mu in chain.iter().rev().skip(1) {
                acc = orthogonal_moments(mu.moments(n).unwrap().as_slice(), &acc);
            }
            assert_eq!(acc, jacobi_to_moments(&j, n).unwrap().into_vec(), "m = {m}");
        }
    }

    #[test]
    fn too_few_levels() {
        let j = JacobiParams::finite(vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1)]).unwrap();
        assert_eq!(jacobi_chain_decomposition(&j, 2), Err(Error::InsufficientDepth { needed: 3, available: 2 }));
        assert!(jacobi_chain_decomposition(&j, 1).is_ok());
    }
}
