//! Depth-two "bridge" partitions, their refinements, and the bijections onto
//! `C(n) = {(τ, σ) : σ ∈ I_odd(τ)}` and `F(n) = {(m, σ, j)}`.

use super::interval::{enumerate_interval, odd_refinements, IntervalComposition};
use super::noncrossing::{enumerate_nc, NCPartition};
use crate::error::{Error, Result};

/// Outer (depth 1) and inner (depth 2) blocks, each list sorted by minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecomposablePartition {
    pub outer: Vec<Vec<usize>>,
    pub inner: Vec<Vec<usize>>,
    pub n: usize,
}

/// A decomposable partition with a refinement `η'` of its outer blocks that
/// only cuts bridges (consecutive integers of an outer block stay together).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecompositionPair {
    pub pi: DecomposablePartition,
    pub eta_outer: Vec<Vec<usize>>,
}

/// `(m, σ, j)`: `m` outer elements, `σ ∈ I(m)` from `η'`, and `j_k` the size of
/// the inner block right after the `k`-th outer element (`k < m`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub m: usize,
    pub sigma: IntervalComposition,
    pub j: Vec<usize>,
}

impl DecomposablePartition {
    /// Splits a non-crossing partition into depth-1 and depth-2 blocks, if it
    /// has depth at most two and no two consecutive inner blocks are adjacent.
    pub fn from_nc(p: &NCPartition) -> Option<Self> {
        let mut outer = Vec::new();
        let mut inner: Vec<Vec<usize>> = Vec::new();
        for (k, b) in p.blocks().iter().enumerate() {
            match p.block_depth(k) {
                1 => outer.push(b.clone()),
                2 => inner.push(b.clone()),
                _ => return None,
            }
        }
        // not neighbors: some outer element lies between consecutive inner blocks
        if inner.windows(2).any(|w| w[0].last().unwrap() + 1 >= w[1][0]) {
            return None;
        }
        Some(Self { outer, inner, n: p.n() })
    }

    /// Gaps `(a, b)` between consecutive elements of one outer block, i.e. the bridges.
    fn bridges(&self) -> Vec<(usize, usize)> {
        self.outer
            .iter()
            .flat_map(|b| b.windows(2).filter(|w| w[1] > w[0] + 1).map(|w| (w[0], w[1])))
            .collect()
    }
}

/// `D_2(n)`, found by filtering all non-crossing partitions.
pub fn enumerate_d2(n: usize) -> Vec<DecomposablePartition> {
    enumerate_nc(n).iter().filter_map(DecomposablePartition::from_nc).collect()
}

/// `DP_2(n)`: every element of `D_2(n)` with every admissible `η'`.
pub fn enumerate_dp2(n: usize) -> Vec<DecompositionPair> {
    let mut out = Vec::new();
    for pi in enumerate_d2(n) {
        let bridges = pi.bridges();
        for cut in 0..1u64 << bridges.len() {
            let cuts: Vec<usize> =
                bridges.iter().enumerate().filter(|(i, _)| cut >> i & 1 == 1).map(|(_, &(a, _))| a).collect();
            let mut eta = Vec::new();
            for b in &pi.outer {
                let mut cur = Vec::new();
                for &x in b {
                    cur.push(x);
                    if cuts.contains(&x) {
                        eta.push(std::mem::take(&mut cur));
                    }
                }
                eta.push(cur);
            }
            out.push(DecompositionPair { pi: pi.clone(), eta_outer: eta });
        }
    }
    out
}

/// `C(n)`: all `(τ, σ)` with `σ ∈ I_odd(τ)`.
pub fn enumerate_c(n: usize) -> Vec<(IntervalComposition, IntervalComposition)> {
    enumerate_interval(n)
        .into_iter()
        .flat_map(|tau| odd_refinements(&tau).into_iter().map(move |s| (tau.clone(), s)))
        .collect()
}

/// `F(n)`: all `(m, σ, j)` with `σ ∈ I(m)` and `j ∈ ℕ^{m-1}` summing to `n - m`.
pub fn enumerate_f(n: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for m in 1..=n {
        for j in weak_compositions(n - m, m - 1) {
            for sigma in enumerate_interval(m) {
                out.push(Triple { m, sigma, j: j.clone() });
            }
        }
    }
    out
}

/// Tuples of `k` non-negative integers summing to `total`.
fn weak_compositions(total: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=total)
        .flat_map(|first| {
            weak_compositions(total - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn sizes(blocks: &[Vec<usize>]) -> IntervalComposition {
    IntervalComposition::from_parts_unchecked(blocks.iter().map(Vec::len).collect())
}

/// `f(π) = (τ, σ)`: `τ` fuses each outer block with the inner blocks under it,
/// `σ` is the coarsest interval refinement of `π`.
pub fn bijection_f(pi: &DecomposablePartition) -> (IntervalComposition, IntervalComposition) {
    let hulls: Vec<usize> = pi.outer.iter().map(|b| b.last().unwrap() - b[0] + 1).collect();
    let mut owner = vec![0usize; pi.n + 1];
    for (k, b) in pi.outer.iter().chain(&pi.inner).enumerate() {
        for &x in b {
            owner[x] = k;
        }
    }
    let mut runs = vec![1usize];
    for x in 2..=pi.n {
        if owner[x] == owner[x - 1] {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    (IntervalComposition::from_parts_unchecked(hulls), IntervalComposition::from_parts_unchecked(runs))
}

/// Inverse of [`bijection_f`]: within each block of `τ` the subblocks of `σ`
/// alternate outer run, inner block, outer run, ...
pub fn f_inverse(tau: &IntervalComposition, sigma: &IntervalComposition) -> Result<DecomposablePartition> {
    if !sigma.refines(tau) {
        return Err(Error::InvalidParameter(format!("{sigma} does not refine {tau}")));
    }
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut runs = sigma.blocks().into_iter();
    for hull in tau.blocks() {
        let mut sub: Vec<Vec<usize>> = Vec::new();
        while sub.last().and_then(|r| r.last()) != Some(hull.end()) {
            sub.push(runs.next().expect("σ refines τ").collect());
        }
        if sub.len() % 2 == 0 {
            return Err(Error::InvalidParameter(format!("{sigma} is not an odd refinement of {tau}")));
        }
        let mut block = Vec::new();
        for (k, run) in sub.into_iter().enumerate() {
            if k % 2 == 0 {
                block.extend(run);
            } else {
                inner.push(run);
            }
        }
        outer.push(block);
    }
    Ok(DecomposablePartition { outer, inner, n: tau.total() })
}

/// `g(π, η) = (m, σ, j)`.
pub fn bijection_g(pair: &DecompositionPair) -> Triple {
    let pi = &pair.pi;
    let mut legs: Vec<usize> = pi.outer.iter().flatten().copied().collect();
    legs.sort_unstable();
    let m = legs.len();
    let j = legs[..m - 1]
        .iter()
        .map(|&x| pi.inner.iter().find(|b| b[0] == x + 1).map_or(0, Vec::len))
        .collect();
    Triple { m, sigma: sizes(&pair.eta_outer), j }
}

/// Inverse of [`bijection_g`]: lay out the `m` legs, insert an inner block of
/// size `j_k` after leg `k`, group legs by `σ`; consecutive `σ` groups belong to
/// the same outer block exactly when an inner block sits between them.
pub fn g_inverse(t: &Triple) -> Result<DecompositionPair> {
    if t.sigma.total() != t.m || t.j.len() + 1 != t.m {
        return Err(Error::InvalidParameter("triple shape does not match m".into()));
    }
    let mut pos = 0;
    let mut leg_pos = Vec::with_capacity(t.m);
    let mut inner = Vec::new();
    for k in 0..t.m {
        pos += 1;
        leg_pos.push(pos);
        if let Some(&size) = t.j.get(k) {
            if size > 0 {
                inner.push((pos + 1..=pos + size).collect::<Vec<_>>());
                pos += size;
            }
        }
    }
    let mut eta = Vec::new();
    let mut start = 0;
    for &s in t.sigma.parts() {
        eta.push(leg_pos[start..start + s].to_vec());
        start += s;
    }
    let mut outer: Vec<Vec<usize>> = Vec::new();
    let mut start = 0;
    for (i, &s) in t.sigma.parts().iter().enumerate() {
        let group = &leg_pos[start..start + s];
        let bridged = i > 0 && t.j[start - 1] > 0;
        if bridged {
            outer.last_mut().unwrap().extend_from_slice(group);
        } else {
            outer.push(group.to_vec());
        }
        start += s;
    }
    let pi = DecomposablePartition { outer, inner, n: pos };
    Ok(DecompositionPair { pi, eta_outer: eta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn example_pi() -> DecomposablePartition {
        DecomposablePartition {
            outer: vec![vec![1, 2, 5, 6, 9], vec![10, 13, 17]],
            inner: vec![vec![3, 4], vec![7, 8], vec![11, 12], vec![14, 15, 16]],
            n: 17,
        }
    }

    fn ic(p: &[usize]) -> IntervalComposition {
        IntervalComposition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_cardinalities() {
        assert_eq!(enumerate_d2(1).len(), 1);
        assert_eq!(enumerate_d2(3).len(), 5);
        assert_eq!(enumerate_c(3).len(), 5);
    }

    #[test]
    fn seventeen_point_example() {
        let pi = example_pi();
        let nc = NCPartition::new(pi.outer.iter().chain(&pi.inner).cloned().collect(), 17).unwrap();
        assert_eq!(DecomposablePartition::from_nc(&nc), Some(pi.clone()));
        let (tau, sigma) = bijection_f(&pi);
        assert_eq!(tau, ic(&[9, 8]));
        // σ' = {1,2},{5,6},{9},{10},{13},{17} interleaved with the inner blocks
        assert_eq!(sigma, ic(&[2, 2, 2, 2, 1, 1, 2, 1, 3, 1]));
        assert_eq!(f_inverse(&tau, &sigma).unwrap(), pi);

        let pair = DecompositionPair {
            pi: pi.clone(),
            eta_outer: vec![vec![1, 2, 5, 6], vec![9], vec![10, 13], vec![17]],
        };
        let t = bijection_g(&pair);
        assert_eq!(t.m, 8);
        assert_eq!(t.sigma, ic(&[4, 1, 2, 1]));
        assert_eq!(t.j, vec![0, 2, 0, 2, 0, 2, 3]);
        assert_eq!(g_inverse(&t).unwrap(), pair);
    }

    #[test]
    fn trivial_images() {
        let n = 5;
        let one = DecomposablePartition { outer: vec![(1..=n).collect()], inner: vec![], n };
        assert_eq!(bijection_f(&one), (ic(&[n]), ic(&[n])));
        let pair = DecompositionPair { pi: one.clone(), eta_outer: one.outer.clone() };
        assert_eq!(bijection_g(&pair), Triple { m: n, sigma: ic(&[n]), j: vec![0; n - 1] });
    }

    #[test]
    fn f_is_a_bijection() {
        for n in 1..=9 {
            let d2 = enumerate_d2(n);
            let c = enumerate_c(n);
            assert_eq!(d2.len(), c.len(), "n = {n}");
            let image: HashSet<_> = d2.iter().map(bijection_f).collect();
            assert_eq!(image, c.iter().cloned().collect::<HashSet<_>>());
            for pi in &d2 {
                let (tau, sigma) = bijection_f(pi);
                assert_eq!(&f_inverse(&tau, &sigma).unwrap(), pi);
            }
        }
    }

    #[test]
    fn g_is_a_bijection() {
        for n in 1..=9 {
            let dp2 = enumerate_dp2(n);
            let f = enumerate_f(n);
            assert_eq!(dp2.len(), f.len(), "n = {n}");
            let image: HashSet<_> = dp2.iter().map(bijection_g).collect();
            assert_eq!(image, f.iter().cloned().collect::<HashSet<_>>());
            for pair in &dp2 {
                assert_eq!(&g_inverse(&bijection_g(pair)).unwrap(), pair);
            }
        }
    }

    #[test]
    fn f_cardinality_count() {
        // m = 1 contributes only for n = 1; otherwise 2^(m-1) σ's times C(n-2, m-2) j's
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        for n in 2..=9u64 {
            let want: u64 = (2..=n).map(|m| (1 << (m - 1)) * binom(n - 2, m - 2)).sum();
            assert_eq!(enumerate_f(n as usize).len() as u64, want);
        }
        assert_eq!(enumerate_f(1).len(), 1);
    }

    #[test]
    fn rejects_bad_inverse_input() {
        assert!(f_inverse(&ic(&[2]), &ic(&[1, 1])).is_err());
        assert!(f_inverse(&ic(&[2]), &ic(&[3])).is_err());
        assert!(g_inverse(&Triple { m: 2, sigma: ic(&[1]), j: vec![0] }).is_err());
    }
}
