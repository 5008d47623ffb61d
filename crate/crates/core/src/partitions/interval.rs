use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Interval partition of `{1..n}` stored as its block sizes in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalComposition {
    parts: Vec<usize>,
}

impl IntervalComposition {
    /// The empty composition (of `0`) is allowed; it is the even half of a one-block split.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("composition parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Self { parts }
    }

    /// The one-block partition `(n)`.
    pub fn single(n: usize) -> Self {
        Self::from_parts_unchecked(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The total `n`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Blocks as 1-based inclusive ranges.
    pub fn blocks(&self) -> Vec<std::ops::RangeInclusive<usize>> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..=start + p - 1;
                start += p;
                r
            })
            .collect()
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::from_parts_unchecked(self.parts.iter().chain(&other.parts).copied().collect())
    }

    /// Every `σ ≥ self`, obtained by merging runs of adjacent blocks.
    pub fn coarsenings(&self) -> Vec<Self> {
        let r = self.parts.len();
        if r == 0 {
            return vec![self.clone()];
        }
        (0..1u64 << (r - 1))
            .map(|keep| {
                let mut parts = vec![self.parts[0]];
                for i in 1..r {
                    if keep >> (i - 1) & 1 == 1 {
                        parts.push(self.parts[i]);
                    } else {
                        *parts.last_mut().unwrap() += self.parts[i];
                    }
                }
                Self::from_parts_unchecked(parts)
            })
            .collect()
    }

    /// `self ≤ other` in the refinement order.
    pub fn refines(&self, other: &Self) -> bool {
        if self.total() != other.total() {
            return false;
        }
        let mut cuts = std::collections::HashSet::new();
        let mut acc = 0;
        for p in &self.parts {
            acc += p;
            cuts.insert(acc);
        }
        let mut acc = 0;
        other.parts.iter().all(|p| {
            acc += p;
            cuts.contains(&acc)
        })
    }
}

impl fmt::Display for IntervalComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Largest `n` accepted by the exhaustive enumerators of interval partitions.
pub const MAX_INTERVAL_N: usize = 24;

/// All `2^(n-1)` compositions of `n`, coarsest first.
pub fn enumerate_interval(n: usize) -> Vec<IntervalComposition> {
    assert!((1..=MAX_INTERVAL_N).contains(&n), "enumerate_interval: n = {n} outside 1..={MAX_INTERVAL_N}");
    IntervalComposition::single(n).refinements_all()
}

impl IntervalComposition {
    fn refinements_all(&self) -> Vec<Self> {
        let n = self.total();
        (0..1u64 << (n - 1))
            .map(|cuts| {
                let mut parts = vec![1];
                for i in 1..n {
                    if cuts >> (i - 1) & 1 == 1 {
                        parts.push(1);
                    } else {
                        *parts.last_mut().unwrap() += 1;
                    }
                }
                Self::from_parts_unchecked(parts)
            })
            .collect()
    }
}

/// Compositions of `n` with an odd number of parts.
fn odd_compositions(n: usize) -> Vec<Vec<usize>> {
    enumerate_interval(n).into_iter().filter(|c| c.len() % 2 == 1).map(|c| c.parts).collect()
}

/// `I_odd(π)`: every block split into an odd number of consecutive subblocks.
pub fn odd_refinements(pi: &IntervalComposition) -> Vec<IntervalComposition> {
    let mut out = vec![Vec::new()];
    for &p in &pi.parts {
        let choices = odd_compositions(p);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.extend(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(IntervalComposition::from_parts_unchecked).collect()
}

/// Splits `(j_1, ..., j_r)`, `r` odd, into `(j_1, j_3, ..., j_r)` and `(j_2, ..., j_{r-1})`.
pub fn alternating_split(c: &IntervalComposition) -> Result<(IntervalComposition, IntervalComposition)> {
    if c.len() % 2 == 0 {
        return Err(Error::EvenBlockCount(c.len()));
    }
    let odd = c.parts.iter().step_by(2).copied().collect();
    let even = c.parts.iter().skip(1).step_by(2).copied().collect();
    Ok((IntervalComposition::from_parts_unchecked(odd), IntervalComposition::from_parts_unchecked(even)))
}

fn moment<T: Scalar>(m: &[T], j: usize) -> Result<T> {
    m.get(j - 1).cloned().ok_or(Error::OrderExceeded { needed: j, available: m.len() })
}

/// `m(π) = m_{j_1} ⋯ m_{j_r}` for moments `m = (m_1, m_2, ...)`.
pub fn moment_function<T: Scalar>(m: &[T], pi: &IntervalComposition) -> Result<T> {
    pi.parts.iter().try_fold(T::one(), |acc, &j| Ok(acc * moment(m, j)?))
}

/// `k*(π) = Σ_{σ ≥ π} (-1)^{|σ|-|π|} m(σ)`.
pub fn inverse_boolean_cumulant<T: Scalar>(m: &[T], pi: &IntervalComposition) -> Result<T> {
    if pi.total() > m.len() {
        return Err(Error::OrderExceeded { needed: pi.total(), available: m.len() });
    }
    let mut acc = T::zero();
    for sigma in pi.coarsenings() {
        let v = moment_function(m, &sigma)?;
        if (pi.len() - sigma.len()) % 2 == 0 {
            acc = acc + v;
        } else {
            acc = acc - v;
        }
    }
    Ok(acc)
}

/// `Σ_{π ∈ I(n)} (-1)^{|π|} m(π)`, the coefficient of `z^{1-n}` in `F(z) - z`.
pub fn f_coefficient<T: Scalar>(m: &[T], n: usize) -> Result<T> {
    if n > m.len() {
        return Err(Error::OrderExceeded { needed: n, available: m.len() });
    }
    let mut acc = T::zero();
    for pi in enumerate_interval(n) {
        let v = moment_function(m, &pi)?;
        acc = if pi.len() % 2 == 0 { acc + v } else { acc - v };
    }
    Ok(acc)
}

/// `m_{μ⊢ν}(π)` as a signed sum over `σ ∈ I_odd(π)` of `k*_μ(σ') m_ν(σ'')`, where
/// `k*_μ(σ')` is taken block by block of `π` (it is not multiplicative across blocks).
pub fn orthogonal_moment_combinatorial<T: Scalar>(mu: &[T], nu: &[T], pi: &IntervalComposition) -> Result<T> {
    let mut acc = T::zero();
    for sigma in odd_refinements(pi) {
        let mut term = T::one();
        let mut flips = 0;
        for (odd, even) in split_per_block(pi, &sigma) {
            flips += odd.len() - 1;
            term = term * inverse_boolean_cumulant(mu, &odd)? * moment_function(nu, &even)?;
        }
        if flips % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    Ok(acc)
}

/// Alternating split of `σ ∈ I_odd(π)` restricted to each block of `π`.
fn split_per_block(pi: &IntervalComposition, sigma: &IntervalComposition) -> Vec<(IntervalComposition, IntervalComposition)> {
    let mut parts = sigma.parts.iter().copied();
    pi.parts
        .iter()
        .map(|&block| {
            let mut sub = Vec::new();
            let mut used = 0;
            while used < block {
                let p = parts.next().expect("σ refines π");
                sub.push(p);
                used += p;
            }
            alternating_split(&IntervalComposition::from_parts_unchecked(sub)).expect("odd refinement")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn c(p: &[usize]) -> IntervalComposition {
        IntervalComposition::new(p.to_vec()).unwrap()
    }

    fn bern(n: usize) -> Vec<Rational> {
        (1..=n).map(|k| if k % 2 == 0 { Rational::one() } else { Rational::zero() }).collect()
    }

    fn arb_moments(n: usize) -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q)), n)
    }

    #[test]
    fn interval_counts() {
        assert_eq!(enumerate_interval(1), vec![c(&[1])]);
        let mut three = enumerate_interval(3);
        three.sort();
        assert_eq!(three, vec![c(&[1, 1, 1]), c(&[1, 2]), c(&[2, 1]), c(&[3])]);
        for n in 1..=12 {
            let all = enumerate_interval(n);
            assert_eq!(all.len(), 1 << (n - 1));
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|p| p.total() == n));
        }
    }

    #[test]
    fn odd_refinement_examples() {
        let mut r = odd_refinements(&c(&[3]));
        r.sort();
        assert_eq!(r, vec![c(&[1, 1, 1]), c(&[3])]);
        assert_eq!(odd_refinements(&c(&[2])), vec![c(&[2])]);
        assert_eq!(odd_refinements(&c(&[1, 2])), vec![c(&[1, 2])]);
        for sigma in odd_refinements(&c(&[4, 3, 5])) {
            assert!(sigma.refines(&c(&[4, 3, 5])));
        }
    }

    #[test]
    fn alternating_split_examples() {
        assert_eq!(alternating_split(&c(&[5])).unwrap(), (c(&[5]), c(&[])));
        assert_eq!(alternating_split(&c(&[1, 2, 3])).unwrap(), (c(&[1, 3]), c(&[2])));
        assert_eq!(alternating_split(&c(&[2, 1, 1, 1, 2])).unwrap(), (c(&[2, 1, 2]), c(&[1, 1])));
        assert_eq!(alternating_split(&c(&[1, 1])), Err(Error::EvenBlockCount(2)));
    }

    #[test]
    fn moment_function_examples() {
        let m = vec![rat(2, 1), rat(3, 1), rat(5, 1)];
        assert_eq!(moment_function(&m, &c(&[3])).unwrap(), rat(5, 1));
        assert_eq!(moment_function(&bern(2), &c(&[1, 1])).unwrap(), rat(0, 1));
        let wig = vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(2, 1)];
        assert_eq!(moment_function(&wig, &c(&[2, 2])).unwrap(), rat(1, 1));
        assert_eq!(moment_function(&m, &c(&[4])), Err(Error::OrderExceeded { needed: 4, available: 3 }));
    }

    #[test]
    fn orthogonal_moment_examples() {
        let mu = vec![rat(1, 2), rat(3, 1), rat(-2, 3), rat(5, 4)];
        let nu = vec![rat(-1, 3), rat(7, 2), rat(4, 1), rat(1, 5)];
        let (m1, m2, m3, m4) = (mu[0].clone(), mu[1].clone(), mu[2].clone(), mu[3].clone());
        let (n1, n2) = (nu[0].clone(), nu[1].clone());
        assert_eq!(orthogonal_moment_combinatorial(&mu, &nu, &c(&[1])).unwrap(), m1);
        assert_eq!(orthogonal_moment_combinatorial(&mu, &nu, &c(&[2])).unwrap(), m2);
        let want3 = m3.clone() + (m2.clone() - m1.clone() * m1.clone()) * n1.clone();
        assert_eq!(orthogonal_moment_combinatorial(&mu, &nu, &c(&[3])).unwrap(), want3);
        let two = rat(2, 1);
        let want4 = m4 + two.clone() * m3 * n1.clone() + m2.clone() * n2.clone()
            - two * m2 * m1.clone() * n1
            - m1.clone() * m1 * n2;
        assert_eq!(orthogonal_moment_combinatorial(&mu, &nu, &c(&[4])).unwrap(), want4);
        assert_eq!(orthogonal_moment_combinatorial(&bern(4), &bern(4), &c(&[4])).unwrap(), rat(2, 1));
    }

    proptest! {
        #[test]
        fn inverse_boolean_cumulants_match_closed_forms(m in arb_moments(12), n in 1usize..=3, p in 1usize..=3, k in 1usize..=3, l in 1usize..=3) {
            let mu = |j: usize| m[j - 1].clone();
            prop_assert_eq!(inverse_boolean_cumulant(&m, &c(&[n])).unwrap(), mu(n));
            prop_assert_eq!(inverse_boolean_cumulant(&m, &c(&[n, p])).unwrap(), mu(n) * mu(p) - mu(n + p));
            let three = mu(n) * mu(p) * mu(k) - mu(n + p) * mu(k) - mu(n) * mu(p + k) + mu(n + p + k);
            prop_assert_eq!(inverse_boolean_cumulant(&m, &c(&[n, p, k])).unwrap(), three);
            let four = mu(n) * mu(p) * mu(k) * mu(l) - mu(n + p) * mu(k) * mu(l) - mu(n) * mu(p + k) * mu(l)
                - mu(n) * mu(p) * mu(k + l) + mu(n + p) * mu(k + l) + mu(n + p + k) * mu(l)
                + mu(n) * mu(p + k + l) - mu(n + p + k + l);
            prop_assert_eq!(inverse_boolean_cumulant(&m, &c(&[n, p, k, l])).unwrap(), four);
        }

        #[test]
        fn moments_are_sums_of_coarser_cumulants(m in arb_moments(8), n in 1usize..=8, pick in any::<u64>()) {
            let all = enumerate_interval(n);
            let pi = &all[(pick % all.len() as u64) as usize];
            let mut sum = Rational::zero();
            for sigma in pi.coarsenings() {
                sum += inverse_boolean_cumulant(&m, &sigma).unwrap();
            }
            prop_assert_eq!(sum, moment_function(&m, pi).unwrap());
        }

        #[test]
        fn orthogonal_moments_are_multiplicative(mu in arb_moments(8), nu in arb_moments(8), n in 1usize..=8, pick in any::<u64>()) {
            let all = enumerate_interval(n);
            let pi = &all[(pick % all.len() as u64) as usize];
            let mut prod = Rational::one();
            for &b in pi.parts() {
                prod *= orthogonal_moment_combinatorial(&mu, &nu, &IntervalComposition::single(b)).unwrap();
            }
            prop_assert_eq!(orthogonal_moment_combinatorial(&mu, &nu, pi).unwrap(), prod);
        }

        #[test]
        fn orthogonal_moments_depend_on_low_orders_only(mu in arb_moments(8), nu in arb_moments(8), bump in arb_moments(8), n in 1usize..=8) {
            let base = orthogonal_moment_combinatorial(&mu, &nu, &IntervalComposition::single(n)).unwrap();
            let mut mu2 = mu.clone();
            let mut nu2 = nu.clone();
            for j in n + 1..=8 {
                mu2[j - 1] += bump[j - 1].clone();
            }
            for j in n.saturating_sub(1).max(1)..=8 {
                nu2[j - 1] += bump[j - 1].clone();
            }
            prop_assert_eq!(orthogonal_moment_combinatorial(&mu2, &nu2, &IntervalComposition::single(n)).unwrap(), base);
        }

        #[test]
        fn orthogonal_moments_are_homogeneous(mu in arb_moments(7), nu in arb_moments(7), lp in -5i64..=5, lq in 1i64..=4, n in 1usize..=7) {
            let lambda = rat(lp, lq);
            let dilate = |m: &[Rational]| -> Vec<Rational> {
                m.iter().enumerate().map(|(i, x)| x.clone() * num_traits::pow(lambda.clone(), i + 1)).collect()
            };
            let pi = IntervalComposition::single(n);
            let base = orthogonal_moment_combinatorial(&mu, &nu, &pi).unwrap();
            let scaled = orthogonal_moment_combinatorial(&dilate(&mu), &dilate(&nu), &pi).unwrap();
            prop_assert_eq!(scaled, base * num_traits::pow(lambda, n));
        }
    }

    #[test]
    fn f_coefficients_match_series() {
        let m: Vec<Rational> = [1, 3, -2, 5, 0, 7, 1, -4].iter().enumerate().map(|(i, &x)| rat(x, i as i64 + 1)).collect();
        let f = crate::series::moments_to_f(&m);
        for n in 1..=8 {
            assert_eq!(f_coefficient(&m, n).unwrap(), f.coeff(n - 1), "n = {n}");
        }
        assert!(f_coefficient(&m, 9).is_err());
    }

    #[test]
    fn integer_moments_give_integer_values() {
        let mu: Vec<Rational> = (1..=8).map(|k| rat(k * k - 3, 1)).collect();
        let nu: Vec<Rational> = (1..=8).map(|k| rat(2 - k, 1)).collect();
        for n in 1..=8 {
            assert!(orthogonal_moment_combinatorial(&mu, &nu, &IntervalComposition::single(n)).unwrap().is_integer());
        }
    }
}
