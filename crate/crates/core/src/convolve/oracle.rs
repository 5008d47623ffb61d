//! Free convolution through additivity of free cumulants, summing over `NC(n)`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partitions::{nc_block_type_counts, MAX_NC_N};
use crate::scalar::Scalar;

/// Largest order the oracle accepts (non-crossing enumeration cost).
pub const MAX_ORACLE_ORDER: usize = 12;

/// `Σ_{π ∈ NC(n), π ≠ 1_n} Π_{B ∈ π} κ_{|B|}`, grouped by block-size multiset.
fn proper_nc_sum<T: Scalar>(kappa: &[T], n: usize, counts: &[(Vec<usize>, u64)]) -> T {
    let mut acc = T::zero();
    for (sizes, count) in counts {
        if sizes.len() == 1 {
            continue;
        }
        let prod = sizes.iter().fold(T::one(), |p, &s| p * kappa[s - 1].clone());
        acc = acc + prod * T::from_u64(*count).expect("count fits");
    }
    debug_assert!(counts.iter().all(|(s, _)| s.iter().sum::<usize>() == n));
    acc
}

type TypeTable = Vec<(Vec<usize>, u64)>;

static TABLES: [OnceLock<TypeTable>; MAX_ORACLE_ORDER] = [const { OnceLock::new() }; MAX_ORACLE_ORDER];

fn type_tables(n: usize) -> Result<Vec<&'static TypeTable>> {
    if n > MAX_ORACLE_ORDER.min(MAX_NC_N) {
        return Err(Error::OrderExceeded { needed: n, available: MAX_ORACLE_ORDER });
    }
    Ok((1..=n).map(|k| TABLES[k - 1].get_or_init(|| nc_block_type_counts(k).into_iter().collect())).collect())
}

/// Free cumulants `κ_1..κ_N` from moments `m_1..m_N`.
pub fn free_cumulants<T: Scalar>(m: &[T]) -> Result<Vec<T>> {
    let tables = type_tables(m.len())?;
    let mut kappa: Vec<T> = Vec::with_capacity(m.len());
    for n in 1..=m.len() {
        let rest = proper_nc_sum(&kappa_padded(&kappa, n), n, tables[n - 1]);
        kappa.push(m[n - 1].clone() - rest);
    }
    Ok(kappa)
}

/// Moments from free cumulants.
pub fn moments_from_free_cumulants<T: Scalar>(kappa: &[T]) -> Result<Vec<T>> {
    let tables = type_tables(kappa.len())?;
    Ok((1..=kappa.len())
        .map(|n| kappa[n - 1].clone() + proper_nc_sum(kappa, n, tables[n - 1]))
        .collect())
}

// proper partitions of n only use κ_1..κ_{n-1}; pad so indexing stays uniform
fn kappa_padded<T: Scalar>(kappa: &[T], n: usize) -> Vec<T> {
    let mut k = kappa.to_vec();
    k.resize(n, T::zero());
    k
}

pub fn free_cumulant_oracle_moments<T: Scalar>(mu: &[T], nu: &[T]) -> Result<Vec<T>> {
    let n = mu.len().min(nu.len());
    let a = free_cumulants(&mu[..n])?;
    let b = free_cumulants(&nu[..n])?;
    let sum: Vec<T> = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
    moments_from_free_cumulants(&sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rational;

    #[test]
    fn bernoulli_cumulants() {
        let m: Vec<Rational> = (1..=6).map(|k| rat((k % 2 == 0) as i64, 1)).collect();
        let k = free_cumulants(&m).unwrap();
        assert_eq!(k, vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(2, 1)]);
        assert_eq!(moments_from_free_cumulants(&k).unwrap(), m);
    }

    #[test]
    fn semicircle_has_one_cumulant() {
        let m: Vec<Rational> = [0, 1, 0, 2, 0, 5, 0, 14].iter().map(|&x| rat(x, 1)).collect();
        let k = free_cumulants(&m).unwrap();
        let mut want = vec![rat(0, 1); 8];
        want[1] = rat(1, 1);
        assert_eq!(k, want);
    }

    #[test]
    fn order_guard() {
        let m = vec![rat(0, 1); MAX_ORACLE_ORDER + 1];
        assert!(free_cumulants(&m).is_err());
    }
}
