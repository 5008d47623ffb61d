use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Set partition of `{1..n}` with 1-based sorted blocks ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

/// Largest `n` accepted by [`enumerate_nc`].
pub const MAX_NC_N: usize = 14;

impl NCPartition {
    /// Validates that the blocks partition `{1..n}` without crossings.
    pub fn new(mut blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b[0]);
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidParameter(format!("blocks do not partition 1..={n}")));
            }
            seen[x] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidParameter(format!("blocks do not cover 1..={n}")));
        }
        let p = Self { blocks, n };
        if !p.is_noncrossing() {
            return Err(Error::InvalidParameter("partition is crossing".into()));
        }
        Ok(p)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn is_noncrossing(&self) -> bool {
        let mut owner = vec![0; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                owner[x] = k;
            }
        }
        // no i < k < j < l with i, j in one block and k, l in another
        for p in &self.blocks {
            for w in p.windows(2) {
                let (i, j) = (w[0], w[1]);
                for k in i + 1..j {
                    let q = &self.blocks[owner[k]];
                    if q.iter().any(|&l| l > j) || q.iter().any(|&l| l < i) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `q` encloses `p`: some `i, j ∈ q` with `i < min p` and `max p < j`.
    fn encloses(q: &[usize], p: &[usize]) -> bool {
        let (lo, hi) = (p[0], *p.last().unwrap());
        q.iter().any(|&i| i < lo) && q.iter().any(|&j| j > hi)
    }

    /// `1 +` number of enclosing blocks.
    pub fn block_depth(&self, k: usize) -> usize {
        let p = &self.blocks[k];
        1 + self.blocks.iter().filter(|q| Self::encloses(q, p)).count()
    }

    pub fn depth(&self) -> usize {
        (0..self.blocks.len()).map(|k| self.block_depth(k)).max().unwrap_or(0)
    }
}

/// All non-crossing partitions of `{1..n}`.
pub fn enumerate_nc(n: usize) -> Vec<NCPartition> {
    assert!((1..=MAX_NC_N).contains(&n), "enumerate_nc: n = {n} outside 1..={MAX_NC_N}");
    nc_on(1, n).into_iter().map(|mut blocks| {
        blocks.sort_by_key(|b| b[0]);
        NCPartition { blocks, n }
    }).collect()
}

/// Non-crossing partitions of the interval `lo..=hi`: the block of `lo` is
/// chosen element by element, and each gap it leaves is partitioned independently.
fn nc_on(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    grow(vec![lo], hi, vec![Vec::new()], &mut out);
    out
}

fn grow(block: Vec<usize>, hi: usize, inside: Vec<Vec<Vec<usize>>>, out: &mut Vec<Vec<Vec<usize>>>) {
    let last = *block.last().unwrap();
    for rest in nc_on(last + 1, hi) {
        for inner in &inside {
            let mut p = Vec::with_capacity(inner.len() + rest.len() + 1);
            p.push(block.clone());
            p.extend(inner.iter().cloned());
            p.extend(rest.iter().cloned());
            out.push(p);
        }
    }
    for next in last + 1..=hi {
        let gap = nc_on(last + 1, next - 1);
        let combined: Vec<Vec<Vec<usize>>> = inside
            .iter()
            .flat_map(|a| {
                gap.iter().map(move |g| {
                    let mut v = a.clone();
                    v.extend(g.iter().cloned());
                    v
                })
            })
            .collect();
        let mut b = block.clone();
        b.push(next);
        grow(b, hi, combined, out);
    }
}

/// For each block-size multiset of `NC(n)` (sorted descending), the number of
/// partitions having it.
pub fn nc_block_type_counts(n: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut counts = BTreeMap::new();
    for p in enumerate_nc(n) {
        let mut sizes: Vec<usize> = p.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        *counts.entry(sizes).or_insert(0) += 1;
    }
    counts
}
