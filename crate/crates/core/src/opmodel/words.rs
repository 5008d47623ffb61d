//! Truncated orthonormal basis of the free product space: `ξ` and alternating
//! simple tensors of factor basis vectors.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Basis vector `index ≥ 1` of the complement of `ξ_factor` in factor `factor ∈ {1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub factor: u8,
    pub index: usize,
}

impl Letter {
    pub fn new(factor: u8, index: usize) -> Self {
        Self { factor, index }
    }
}

/// Simple tensor `h_1 ⊗ h_2 ⊗ ...`, first letter outermost. The empty word is `ξ`.
pub type Word = Vec<Letter>;

pub fn other_factor(f: u8) -> u8 {
    3 - f
}

pub fn weight(word: &[Letter]) -> usize {
    word.iter().map(|l| l.index).sum()
}

pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "ξ".into();
    }
    let mut s = String::new();
    for (k, l) in word.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{}.{}", l.factor, l.index);
    }
    s
}

/// Words of length at most `depth_cap` and weight (sum of letter indices) at most
/// `weight_cap`, letters of factor `i` indexed `1..sizes[i-1]`.
///
/// Tridiagonal factors move the weight by at most one per application, so a
/// closed path of length `n` from a state of weight `s` never leaves the basis
/// when `s + ⌊n/2⌋ ≤ min(weight_cap, depth_cap)`.
#[derive(Clone, Debug)]
pub struct WordBasis {
    words: Vec<Word>,
    lookup: HashMap<Word, usize>,
    sizes: [usize; 2],
    weight_cap: usize,
    depth_cap: usize,
}

impl WordBasis {
    pub fn new(sizes: [usize; 2], weight_cap: usize, depth_cap: usize) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter("factor dimension must be at least 1".into()));
        }
        let mut words: Vec<Word> = vec![vec![]];
        let mut frontier: Vec<Word> = vec![vec![]];
        for _ in 0..depth_cap {
            let mut next = Vec::new();
            for w in &frontier {
                let w_weight = weight(w);
                for f in [1u8, 2] {
                    if w.first().is_some_and(|l| l.factor == f) {
                        continue;
                    }
                    for idx in 1..sizes[f as usize - 1] {
                        if w_weight + idx > weight_cap {
                            break;
                        }
                        let mut nw = Vec::with_capacity(w.len() + 1);
                        nw.push(Letter::new(f, idx));
                        nw.extend_from_slice(w);
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let lookup = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(Self { words, lookup, sizes, weight_cap, depth_cap })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &[Letter] {
        &self.words[i]
    }

    pub fn index_of(&self, word: &[Letter]) -> Option<usize> {
        self.lookup.get(word).copied()
    }

    /// Factor space dimensions `d_1, d_2` (including `ξ_i`).
    pub fn sizes(&self) -> [usize; 2] {
        self.sizes
    }

    pub fn weight_cap(&self) -> usize {
        self.weight_cap
    }

    pub fn depth_cap(&self) -> usize {
        self.depth_cap
    }

    /// Largest `n` for which `⟨Aⁿη, η⟩` is unaffected by truncation, for `A` a
    /// sum of coordinate compressions of `λ_1, λ_2` and `η` supported on words
    /// of weight at most `state_weight`.
    pub fn certified_order(&self, state_weight: usize) -> usize {
        let cap = self.weight_cap.min(self.depth_cap);
        if state_weight > cap {
            return 0;
        }
        2 * (cap - state_weight) + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        // two 2-dimensional factors: one letter per factor, alternating words
        let b = WordBasis::new([2, 2], 10, 3).unwrap();
        assert_eq!(b.len(), 1 + 2 + 2 + 2);
        assert_eq!(format_word(b.word(0)), "ξ");
        assert_eq!(format_word(b.word(1)), "1.1");
        assert_eq!(format_word(b.word(3)), "1.1 2.1");
        assert_eq!(format_word(b.word(6)), "2.1 1.1 2.1");
        for (i, w) in b.words().iter().enumerate() {
            assert_eq!(b.index_of(w), Some(i));
        }
    }

    #[test]
    fn weight_cap_bounds_words() {
        let b = WordBasis::new([8, 8], 10, 10).unwrap();
        assert!(b.words().iter().all(|w| weight(w) <= 10 && w.len() <= 10));
        assert!(b.words().iter().all(|w| w.windows(2).all(|p| p[0].factor != p[1].factor)));
        assert!(b.words().iter().all(|w| w.iter().all(|l| (1..8).contains(&l.index))));
        // compositions of s ≤ 10 with parts ≤ 7, two choices of first factor
        let compositions = |s: usize| -> usize {
            let mut c = vec![0usize; s + 1];
            c[0] = 1;
            for t in 1..=s {
                c[t] = (1..=7.min(t)).map(|p| c[t - p]).sum();
            }
            c[s]
        };
        let want = 1 + (1..=10).map(|s| 2 * compositions(s)).sum::<usize>();
        assert_eq!(b.len(), want);
        assert_eq!(b.certified_order(0), 21);
        assert_eq!(b.certified_order(3), 15);
    }

    #[test]
    fn trivial_factor() {
        let b = WordBasis::new([1, 3], 4, 4).unwrap();
        assert_eq!(b.len(), 3);
        assert!(WordBasis::new([0, 3], 4, 4).is_err());
    }
}
