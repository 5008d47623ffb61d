//! Exhaustive checks of independence relations in vector states.

use super::sparse::{axpy, dot, SparseMatrix, SparseVec};
use crate::scalar::Scalar;

/// Tolerance used when the scalar is inexact.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckReport {
    pub checks: usize,
    pub violations: Vec<String>,
    /// Longest operator word evaluated.
    pub max_word_len: usize,
}

impl CheckReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self.max_word_len = self.max_word_len.max(other.max_word_len);
    }
}

/// Words over `{0, 1}` of length `0..=n`.
fn monomials(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| {
                [0u8, 1].map(|x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn fmt_word(names: [&str; 2], w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&x| names[x as usize]).collect()
}

/// `w v`, rightmost letter first.
fn apply_word<T: Scalar>(ops: [&SparseMatrix<T>; 2], w: &[u8], v: &SparseVec<T>) -> SparseVec<T> {
    w.iter().rev().fold(v.clone(), |acc, &x| ops[x as usize].apply(&acc))
}

/// `wᵀ v` for symmetric letters, leftmost letter first.
fn apply_adjoint<T: Scalar>(ops: [&SparseMatrix<T>; 2], w: &[u8], v: &SparseVec<T>) -> SparseVec<T> {
    w.iter().fold(v.clone(), |acc, &x| ops[x as usize].apply(&acc))
}

fn powers<T: Scalar>(a: &SparseMatrix<T>, v: &SparseVec<T>, n: usize) -> Vec<SparseVec<T>> {
    let mut out = vec![v.clone()];
    for k in 0..n {
        out.push(a.apply(&out[k]));
    }
    out
}

fn same<T: Scalar>(a: &T, b: &T) -> bool {
    a.close_to(b, FLOAT_TOL)
}

/// Orthogonality of the algebra of `b` to that of `a` with respect to
/// `(φ, ψ) = (⟨·ξ, ξ⟩, ⟨·η, η⟩)`, over monomials `w_1, w_2` in `a, b` of degree
/// at most `n_max` and exponents `1..=n_max`:
///
/// - `φ(w bᵠ) = φ(bᵠ w) = 0`,
/// - `φ(w_1 aᵖ bᵠ aʳ w_2) = ψ(bᵠ)(φ(w_1 aᵖ⁺ʳ w_2) − φ(w_1 aᵖ) φ(aʳ w_2))`.
///
/// Both matrices must be symmetric.
pub fn orthogonality_check<T: Scalar>(
    a: &SparseMatrix<T>,
    b: &SparseMatrix<T>,
    xi: &SparseVec<T>,
    eta: &SparseVec<T>,
    n_max: usize,
) -> CheckReport {
    let mut report = CheckReport { max_word_len: 5 * n_max, ..Default::default() };
    let one = T::one();
    for (name, v) in [("ξ", xi), ("η", eta)] {
        report.record(same(&dot(v, v), &one), || format!("{name} is not a unit vector"));
    }
    let ops = [a, b];
    let names = ["a", "b"];
    let monos = monomials(n_max);
    let right: Vec<SparseVec<T>> = monos.iter().map(|w| apply_word(ops, w, xi)).collect();
    let left: Vec<SparseVec<T>> = monos.iter().map(|w| apply_adjoint(ops, w, xi)).collect();
    let b_xi = powers(b, xi, n_max);
    let a_xi = powers(a, xi, n_max);
    let psi_b: Vec<T> = powers(b, eta, n_max).iter().map(|v| dot(v, eta)).collect();
    let zero = T::zero();

    for q in 1..=n_max {
        for (i, w) in monos.iter().enumerate() {
            let wb = dot(&b_xi[q], &left[i]);
            report.record(same(&wb, &zero), || format!("φ({} b^{q}) = {wb}", fmt_word(names, w)));
            let bw = dot(&right[i], &b_xi[q]);
            report.record(same(&bw, &zero), || format!("φ(b^{q} {}) = {bw}", fmt_word(names, w)));
        }
    }

    // φ(w_1 aᵖ) for every w_1, p
    let w1_ap: Vec<Vec<T>> = left.iter().map(|l| a_xi.iter().map(|v| dot(v, l)).collect()).collect();
    for (i2, w2) in monos.iter().enumerate() {
        let a_w2 = powers(a, &right[i2], 2 * n_max);
        // φ(aʳ w_2)
        let ar_w2: Vec<T> = a_w2.iter().map(|v| dot(v, xi)).collect();
        // φ(w_1 aˢ w_2)
        let full: Vec<Vec<T>> = left.iter().map(|l| a_w2.iter().map(|v| dot(v, l)).collect()).collect();
        for r in 1..=n_max {
            let mut bq = a_w2[r].clone();
            for q in 1..=n_max {
                bq = b.apply(&bq);
                let mut ap = bq.clone();
                for p in 1..=n_max {
                    ap = a.apply(&ap);
                    for (i1, w1) in monos.iter().enumerate() {
                        let lhs = dot(&ap, &left[i1]);
                        let rhs = psi_b[q].clone()
                            * (full[i1][p + r].clone() - w1_ap[i1][p].clone() * ar_w2[r].clone());
                        report.record(same(&lhs, &rhs), || {
                            format!(
                                "φ({} a^{p} b^{q} a^{r} {}) = {lhs}, expected {rhs}",
                                fmt_word(names, w1),
                                fmt_word(names, w2)
                            )
                        });
                    }
                }
            }
        }
    }
    report
}

/// `φ(x^k)` for `k = 0..=n` in the state of `v`.
fn state_powers<T: Scalar>(a: &SparseMatrix<T>, v: &SparseVec<T>, n: usize) -> Vec<T> {
    powers(a, v, n).iter().map(|p| dot(p, v)).collect()
}

/// Maximal runs `(letter, length)` of a word.
fn runs(w: &[u8]) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &x in w {
        match out.last_mut() {
            Some((y, n)) if *y == x => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn factorization_check<T: Scalar>(
    ops: [&SparseMatrix<T>; 2],
    names: [&str; 2],
    xi: &SparseVec<T>,
    max_len: usize,
    predict: impl Fn(&[u8], &[Vec<T>; 2]) -> T,
) -> CheckReport {
    let mut report = CheckReport { max_word_len: max_len, ..Default::default() };
    let pw = [state_powers(ops[0], xi, max_len), state_powers(ops[1], xi, max_len)];
    for w in monomials(max_len).iter().filter(|w| !w.is_empty()) {
        let got = dot(&apply_word(ops, w, xi), xi);
        let want = predict(w, &pw);
        report.record(same(&got, &want), || format!("φ({}) = {got}, expected {want}", fmt_word(names, w)));
    }
    report
}

/// Monotone independence of `(x, z)` in the state of `ξ`: every maximal run `zⁿ`
/// factors out as `φ(zⁿ)`, leaving `φ` of the merged powers of `x`.
pub fn monotone_check<T: Scalar>(x: &SparseMatrix<T>, z: &SparseMatrix<T>, xi: &SparseVec<T>, max_len: usize) -> CheckReport {
    factorization_check([x, z], ["x", "z"], xi, max_len, |w, pw| {
        let x_total = w.iter().filter(|&&c| c == 0).count();
        runs(w)
            .into_iter()
            .filter(|(c, _)| *c == 1)
            .fold(pw[0][x_total].clone(), |acc, (_, n)| acc * pw[1][n].clone())
    })
}

/// Boolean independence of `(b_1, b_2)` in the state of `ξ`: `φ` factors over
/// maximal runs.
pub fn boolean_check<T: Scalar>(b1: &SparseMatrix<T>, b2: &SparseMatrix<T>, xi: &SparseVec<T>, max_len: usize) -> CheckReport {
    factorization_check([b1, b2], ["B1 ", "B2 "], xi, max_len, |w, pw| {
        runs(w).into_iter().fold(T::one(), |acc, (c, n)| acc * pw[c as usize][n].clone())
    })
}

/// Freeness of `(a, b)` in the state of `ξ`: `φ` vanishes on alternating
/// products of centered powers `xᵖ − φ(xᵖ)`, up to `max_len` factors and
/// exponents `1..=max_power`.
pub fn freeness_check<T: Scalar>(
    a: &SparseMatrix<T>,
    b: &SparseMatrix<T>,
    xi: &SparseVec<T>,
    max_len: usize,
    max_power: usize,
) -> CheckReport {
    let mut report = CheckReport { max_word_len: max_len * max_power, ..Default::default() };
    let ops = [a, b];
    let means = [state_powers(a, xi, max_power), state_powers(b, xi, max_power)];
    let zero = T::zero();
    for len in 1..=max_len {
        for start in [0u8, 1] {
            let total = max_power.pow(len as u32);
            for code in 0..total {
                let exps: Vec<usize> = (0..len).map(|i| code / max_power.pow(i as u32) % max_power + 1).collect();
                let letters: Vec<u8> = (0..len).map(|i| (start + i as u8) % 2).collect();
                let mut v = xi.clone();
                for (&c, &p) in letters.iter().zip(&exps).rev() {
                    let pushed = (0..p).fold(v.clone(), |acc, _| ops[c as usize].apply(&acc));
                    v = axpy(&pushed, &-means[c as usize][p].clone(), &v);
                }
                let got = dot(&v, xi);
                report.record(same(&got, &zero), || {
                    let desc: Vec<String> =
                        letters.iter().zip(&exps).map(|(&c, &p)| format!("({}^{p})°", ["a", "b"][c as usize])).collect();
                    format!("φ({}) = {got}", desc.join(""))
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(3).len(), 15);
        assert_eq!(runs(&[0, 0, 1, 0, 1, 1]), vec![(0, 2), (1, 1), (0, 1), (1, 2)]);
        assert_eq!(fmt_word(["a", "b"], &[0, 1, 1]), "abb");
    }
}
