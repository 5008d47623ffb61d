use super::{JacobiParams, MomentSequence, TailPolicy};
use crate::error::{Error, Result};
use crate::poly::{Poly, RatFunc};
use crate::scalar::Scalar;
use crate::series::TailSeries;

/// Moment functional applied to a polynomial; `None` if it needs unavailable moments.
fn functional<T: Scalar>(m: &MomentSequence<T>, p: &Poly<T>) -> Option<T> {
    let mut acc = T::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        acc = acc + c.clone() * m.get(i).ok()?;
    }
    Some(acc)
}

/// Recurrence coefficients of the monic orthogonal polynomials of the moment functional.
///
/// From `N` moments this yields `⌊(N-1)/2⌋ + 1` diagonal entries and one fewer
/// off-diagonal entries, or fewer when a norm vanishes (finite support).
pub fn moments_to_jacobi<T: Scalar>(m: &MomentSequence<T>) -> Result<JacobiParams<T>> {
    let n = m.order();
    if n == 0 {
        return Err(Error::InsufficientDepth { needed: 1, available: 0 });
    }
    let x = Poly::z();
    let mut alpha = Vec::new();
    let mut norms = vec![T::one()];
    let mut prev = Poly::zero();
    let mut cur = Poly::constant(T::one());
    let mut k = 0;
    while 2 * k < n {
        let h = norms[k].clone();
        let xp2 = x.mul(&cur).mul(&cur);
        let a = functional(m, &xp2).expect("order checked") / h.clone();
        alpha.push(a.clone());
        if 2 * k + 2 > n {
            break;
        }
        let w_prev = if k == 0 { T::zero() } else { norms[k].clone() / norms[k - 1].clone() };
        let next = x.mul(&cur).sub(&cur.scale(&a)).sub(&prev.scale(&w_prev));
        let h_next = functional(m, &next.mul(&next)).expect("order checked");
        if h_next.is_negative() && !h_next.close_to(&T::zero(), 1e-12) {
            return Err(Error::NotAMomentSequence { level: k, value: h_next.to_string() });
        }
        if h_next.is_zero() || (!T::EXACT && h_next.close_to(&T::zero(), 1e-12)) {
            return JacobiParams::finite(alpha, (1..norms.len()).map(|i| norms[i].clone() / norms[i - 1].clone()).collect());
        }
        norms.push(h_next);
        prev = cur;
        cur = next;
        k += 1;
    }
    let d = alpha.len();
    let omega = (1..d).map(|i| norms[i].clone() / norms[i - 1].clone()).collect();
    JacobiParams::finite(alpha, omega)
}

/// First `n` moments of the measure with these Jacobi parameters.
///
/// Evaluates the continued fraction `g_k = 1/(1 - α_k w - ω_k w² g_{k+1})` as a
/// series; levels below `n/2` cannot influence order `n`.
pub fn jacobi_to_moments<T: Scalar>(j: &JacobiParams<T>, n: usize) -> Result<MomentSequence<T>> {
    if j.alpha.is_empty() && matches!(j.tail, TailPolicy::Truncate) {
        return Err(Error::InsufficientDepth { needed: 1, available: 0 });
    }
    let depth = n / 2 + 1;
    let levels = j.levels().map_or(depth, |l| l.min(depth));
    let mut g = TailSeries::zero(n);
    for k in (0..levels).rev() {
        let mut d = TailSeries::one(n).sub(&TailSeries::monomial(j.alpha_at(k), 1, n));
        if k + 1 < levels {
            d = d.sub(&g.shift_up(2).scale(&j.omega_at(k)));
        }
        g = d.reciprocal()?;
    }
    Ok(MomentSequence::new(g.into_coeffs().into_iter().skip(1).collect()))
}

/// Leading principal minors `det(m_{i+j})_{0≤i,j≤k}` for `k = 0..=k_max`.
pub fn hankel_minors<T: Scalar>(m: &MomentSequence<T>, k_max: usize) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let size = k + 1;
        let mut a = vec![vec![T::zero(); size]; size];
        for (i, row) in a.iter_mut().enumerate() {
            for (jj, cell) in row.iter_mut().enumerate() {
                *cell = m.get(i + jj)?;
            }
        }
        out.push(determinant(a));
    }
    Ok(out)
}

fn determinant<T: Scalar>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det = det * piv.clone();
        for r in c + 1..n {
            let f = a[r][c].clone() / piv.clone();
            if f.is_zero() {
                continue;
            }
            for k in c..n {
                let v = a[c][k].clone() * f.clone();
                a[r][k] = a[r][k].clone() - v;
            }
        }
    }
    det
}

/// Numerator and denominator `(N_m, M_m)` of the `m`-th approximant `[G]_m = N_m/M_m`.
///
/// Both follow `Y_{k+1} = (z - α_k) Y_k - ω_{k-1} Y_{k-1}` with `N_0 = 0`,
/// `N_1 = 1`, `M_0 = 1`, `M_1 = z - α_0`.
pub fn approximant_g<T: Scalar>(j: &JacobiParams<T>, m: usize) -> Result<(Poly<T>, Poly<T>)> {
    if m == 0 {
        return Err(Error::InvalidParameter("approximant index must be at least 1".into()));
    }
    if matches!(j.tail, TailPolicy::Truncate) && m > j.alpha.len() {
        return Err(Error::InsufficientDepth { needed: m, available: j.alpha.len() });
    }
    let (mut n0, mut n1) = (Poly::zero(), Poly::constant(T::one()));
    let (mut m0, mut m1) = (Poly::constant(T::one()), Poly::linear(j.alpha_at(0)));
    for k in 1..m {
        let n2 = n1.mul(&Poly::linear(j.alpha_at(k))).sub(&n0.scale(&j.omega_at(k - 1)));
        let m2 = m1.mul(&Poly::linear(j.alpha_at(k))).sub(&m0.scale(&j.omega_at(k - 1)));
        (n0, n1) = (n1, n2);
        (m0, m1) = (m1, m2);
    }
    Ok((n1, m1))
}

/// `[K]_m = z - M_{m+1}/N_{m+1}` as a rational function.
pub fn approximant_k<T: Scalar>(j: &JacobiParams<T>, m: usize) -> Result<RatFunc<T>> {
    let (num, den) = approximant_g(j, m + 1)?;
    let z = RatFunc::from_poly(Poly::z());
    Ok(z.sub(&RatFunc::new(den, num)?))
}

/// Drops the first level of both sequences.
pub fn shift_jacobi<T: Scalar>(j: &JacobiParams<T>) -> Result<JacobiParams<T>> {
    let swapped_tail = match &j.tail {
        TailPolicy::Periodic2 { a, b } => {
            TailPolicy::Periodic2 { a: [a[1].clone(), a[0].clone()], b: [b[1].clone(), b[0].clone()] }
        }
        t => t.clone(),
    };
    if j.alpha.is_empty() {
        return match j.tail {
            TailPolicy::Truncate => Err(Error::EmptyJacobi),
            _ => Ok(JacobiParams { alpha: vec![], omega: vec![], tail: swapped_tail }),
        };
    }
    let alpha = j.alpha[1..].to_vec();
    let omega = if j.omega.is_empty() { vec![] } else { j.omega[1..].to_vec() };
    Ok(JacobiParams { alpha, omega, tail: swapped_tail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rational;
    use proptest::prelude::*;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    /// Top-left entries of powers of the tridiagonal matrix.
    fn tridiagonal_moments(alpha: &[Rational], omega: &[Rational], n: usize) -> Vec<Rational> {
        // off-diagonals enter only through products b_k^2 = ω_k, so use the
        // unsymmetric form with 1 above and ω below the diagonal
        let d = alpha.len();
        let mut v = vec![rat(0, 1); d];
        v[0] = rat(1, 1);
        let mut out = Vec::new();
        for _ in 0..n {
            let mut nv = vec![rat(0, 1); d];
            for i in 0..d {
                nv[i] += alpha[i].clone() * v[i].clone();
                if i + 1 < d {
                    nv[i] += v[i + 1].clone() * omega[i].clone();
                    nv[i + 1] += v[i].clone();
                }
            }
            v = nv;
            out.push(v[0].clone());
        }
        out
    }

    #[test]
    fn point_mass_and_semicircle() {
        let a = rat(2, 3);
        let m = MomentSequence::new(vec![a.clone(), a.clone() * a.clone(), a.clone() * a.clone() * a.clone()]);
        let j = moments_to_jacobi(&m).unwrap();
        assert_eq!((j.alpha, j.omega), (vec![a], vec![]));

        let j = moments_to_jacobi(&MomentSequence::new(r(&[0, 1, 0, 2, 0, 5]))).unwrap();
        assert_eq!((j.alpha.clone(), j.omega.clone()), (r(&[0, 0, 0]), r(&[1, 1])));
        assert_eq!(tridiagonal_moments(&j.alpha, &j.omega, 5), r(&[0, 1, 0, 2, 0]));

        let j = moments_to_jacobi(&MomentSequence::new(r(&[0, 1, 0, 1]))).unwrap();
        assert_eq!((j.alpha, j.omega), (r(&[0, 0]), r(&[1])));
    }

    #[test]
    fn negative_norm_is_rejected() {
        let err = moments_to_jacobi(&MomentSequence::new(r(&[0, -1, 0]))).unwrap_err();
        assert!(matches!(err, Error::NotAMomentSequence { .. }));
    }

    #[test]
    fn catalan_from_jacobi() {
        let j = JacobiParams::finite(r(&[0, 0, 0, 0]), r(&[1, 1, 1])).unwrap();
        assert_eq!(jacobi_to_moments(&j, 7).unwrap().into_vec(), r(&[0, 1, 0, 2, 0, 5, 0]));
        let j = JacobiParams::finite(vec![rat(5, 2)], vec![]).unwrap();
        assert_eq!(jacobi_to_moments(&j, 3).unwrap().into_vec(), vec![rat(5, 2), rat(25, 4), rat(125, 8)]);
        assert!(jacobi_to_moments(&JacobiParams::<Rational>::finite(vec![], vec![]).unwrap(), 2).is_err());
    }

    #[test]
    fn jacobi_moments_match_tridiagonal_powers() {
        let alpha = vec![rat(1, 2), rat(-1, 1), rat(3, 4), rat(0, 1), rat(2, 1)];
        let omega = vec![rat(2, 1), rat(1, 3), rat(5, 2), rat(1, 1)];
        let j = JacobiParams::finite(alpha.clone(), omega.clone()).unwrap();
        assert_eq!(jacobi_to_moments(&j, 14).unwrap().into_vec(), tridiagonal_moments(&alpha, &omega, 14));
    }

    #[test]
    fn vanishing_omega_means_low_hankel_rank() {
        let j = JacobiParams::finite(r(&[1, -1, 2]), r(&[2, 3])).unwrap();
        let m = jacobi_to_moments(&j, 10).unwrap();
        let minors = hankel_minors(&m, 4).unwrap();
        assert!(minors[..3].iter().all(|d| d > &rat(0, 1)));
        assert_eq!(minors[3], rat(0, 1));
        assert_eq!(minors[4], rat(0, 1));
        let back = moments_to_jacobi(&m).unwrap();
        assert_eq!((back.alpha, back.omega), (r(&[1, -1, 2]), r(&[2, 3])));
    }

    #[test]
    fn approximants() {
        let j = JacobiParams::finite(r(&[3, 5, 7]), r(&[2, 4])).unwrap();
        let (n, m) = approximant_g(&j, 1).unwrap();
        assert_eq!((n, m), (Poly::constant(rat(1, 1)), Poly::linear(rat(3, 1))));

        let w = JacobiParams::new(vec![], vec![], TailPolicy::Wigner { a: rat(0, 1), b: rat(1, 1) }).unwrap();
        let (n, m) = approximant_g(&w, 2).unwrap();
        assert_eq!(n, Poly::z());
        assert_eq!(m, Poly::new(r(&[-1, 0, 1])));

        // [K]_1 = α0 + ω0/(z - α1)
        let k1 = approximant_k(&j, 1).unwrap();
        let want = RatFunc::from_poly(Poly::constant(rat(3, 1)))
            .add(&RatFunc::new(Poly::constant(rat(2, 1)), Poly::linear(rat(5, 1))).unwrap());
        assert!(k1.same_as(&want));
    }

    #[test]
    fn approximant_identity_and_pade_property() {
        let alpha = vec![rat(1, 2), rat(-1, 1), rat(3, 4), rat(0, 1), rat(2, 1), rat(-1, 3), rat(1, 1)];
        let omega = vec![rat(2, 1), rat(1, 3), rat(5, 2), rat(1, 1), rat(7, 3), rat(1, 2)];
        let j = JacobiParams::finite(alpha, omega).unwrap();
        let mom = jacobi_to_moments(&j, 14).unwrap();
        for m in 1..=6 {
            let (n_m, m_m) = approximant_g(&j, m).unwrap();
            let g = RatFunc::new(n_m, m_m).unwrap();
            // [F]_{m-1} = z - [K]_{m-1} = 1/[G]_m
            let f = RatFunc::from_poly(Poly::z()).sub(&approximant_k(&j, m - 1).unwrap());
            assert!(f.same_as(&g.recip().unwrap()), "m = {m}");
            let s = g.series_at_infinity(2 * m).unwrap();
            for k in 0..2 * m - 1 {
                assert_eq!(s.coeff(k + 1), mom.get(k).unwrap(), "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn shifting() {
        let j = JacobiParams::finite(r(&[1, 2]), r(&[3])).unwrap();
        let s = shift_jacobi(&j).unwrap();
        assert_eq!((s.alpha, s.omega), (r(&[2]), vec![]));
        let w = JacobiParams::new(r(&[4]), vec![], TailPolicy::Wigner { a: rat(4, 1), b: rat(2, 1) }).unwrap();
        let s = shift_jacobi(&w).unwrap();
        assert_eq!(s, JacobiParams::new(vec![], vec![], TailPolicy::Wigner { a: rat(4, 1), b: rat(2, 1) }).unwrap());
        assert_eq!(shift_jacobi(&JacobiParams::<Rational>::finite(vec![], vec![]).unwrap()), Err(Error::EmptyJacobi));
    }

    fn arb_jacobi() -> impl Strategy<Value = (Vec<Rational>, Vec<Rational>)> {
        (1usize..6).prop_flat_map(|d| {
            (
                proptest::collection::vec((-8i64..=8, 1i64..=4).prop_map(|(p, q)| rat(p, q)), d),
                proptest::collection::vec((1i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q)), d - 1),
            )
        })
    }

    proptest! {
        #[test]
        fn moments_jacobi_round_trip((alpha, omega) in arb_jacobi()) {
            let d = alpha.len();
            let j = JacobiParams::finite(alpha.clone(), omega.clone()).unwrap();
            let m = jacobi_to_moments(&j, 2 * d - 1).unwrap();
            let back = moments_to_jacobi(&m).unwrap();
            prop_assert_eq!(&back.alpha, &alpha);
            prop_assert_eq!(&back.omega, &omega);
            prop_assert_eq!(jacobi_to_moments(&back, 2 * d - 1).unwrap(), m);
        }
    }
}
