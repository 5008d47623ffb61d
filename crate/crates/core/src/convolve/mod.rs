//! The five convolutions at moment level, their oracles, and pointwise
//! subordination.
//!
//! Every convolution takes `N` moments of each input and returns a
//! moment-represented measure with exactly `N` moments.

mod chain;
mod oracle;
mod pointwise;
mod series_ops;

pub use chain::{chain_k_transform, finite_k_transform, jacobi_chain_decomposition};
pub use oracle::{free_cumulant_oracle_moments, free_cumulants, moments_from_free_cumulants, MAX_ORACLE_ORDER};
pub use pointwise::{orthogonal_f, subordination_eval, subordination_residual, Subordination, SubordinationEvalConfig};
pub use series_ops::{
    boolean_moments, first_mismatch, free_moments, free_routes, monotone_moments, orthogonal_iterated_moments,
    orthogonal_moments, sfree_iterations, sfree_moments,
};

use crate::error::Result;
use crate::measure::MeasureRep;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvolutionOp {
    Boolean,
    Monotone,
    Orthogonal,
    OrthogonalIterated(usize),
    SFree,
    Free,
}

#[derive(Clone, Debug)]
pub struct ConvolutionRequest<T: Scalar> {
    pub mu: MeasureRep<T>,
    pub nu: MeasureRep<T>,
    pub op: ConvolutionOp,
    pub order: usize,
}

impl<T: Scalar> ConvolutionRequest<T> {
    pub fn run(&self) -> Result<MeasureRep<T>> {
        let (mu, nu, n) = (&self.mu, &self.nu, self.order);
        match self.op {
            ConvolutionOp::Boolean => boolean(mu, nu, n),
            ConvolutionOp::Monotone => monotone(mu, nu, n),
            ConvolutionOp::Orthogonal => orthogonal(mu, nu, n),
            ConvolutionOp::OrthogonalIterated(m) => orthogonal_iterated(mu, nu, m, n),
            ConvolutionOp::SFree => sfree(mu, nu, n),
            ConvolutionOp::Free => free(mu, nu, n),
        }
    }
}

fn pair<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, n: usize) -> Result<(Vec<T>, Vec<T>)> {
    Ok((mu.moments(n)?.into_vec(), nu.moments(n)?.into_vec()))
}

pub fn boolean<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, n: usize) -> Result<MeasureRep<T>> {
    let (a, b) = pair(mu, nu, n)?;
    Ok(MeasureRep::from_moments(boolean_moments(&a, &b)))
}

pub fn monotone<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, n: usize) -> Result<MeasureRep<T>> {
    let (a, b) = pair(mu, nu, n)?;
    Ok(MeasureRep::from_moments(monotone_moments(&a, &b)))
}

pub fn orthogonal<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, n: usize) -> Result<MeasureRep<T>> {
    let (a, b) = pair(mu, nu, n)?;
    Ok(MeasureRep::from_moments(orthogonal_moments(&a, &b)))
}

pub fn orthogonal_iterated<T: Scalar>(
    mu: &MeasureRep<T>,
    nu: &MeasureRep<T>,
    m: usize,
    n: usize,
) -> Result<MeasureRep<T>> {
    let (a, b) = pair(mu, nu, n)?;
    Ok(MeasureRep::from_moments(orthogonal_iterated_moments(&a, &b, m)?))
}

pub fn sfree<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, n: usize) -> Result<MeasureRep<T>> {
    let (a, b) = pair(mu, nu, n)?;
    Ok(MeasureRep::from_moments(sfree_moments(&a, &b)))
}

/// Both decompositions are computed; [`Error::RouteMismatch`](crate::Error::RouteMismatch) if they differ.
pub fn free<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, n: usize) -> Result<MeasureRep<T>> {
    let (a, b) = pair(mu, nu, n)?;
    Ok(MeasureRep::from_moments(free_moments(&a, &b)?))
}

pub fn free_cumulant_oracle<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, n: usize) -> Result<MeasureRep<T>> {
    let (a, b) = pair(mu, nu, n)?;
    Ok(MeasureRep::from_moments(free_cumulant_oracle_moments(&a, &b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{bernoulli_symmetric, point_mass, two_point, wigner, JacobiParams, TailPolicy};
    use crate::partitions::{orthogonal_moment_combinatorial, IntervalComposition};
    use crate::random::{random_atomic, random_pairs, rng};
    use crate::scalar::rat;
    use crate::Rational;

    const N: usize = 10;

    fn moments(m: &MeasureRep<Rational>) -> Vec<Rational> {
        m.moments(N).unwrap().into_vec()
    }

    /// Jacobi parameters recoverable from `N` moments.
    fn jacobi(m: &MeasureRep<Rational>) -> (Vec<Rational>, Vec<Rational>) {
        let j = m.jacobi().unwrap();
        (j.alpha, j.omega)
    }

    fn seq(xs: impl Fn(usize) -> Rational, len: usize) -> Vec<Rational> {
        (0..len).map(xs).collect()
    }

    #[test]
    fn orthogonal_series_matches_partition_sums() {
        for (mu, nu) in random_pairs(11, 20) {
            let (a, b) = (moments(&mu), moments(&nu));
            let series = orthogonal_moments(&a, &b);
            for n in 1..=N {
                let comb = orthogonal_moment_combinatorial(&a, &b, &IntervalComposition::single(n)).unwrap();
                assert_eq!(series[n - 1], comb, "order {n}");
            }
        }
    }

    #[test]
    fn free_routes_and_oracle_agree() {
        for (mu, nu) in random_pairs(12, 20) {
            let (a, b) = (moments(&mu), moments(&nu));
            let (ra, rb) = free_routes(&a, &b);
            assert_eq!(ra, rb);
            assert_eq!(ra, free_cumulant_oracle_moments(&a, &b).unwrap());
        }
    }

    #[test]
    fn decomposition_identities() {
        for (mu, nu) in random_pairs(13, 20) {
            let (a, b) = (moments(&mu), moments(&nu));
            // μ ▷ ν = (μ ⊢ ν) ⊎ ν
            assert_eq!(monotone_moments(&a, &b), boolean_moments(&orthogonal_moments(&a, &b), &b));
            let free = free_moments(&a, &b).unwrap();
            assert_eq!(free, boolean_moments(&sfree_moments(&a, &b), &sfree_moments(&b, &a)));
            assert_eq!(free, monotone_moments(&b, &sfree_moments(&a, &b)));
            assert_eq!(free, free_moments(&b, &a).unwrap());
        }
    }

    #[test]
    fn iterated_orthogonal_stabilizes() {
        for (mu, nu) in random_pairs(14, 10) {
            let (a, b) = (moments(&mu), moments(&nu));
            for m in 1..=5 {
                let x = orthogonal_iterated_moments(&a, &b, m).unwrap();
                let y = orthogonal_iterated_moments(&a, &b, m + 1).unwrap();
                assert_eq!(x[..2 * m], y[..2 * m], "m = {m}");
            }
            assert_eq!(orthogonal_iterated_moments(&a, &b, 1).unwrap(), orthogonal_moments(&a, &b));
        }
    }

    #[test]
    fn orthogonal_keeps_first_two_moments() {
        for (mu, nu) in random_pairs(15, 10) {
            let (a, b) = (moments(&mu), moments(&nu));
            assert_eq!(orthogonal_moments(&a, &b)[..2], a[..2]);
        }
    }

    #[test]
    fn orthogonal_with_point_masses() {
        let a = rat(2, 3);
        let nu = wigner(rat(1, 1), rat(2, 1)).unwrap();
        assert_eq!(orthogonal(&point_mass(a.clone()), &nu, N).unwrap().moments(N), point_mass(a.clone()).moments(N));
        let mu = MeasureRep::from_jacobi(
            JacobiParams::finite(
                vec![rat(1, 2), rat(-1, 1), rat(3, 2), rat(0, 1), rat(2, 1), rat(1, 3)],
                vec![rat(2, 1), rat(1, 3), rat(5, 2), rat(1, 1), rat(3, 4)],
            )
            .unwrap(),
        );
        let (alpha, omega) = jacobi(&orthogonal(&mu, &point_mass(a.clone()), N).unwrap());
        let j = mu.jacobi().unwrap();
        let want_alpha = seq(|k| if k == 0 { j.alpha_at(0) } else { j.alpha_at(k) + a.clone() }, 5);
        assert_eq!(alpha, want_alpha);
        assert_eq!(omega, seq(|k| j.omega_at(k), 4));
    }

    #[test]
    fn orthogonal_with_two_point_left_factor() {
        let (p, l1, l2) = (rat(1, 3), rat(2, 1), rat(-1, 2));
        let q = rat(1, 1) - p.clone();
        let mu = two_point(p.clone(), l1.clone(), l2.clone()).unwrap();
        let beta = [rat(1, 1), rat(-2, 1), rat(1, 2), rat(3, 1), rat(0, 1)];
        let gamma = [rat(1, 2), rat(2, 1), rat(1, 1), rat(4, 1)];
        let nu = MeasureRep::from_jacobi(JacobiParams::finite(beta.to_vec(), gamma.to_vec()).unwrap());
        let (alpha, omega) = jacobi(&orthogonal(&mu, &nu, N).unwrap());
        let d = l1.clone() - l2.clone();
        assert_eq!(alpha[0], l1.clone() * p.clone() + l2.clone() * q.clone());
        assert_eq!(alpha[1], beta[0].clone() + l1 * q.clone() + l2 * p.clone());
        assert_eq!(alpha[2..], beta[1..4]);
        assert_eq!(omega[0], p * q * d.clone() * d);
        assert_eq!(omega[1..], gamma[..3]);
    }

    #[test]
    fn sfree_with_point_masses() {
        let a = rat(-3, 4);
        let nu = wigner(rat(1, 2), rat(1, 1)).unwrap();
        assert_eq!(sfree(&point_mass(a.clone()), &nu, N).unwrap().moments(N), point_mass(a.clone()).moments(N));
        let mu = random_atomic(&mut rng(3), 4);
        assert_eq!(sfree(&mu, &point_mass(a.clone()), N).unwrap(), orthogonal(&mu, &point_mass(a), N).unwrap());
    }

    #[test]
    fn semicircle_doublings() {
        let (al, om) = (rat(1, 3), rat(2, 1));
        let w = wigner(al.clone(), om.clone()).unwrap();
        let two = rat(2, 1);
        let (alpha, omega) = jacobi(&sfree(&w, &w, N).unwrap());
        assert_eq!(alpha, seq(|k| if k == 0 { al.clone() } else { two.clone() * al.clone() }, 5));
        assert_eq!(omega, seq(|k| if k == 0 { om.clone() } else { two.clone() * om.clone() }, 4));
        let (alpha, omega) = jacobi(&free(&w, &w, N).unwrap());
        assert_eq!(alpha, seq(|_| two.clone() * al.clone(), 5));
        assert_eq!(omega, seq(|_| two.clone() * om.clone(), 4));
    }

    #[test]
    fn free_with_point_mass_shifts_alpha() {
        let a = rat(5, 2);
        let mu = MeasureRep::from_jacobi(
            JacobiParams::new(vec![rat(1, 1), rat(-1, 2)], vec![rat(3, 1)], TailPolicy::Wigner { a: rat(0, 1), b: rat(1, 1) })
                .unwrap(),
        );
        let j = mu.jacobi().unwrap();
        for out in [free(&mu, &point_mass(a.clone()), N).unwrap(), free(&point_mass(a.clone()), &mu, N).unwrap()] {
            let (alpha, omega) = jacobi(&out);
            assert_eq!(alpha, seq(|k| j.alpha_at(k) + a.clone(), 5));
            assert_eq!(omega, seq(|k| j.omega_at(k), 4));
        }
    }

    #[test]
    fn bernoulli_free_square_is_arcsine() {
        let b = bernoulli_symmetric::<Rational>();
        let m = moments(&free(&b, &b, N).unwrap());
        let want: Vec<Rational> = [0, 2, 0, 6, 0, 20, 0, 70, 0, 252].iter().map(|&x| rat(x, 1)).collect();
        assert_eq!(m, want);
        assert_eq!(moments(&boolean(&b, &b, N).unwrap())[..4], [rat(0, 1), rat(2, 1), rat(0, 1), rat(4, 1)]);
    }

    #[test]
    fn orthogonal_and_sfree_are_not_commutative_or_associative() {
        let mut r = rng(21);
        let found = |op: fn(&[Rational], &[Rational]) -> Vec<Rational>, r: &mut rand_chacha::ChaCha8Rng| {
            (0..50).any(|_| {
                let (x, y, w) = (moments(&random_atomic(r, 2)), moments(&random_atomic(r, 2)), moments(&random_atomic(r, 2)));
                op(&x, &y) != op(&y, &x) && op(&op(&x, &y), &w) != op(&x, &op(&y, &w))
            })
        };
        assert!(found(orthogonal_moments, &mut r));
        assert!(found(sfree_moments, &mut r));
        // explicit pair: Bernoulli ⊢ δ_1 keeps Bernoulli's first two moments, δ_1 ⊢ Bernoulli = δ_1
        let (b, d) = (bernoulli_symmetric::<Rational>(), point_mass(rat(1, 1)));
        assert_ne!(orthogonal(&b, &d, 4).unwrap().moments(4), orthogonal(&d, &b, 4).unwrap().moments(4));
    }

    #[test]
    fn request_dispatch() {
        let b = bernoulli_symmetric::<Rational>();
        let req = ConvolutionRequest { mu: b.clone(), nu: b.clone(), op: ConvolutionOp::Free, order: 6 };
        assert_eq!(req.run().unwrap().moments(6).unwrap().as_slice()[5], rat(20, 1));
        let req = ConvolutionRequest { op: ConvolutionOp::OrthogonalIterated(1), ..req };
        assert_eq!(req.run().unwrap(), orthogonal(&b, &b, 6).unwrap());
    }

    #[test]
    fn works_over_floats() {
        let b = bernoulli_symmetric::<f64>();
        let m = free(&b, &b, 6).unwrap().moments(6).unwrap().into_vec();
        assert_eq!(m, vec![0.0, 2.0, 0.0, 6.0, 0.0, 20.0]);
    }
}
