//! Pointwise transforms in the upper half-plane.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measure::{eval_f, eval_k, MeasureRep};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubordinationEvalConfig {
    pub tol: f64,
    pub max_iter: usize,
    /// Continued-fraction depth for each transform evaluation.
    pub depth: usize,
}

impl Default for SubordinationEvalConfig {
    fn default() -> Self {
        Self { tol: 1e-12, max_iter: 10_000, depth: 64 }
    }
}

/// Limits of `u_m = K_μ(z - v_{m-1})`, `v_m = K_ν(z - u_{m-1})`.
///
/// `u = K_{μ⊞ₛν}(z)`, `v = K_{ν⊞ₛμ}(z)`, and `F_{μ⊞ν}(z) = z - u - v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Subordination {
    pub u: Complex64,
    pub v: Complex64,
    pub iterations: usize,
}

impl Subordination {
    pub fn f1(&self, z: Complex64) -> Complex64 {
        z - self.v
    }

    pub fn f2(&self, z: Complex64) -> Complex64 {
        z - self.u
    }

    pub fn free_f(&self, z: Complex64) -> Complex64 {
        z - self.u - self.v
    }
}

pub fn subordination_eval<T: Scalar>(
    mu: &MeasureRep<T>,
    nu: &MeasureRep<T>,
    z: Complex64,
    cfg: &SubordinationEvalConfig,
) -> Result<Subordination> {
    if !(cfg.tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let mut u = eval_k(mu, z, cfg.depth)?;
    let mut v = eval_k(nu, z, cfg.depth)?;
    let mut gap = f64::INFINITY;
    for it in 1..=cfg.max_iter {
        let u_next = eval_k(mu, z - v, cfg.depth)?;
        let v_next = eval_k(nu, z - u, cfg.depth)?;
        gap = (u_next - u).norm().max((v_next - v).norm());
        (u, v) = (u_next, v_next);
        if gap < cfg.tol {
            return Ok(Subordination { u, v, iterations: it });
        }
    }
    Err(Error::NoConvergence { iterations: cfg.max_iter, gap })
}

/// `|F_μ(F_1) - (F_1 + F_2 - z)|` and `|F_ν(F_2) - (F_1 + F_2 - z)|`, the larger of the two.
pub fn subordination_residual<T: Scalar>(
    mu: &MeasureRep<T>,
    nu: &MeasureRep<T>,
    z: Complex64,
    s: &Subordination,
    depth: usize,
) -> Result<f64> {
    let (f1, f2) = (s.f1(z), s.f2(z));
    let target = f1 + f2 - z;
    let r1 = (eval_f(mu, f1, depth)? - target).norm();
    let r2 = (eval_f(nu, f2, depth)? - target).norm();
    Ok(r1.max(r2))
}

/// `F_{μ⊢ν}(z) = F_μ(F_ν(z)) - F_ν(z) + z`.
pub fn orthogonal_f<T: Scalar>(mu: &MeasureRep<T>, nu: &MeasureRep<T>, z: Complex64, depth: usize) -> Result<Complex64> {
    let fnu = eval_f(nu, z, depth)?;
    Ok(eval_f(mu, fnu, depth)? - fnu + z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{bernoulli_symmetric, point_mass, wigner, wigner_g};
    use crate::scalar::rat;
    use crate::Rational;

    #[test]
    fn point_mass_partner_converges_at_once() {
        let mu = bernoulli_symmetric::<Rational>();
        let nu = point_mass(rat(0, 1));
        let z = Complex64::new(0.3, 1.2);
        let s = subordination_eval(&mu, &nu, z, &SubordinationEvalConfig::default()).unwrap();
        assert_eq!(s.iterations, 1);
        assert!((s.u - eval_k(&mu, z, 64).unwrap()).norm() < 1e-15);
        assert_eq!(s.v, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn semicircle_pair() {
        let mu = wigner(rat(0, 1), rat(1, 1)).unwrap();
        let z = Complex64::new(0.0, 3.0);
        let cfg = SubordinationEvalConfig::default();
        let s = subordination_eval(&mu, &mu, z, &cfg).unwrap();
        assert!((s.u - s.v).norm() < 1e-12);
        let want = 1.0 / wigner_g(0.0, 2.0, z);
        assert!((s.free_f(z) - want).norm() < 1e-10);
        assert!(subordination_residual(&mu, &mu, z, &s, cfg.depth).unwrap() < 10.0 * cfg.tol);
    }

    #[test]
    fn non_convergence_is_reported() {
        let mu = bernoulli_symmetric::<Rational>();
        let cfg = SubordinationEvalConfig { tol: 1e-30, max_iter: 3, depth: 8 };
        let r = subordination_eval(&mu, &mu, Complex64::new(0.0, 0.01), &cfg);
        assert!(matches!(r, Err(Error::NoConvergence { iterations: 3, .. })));
    }
}
