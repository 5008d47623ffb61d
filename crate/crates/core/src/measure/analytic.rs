//! Floating-point evaluation of `G`, `F = 1/G` and `K = z - F` in the upper half-plane.

use num_complex::Complex64;

use super::{JacobiParams, MeasureRep, Representation, TailPolicy};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const SINGULAR: f64 = 1e-300;

fn check_domain(z: Complex64) -> Result<()> {
    if z.im > 0.0 && z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("evaluation point {z} is not in the upper half-plane")))
    }
}

/// Picks the root of `a g^2 + b g + c = 0` that is a Cauchy transform at `z`.
///
/// When exactly one root lies strictly in the lower half-plane it is taken.
/// Otherwise the choice is continued from far up the imaginary direction above
/// `z`, where the root behaving like `1/z` is unambiguous.
fn cauchy_root(coeffs: impl Fn(Complex64) -> (Complex64, Complex64, Complex64), z: Complex64) -> Complex64 {
    let roots = |z: Complex64| {
        let (a, b, c) = coeffs(z);
        if a.norm() < SINGULAR {
            let g = -c / b;
            return (g, g);
        }
        let s = (b * b - 4.0 * a * c).sqrt();
        ((-b + s) / (2.0 * a), (-b - s) / (2.0 * a))
    };
    let (r1, r2) = roots(z);
    let scale = 1e-12 * (1.0 + r1.norm().max(r2.norm()));
    match (r1.im < -scale, r2.im < -scale) {
        (true, false) => return r1,
        (false, true) => return r2,
        _ => {}
    }
    let top = z.norm().max(1.0) * 1e3;
    let steps = 400;
    let at = |t: f64| Complex64::new(z.re, z.im + (top - z.im) * t);
    let (s1, s2) = roots(at(1.0));
    let zt = at(1.0);
    let mut g = if (s1 * zt - 1.0).norm() <= (s2 * zt - 1.0).norm() { s1 } else { s2 };
    for i in (0..steps).rev() {
        let t = (i as f64 / steps as f64).powi(3);
        let (a, b) = roots(at(t));
        g = if (a - g).norm() <= (b - g).norm() { a } else { b };
    }
    g
}

/// Cauchy transform of the semicircle law with mean `a` and variance `b`.
pub fn wigner_g(a: f64, b: f64, z: Complex64) -> Complex64 {
    if b == 0.0 {
        return 1.0 / (z - a);
    }
    cauchy_root(|z| (Complex64::new(b, 0.0), -(z - a), Complex64::new(1.0, 0.0)), z)
}

/// `g_p` of the 2-periodic fraction `g_p = 1/(z - a_p - b_p g_q)`, `g_q = 1/(z - a_q - b_q g_p)`.
///
/// Solves `u b_q g² - (u v - b_p + b_q) g + v = 0` with `u = z - a_p`, `v = z - a_q`.
pub fn periodic2_g(a: [f64; 2], b: [f64; 2], parity: usize, z: Complex64) -> Complex64 {
    let (p, q) = (parity % 2, (parity + 1) % 2);
    let u = z - a[p];
    let v = z - a[q];
    if b[p] == 0.0 {
        return 1.0 / u;
    }
    if b[q] == 0.0 {
        return v / (u * v - b[p]);
    }
    cauchy_root(
        |z| {
            let u = z - a[p];
            let v = z - a[q];
            (u * b[q], -(u * v - b[p] + b[q]), v)
        },
        z,
    )
}

/// `G` of `μ ⊞ₛ ν` for `K_μ = α + ω/z`, `K_ν = β + γ/z` (`ω, γ > 0`):
/// `(P + 2γ - √(P² - 4A²)) / (2Δ)` with `P = (z - α)(z - β) - γ - ω`,
/// `Δ = γ(z - α)`, `A² = γω`. The square root is the branch making `G` a
/// Cauchy transform.
pub fn sfree_two_point_g(alpha: f64, omega: f64, beta: f64, gamma: f64, z: Complex64) -> Complex64 {
    let p = |z: Complex64| (z - alpha) * (z - beta) - gamma - omega;
    cauchy_root(|z| (gamma * (z - alpha), -(p(z) + 2.0 * gamma), z - beta), z)
}

/// Absolutely continuous density of [`sfree_two_point_g`]'s measure:
/// `√(4A² - P²(x)) / (2πγ|x - α|)` on the bands where `P² < 4A²`, zero elsewhere.
pub fn sfree_two_point_density(alpha: f64, omega: f64, beta: f64, gamma: f64, x: f64) -> f64 {
    let p = (x - alpha) * (x - beta) - gamma - omega;
    let disc = 4.0 * gamma * omega - p * p;
    if disc <= 0.0 || x == alpha {
        return 0.0;
    }
    disc.sqrt() / (2.0 * std::f64::consts::PI * gamma * (x - alpha).abs())
}

fn tail_g<T: Scalar>(j: &JacobiParams<T>, level: usize, z: Complex64) -> Complex64 {
    match &j.tail {
        TailPolicy::Truncate => Complex64::new(0.0, 0.0),
        TailPolicy::Wigner { a, b } => wigner_g(a.to_f64_lossy(), b.to_f64_lossy(), z),
        TailPolicy::Periodic2 { a, b } => periodic2_g(
            [a[0].to_f64_lossy(), a[1].to_f64_lossy()],
            [b[0].to_f64_lossy(), b[1].to_f64_lossy()],
            level,
            z,
        ),
    }
}

fn jacobi_g<T: Scalar>(j: &JacobiParams<T>, z: Complex64, depth: usize) -> Complex64 {
    let explicit = j.alpha.len().max(j.omega.len());
    // below the evaluated levels the fraction has either ended, been closed
    // exactly by its tail, or been cut at `depth`
    let (levels, mut g) = match j.levels() {
        Some(l) if l <= depth => (l, Complex64::new(0.0, 0.0)),
        _ if !matches!(j.tail, TailPolicy::Truncate) && depth >= explicit => (explicit, tail_g(j, explicit, z)),
        _ => (depth, Complex64::new(0.0, 0.0)),
    };
    for k in (0..levels).rev() {
        g = 1.0 / (z - j.alpha_at(k).to_f64_lossy() - j.omega_at(k).to_f64_lossy() * g);
    }
    g
}

/// `G(z) = ∫ dμ(x)/(z - x)` for `Im z > 0`, through a continued fraction of at most `depth` levels.
pub fn eval_g<T: Scalar>(rep: &MeasureRep<T>, z: Complex64, depth: usize) -> Result<Complex64> {
    check_domain(z)?;
    match rep.representation() {
        Representation::Atoms(a) => {
            Ok(a.atoms().iter().map(|(x, w)| w.to_f64_lossy() / (z - x.to_f64_lossy())).sum())
        }
        Representation::Jacobi(j) => Ok(jacobi_g(j, z, depth)),
        Representation::Moments(_) => Ok(jacobi_g(&rep.jacobi()?, z, depth)),
    }
}

pub fn eval_f<T: Scalar>(rep: &MeasureRep<T>, z: Complex64, depth: usize) -> Result<Complex64> {
    let g = eval_g(rep, z, depth)?;
    if g.norm() < SINGULAR {
        return Err(Error::NumericalSingularity(format!("|G({z})| underflows")));
    }
    Ok(1.0 / g)
}

pub fn eval_k<T: Scalar>(rep: &MeasureRep<T>, z: Complex64, depth: usize) -> Result<Complex64> {
    Ok(z - eval_f(rep, z, depth)?)
}

/// `f(x) = -Im G(x + iε)/π` on the grid.
pub fn stieltjes_density<T: Scalar>(
    rep: &MeasureRep<T>,
    grid: &[f64],
    epsilon: f64,
    depth: usize,
) -> Result<Vec<(f64, f64)>> {
    if !(epsilon > 0.0) {
        return Err(Error::Domain("epsilon must be positive".into()));
    }
    grid.iter()
        .map(|&x| Ok((x, -eval_g(rep, Complex64::new(x, epsilon), depth)?.im / std::f64::consts::PI)))
        .collect()
}
