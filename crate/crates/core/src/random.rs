//! Seeded random rational measures for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::measure::{JacobiParams, MeasureRep, TailPolicy};
use crate::scalar::rat;
use crate::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An atomic measure with 1 to `max_atoms` distinct atoms in `[-3, 3]` (denominators
/// up to 4) and positive rational weights.
pub fn random_atomic<R: Rng>(rng: &mut R, max_atoms: usize) -> MeasureRep<Rational> {
    let k = rng.gen_range(1..=max_atoms.max(1));
    let mut locs: Vec<Rational> = Vec::with_capacity(k);
    while locs.len() < k {
        let x = rat(rng.gen_range(-12..=12), rng.gen_range(1..=4));
        if !locs.contains(&x) {
            locs.push(x);
        }
    }
    let raw: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=6)).collect();
    let total: i64 = raw.iter().sum();
    let atoms = locs.into_iter().zip(raw).map(|(x, w)| (x, rat(w, total))).collect();
    MeasureRep::from_atoms(atoms).expect("valid random measure")
}

/// `count` pairs of random atomic measures with at most four atoms each.
pub fn random_pairs(seed: u64, count: usize) -> Vec<(MeasureRep<Rational>, MeasureRep<Rational>)> {
    let mut r = rng(seed);
    (0..count).map(|_| (random_atomic(&mut r, 4), random_atomic(&mut r, 4))).collect()
}

/// Four explicit Jacobi levels with perfect-square `ω` and a semicircular tail of
/// variance 1, so operator models built from it stay rational.
pub fn random_square_jacobi<R: Rng>(rng: &mut R) -> JacobiParams<Rational> {
    let alpha: Vec<Rational> = (0..4).map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect();
    let omega: Vec<Rational> = (0..4)
        .map(|_| {
            let r = rat(rng.gen_range(1..=4), rng.gen_range(1..=3));
            &r * &r
        })
        .collect();
    let a = rat(rng.gen_range(-2..=2), 2);
    JacobiParams::new(alpha, omega, TailPolicy::Wigner { a, b: rat(1, 1) }).expect("non-negative omegas")
}
