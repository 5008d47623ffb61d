use nalgebra::{DMatrix, SymmetricEigen};

use super::{jacobi_to_moments, AtomicMeasure, JacobiParams};
use crate::scalar::Scalar;

/// Atoms of a terminating fraction: eigenvalues of the Jacobi matrix, weighted
/// by squared first eigenvector components.
///
/// Float eigenpairs are snapped to the scalar type and accepted only if the
/// snapped atoms reproduce the first `2L` moments (`L` levels); for exact types
/// this is an exact check, so irrational atoms yield `None`.
pub fn recover_atoms<T: Scalar>(j: &JacobiParams<T>) -> Option<AtomicMeasure<T>> {
    let levels = j.levels()?;
    let mut mat = DMatrix::<f64>::zeros(levels, levels);
    for k in 0..levels {
        mat[(k, k)] = j.alpha_at(k).to_f64_lossy();
        if k + 1 < levels {
            let b = j.omega_at(k).to_f64_lossy().sqrt();
            mat[(k, k + 1)] = b;
            mat[(k + 1, k)] = b;
        }
    }
    let eig = SymmetricEigen::new(mat);
    let mut atoms = Vec::with_capacity(levels);
    for i in 0..levels {
        let x = T::snap_f64(eig.eigenvalues[i])?;
        let w = T::snap_f64(eig.eigenvectors[(0, i)].powi(2))?;
        atoms.push((x, w));
    }
    let measure = AtomicMeasure::new(atoms).ok()?;
    let want = jacobi_to_moments(j, 2 * levels).ok()?;
    let got = measure.moments(2 * levels);
    let agree = want.as_slice().iter().zip(got.as_slice()).all(|(a, b)| a.close_to(b, 1e-9));
    agree.then_some(measure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rational;

    #[test]
    fn rational_atoms_are_recovered_exactly() {
        let m = AtomicMeasure::new(vec![(rat(-1, 1), rat(1, 6)), (rat(1, 2), rat(1, 3)), (rat(3, 1), rat(1, 2))]).unwrap();
        let j = super::super::moments_to_jacobi(&m.moments(6)).unwrap();
        assert_eq!(recover_atoms(&j), Some(m));
    }

    #[test]
    fn irrational_atoms_are_rejected() {
        // (δ_{-√2} + δ_{√2})/2
        let j = JacobiParams::finite(vec![rat(0, 1), rat(0, 1)], vec![rat(2, 1)]).unwrap();
        assert_eq!(recover_atoms(&j), None);
        let f = JacobiParams::finite(vec![0.0, 0.0], vec![2.0]).unwrap();
        let a = recover_atoms(&f).unwrap();
        assert!((a.atoms()[1].0 - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn infinite_fraction_has_no_atoms() {
        let j = JacobiParams::new(vec![], vec![], super::super::TailPolicy::Wigner { a: rat(0, 1), b: rat(1, 1) }).unwrap();
        assert_eq!(recover_atoms::<Rational>(&j), None);
    }
}
