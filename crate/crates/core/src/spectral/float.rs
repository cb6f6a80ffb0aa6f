//! Floating-point spectra, used for evidence and cross-checks only.

use nalgebra::{ComplexField, DMatrix, RealField};

use super::AdjacencyMatrix;
use crate::Real;

/// Tolerance for "this float is an integer" in diagnostics.
pub const FLOAT_TOLERANCE: f64 = 1e-6;

/// Identity shifts tried in turn. The unshifted QR iteration in nalgebra can
/// return NaN on block-structured inputs (disconnected Cayley graphs).
const SHIFTS: [f64; 4] = [0.0, 0.5, -0.375, 1.3125];

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// # Panics
/// If the solver fails to converge to finite values under every shift.
pub fn hermitian_eigenvalues<T: ComplexField>(m: &DMatrix<T>) -> Vec<T::RealField> {
    let n = m.nrows();
    let max_iter = 1000 + 100 * n;
    for c in SHIFTS {
        let shifted = m.clone() + DMatrix::<T>::identity(n, n) * nalgebra::convert::<f64, T>(c);
        let Some(eig) = shifted.try_symmetric_eigen(nalgebra::convert::<f64, T::RealField>(f64::EPSILON), max_iter) else {
            continue;
        };
        let shift = nalgebra::convert::<f64, T::RealField>(c);
        let mut values: Vec<T::RealField> = eig.eigenvalues.iter().map(|v| v.clone() - shift.clone()).collect();
        if values.iter().all(|v| v.is_finite()) {
            values.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
            return values;
        }
    }
    panic!("symmetric eigensolver failed on a {n}x{n} matrix under every shift")
}

/// Eigenvalues of a symmetric 0/1 matrix, ascending, at any real scalar width.
pub fn float_spectrum_in<T: RealField + Copy>(a: &AdjacencyMatrix) -> Vec<T> {
    let n = a.n();
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::<T>::from_fn(n, n, |i, j| if a.get(i, j) == 1 { T::one() } else { T::zero() });
    hermitian_eigenvalues(&m)
}

/// Eigenvalues in the default scalar, ascending.
pub fn float_spectrum(a: &AdjacencyMatrix) -> Vec<Real> {
    float_spectrum_in::<Real>(a)
}

/// Distance to the nearest integer.
pub fn integer_distance(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// The value farthest from any integer, if any exceeds `tol`.
pub fn non_integer_evidence(values: &[f64], tol: f64) -> Option<f64> {
    values
        .iter()
        .copied()
        .filter(|&v| integer_distance(v) > tol)
        .max_by(|x, y| integer_distance(*x).total_cmp(&integer_distance(*y)))
}

/// Elementwise comparison of two ascending sequences.
pub fn sorted_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Whether some entry of `values` lies within `tol` of `target`.
pub fn contains_close(values: &[f64], target: f64, tol: f64) -> bool {
    values.iter().any(|v| (v - target).abs() <= tol)
}

/// Whether `sub` is a sub-multiset of `sup` up to `tol`; both ascending.
pub fn sub_multiset_close(sub: &[f64], sup: &[f64], tol: f64) -> bool {
    let mut used = vec![false; sup.len()];
    sub.iter().all(|x| {
        let hit = sup.iter().enumerate().find(|(i, y)| !used[*i] && (*x - **y).abs() <= tol).map(|(i, _)| i);
        hit.map(|i| used[i] = true).is_some()
    })
}
