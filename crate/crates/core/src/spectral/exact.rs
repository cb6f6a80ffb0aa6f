//! Exact integer routines: the annihilating-product integrality test,
//! division-free characteristic polynomials, and deflation by integer roots.

use num_bigint::BigInt;

use super::{AdjacencyMatrix, SpectralError};
use crate::scalar::{ExactInt, Polynomial};
use crate::{IntPolynomial, WideInt};

/// Decides whether every eigenvalue of `A` is an integer.
///
/// `A` is real symmetric with row sums `degree`, so it is diagonalizable with
/// spectrum in `[−degree, degree]`, and `∏_{λ=−degree}^{degree} (A − λI)`
/// vanishes exactly when every eigenvalue is an integer. The product is formed
/// in `i128` and redone in arbitrary precision if an entry overflows.
pub fn integrality_test(a: &AdjacencyMatrix, degree: usize) -> Result<bool, SpectralError> {
    a.validate(degree)?;
    if let Some(answer) = annihilating_product_vanishes::<WideInt>(a, degree) {
        return Ok(answer);
    }
    Ok(annihilating_product_vanishes::<BigInt>(a, degree).expect("arbitrary precision cannot overflow"))
}

/// The annihilating product at a chosen scalar width; `None` on overflow.
///
/// Each factor is applied as `P ← A·P − λP` using the neighbour lists, so one
/// step costs `n²·(degree + 1)` additions.
pub fn annihilating_product_vanishes<T: ExactInt>(a: &AdjacencyMatrix, degree: usize) -> Option<bool> {
    let n = a.n();
    let mut p = vec![T::zero(); n * n];
    for i in 0..n {
        p[i * n + i] = T::one();
    }
    let mut next = vec![T::zero(); n * n];
    let d = degree as i64;
    for lambda in -d..=d {
        let lam = T::lift(lambda);
        let mut all_zero = true;
        for g in 0..n {
            let row = &mut next[g * n..(g + 1) * n];
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = T::zero().checked_sub(&lam.checked_mul(&p[g * n + j])?)?;
            }
            for &h in a.neighbors(g) {
                let h = h as usize;
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = cell.checked_add(&p[h * n + j])?;
                }
            }
            all_zero &= row.iter().all(|c| c.is_zero());
        }
        std::mem::swap(&mut p, &mut next);
        if all_zero {
            return Some(true);
        }
    }
    Some(false)
}

/// `det(xI − A)` with exact coefficients.
pub fn char_poly(a: &AdjacencyMatrix) -> IntPolynomial {
    let rows: Vec<Vec<i64>> = a.rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect();
    char_poly_of(&rows)
}

/// Characteristic polynomial of an arbitrary square integer matrix.
pub fn char_poly_of(rows: &[Vec<i64>]) -> IntPolynomial {
    let wide: Vec<Vec<WideInt>> = rows.iter().map(|r| r.iter().map(|&x| x as WideInt).collect()).collect();
    if let Some(p) = berkowitz::<WideInt>(&wide) {
        return p.to_bigint();
    }
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    berkowitz(&big).expect("arbitrary precision cannot overflow")
}

/// Berkowitz's division-free characteristic polynomial; `None` on overflow.
///
/// Works upward through trailing principal submatrices: with
/// `M = [[a, R], [C, A₁]]`, `χ_M = T·χ_{A₁}` where `T` is the lower-triangular
/// Toeplitz matrix with first column `(1, −a, −RC, −RA₁C, …, −RA₁^{r−2}C)`.
pub fn berkowitz<T: ExactInt>(rows: &[Vec<T>]) -> Option<Polynomial<T>> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "square matrix required");
    // Nonzero entries per row, ascending by column.
    let sparse: Vec<Vec<(usize, T)>> =
        rows.iter().map(|r| r.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect()).collect();
    let mut poly: Vec<T> = vec![T::one()];
    for r in 1..=n {
        let off = n - r;
        let a = &rows[off][off];
        let mut toeplitz = Vec::with_capacity(r + 1);
        toeplitz.push(T::one());
        toeplitz.push(T::zero().checked_sub(a)?);
        // v = A₁^j C, indexed by rows off+1..n
        let mut v: Vec<T> = (off + 1..n).map(|i| rows[i][off].clone()).collect();
        for j in 0..r.saturating_sub(1) {
            let mut rc = T::zero();
            for (col, val) in &sparse[off] {
                if *col > off {
                    rc = rc.checked_add(&val.checked_mul(&v[col - off - 1])?)?;
                }
            }
            toeplitz.push(T::zero().checked_sub(&rc)?);
            if j + 2 > r - 1 {
                break;
            }
            let mut w = vec![T::zero(); v.len()];
            for (k, i) in (off + 1..n).enumerate() {
                let mut acc = T::zero();
                for (col, val) in &sparse[i] {
                    if *col > off {
                        acc = acc.checked_add(&val.checked_mul(&v[col - off - 1])?)?;
                    }
                }
                w[k] = acc;
            }
            v = w;
        }
        let mut next = Vec::with_capacity(r + 1);
        for i in 0..=r {
            let mut acc = T::zero();
            for j in 0..=i.min(r - 1) {
                acc = acc.checked_add(&toeplitz[i - j].checked_mul(&poly[j])?)?;
            }
            next.push(acc);
        }
        poly = next;
    }
    Some(Polynomial::from_descending(poly))
}

/// Integer roots with multiplicity when `p` splits completely over integers in
/// `[−bound, bound]`; `None` otherwise. Ascending by eigenvalue.
pub fn integer_spectrum(p: &IntPolynomial, bound: i64) -> Option<Vec<(i64, usize)>> {
    let mut rest = p.clone();
    let mut found = Vec::new();
    for lambda in (-bound..=bound).rev() {
        let root = BigInt::from(lambda);
        let mut mult = 0;
        while let Some(q) = rest.deflate(&root) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            found.push((lambda, mult));
        }
    }
    found.reverse();
    (rest.degree() == 0).then_some(found)
}
