//! Elements of `Z[ζ_N]`, stored as integer vectors over `ζ^0, …, ζ^{N−1}`.

use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::Complex;

/// `Σ c_k ζ^k` for a primitive `N`-th root of unity `ζ = e^{2πi/N}`.
///
/// The representation over all `N` powers is not unique; [`Cyclotomic::canonical`]
/// reduces modulo the `N`-th cyclotomic polynomial, and equality uses it.
#[derive(Clone, Debug, Serialize)]
pub struct Cyclotomic {
    order: usize,
    coefficients: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "root order must be positive");
        Cyclotomic { order, coefficients: vec![0; order] }
    }

    pub fn integer(order: usize, value: i64) -> Self {
        let mut z = Self::zero(order);
        z.coefficients[0] = value;
        z
    }

    /// `ζ^k`.
    pub fn root(order: usize, k: usize) -> Self {
        let mut z = Self::zero(order);
        z.coefficients[k % order] = 1;
        z
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{−k}`.
    pub fn conj(&self) -> Self {
        let n = self.order;
        let mut z = Self::zero(n);
        for (k, &c) in self.coefficients.iter().enumerate() {
            z.coefficients[(n - k) % n] += c;
        }
        z
    }

    pub fn to_complex(&self) -> Complex {
        let n = self.order as f64;
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| Complex::from_polar(c as f64, 2.0 * std::f64::consts::PI * k as f64 / n))
            .sum()
    }

    /// Coefficients reduced modulo `Φ_N`, ascending, of length `φ(N)`.
    pub fn canonical(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut c = self.coefficients.clone();
        for i in (deg..c.len()).rev() {
            let q = c[i];
            if q != 0 {
                for (j, &p) in phi.iter().enumerate() {
                    c[i - deg + j] -= q * p;
                }
            }
        }
        c.truncate(deg);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|&c| c == 0)
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.canonical();
        c.iter().skip(1).all(|&x| x == 0).then(|| c.first().copied().unwrap_or(0))
    }

    /// Rewrites over `ζ_M` for a multiple `M` of the current order.
    pub fn lift_to(&self, order: usize) -> Self {
        assert_eq!(order % self.order, 0, "target order must be a multiple");
        let step = order / self.order;
        let mut z = Self::zero(order);
        for (k, &c) in self.coefficients.iter().enumerate() {
            z.coefficients[k * step] += c;
        }
        z
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let n = crate::group::lcm(self.order, other.order);
        (self.lift_to(n), other.lift_to(n))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        (&a - &b).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coefficients.iter_mut().zip(&b.coefficients) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coefficients.iter_mut().zip(&b.coefficients) {
            *x -= y;
        }
        a
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.aligned(rhs);
        let n = a.order;
        let mut z = Cyclotomic::zero(n);
        for (i, &x) in a.coefficients.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &y) in b.coefficients.iter().enumerate().filter(|(_, &y)| y != 0) {
                z.coefficients[(i + j) % n] += x * y;
            }
        }
        z
    }
}

/// `Φ_n`, ascending coefficients.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // x^n − 1 divided by Φ_d for every proper divisor d of n
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = divide_exact(&p, &cyclotomic_polynomial(d));
    }
    p
}

/// Quotient of ascending integer polynomials when `divisor` is monic and divides exactly.
fn divide_exact(dividend: &[i64], divisor: &[i64]) -> Vec<i64> {
    let dd = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let mut q = vec![0i64; dividend.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &d) in divisor.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_sums_vanish() {
        for n in [2, 3, 4, 6, 12] {
            let total = (0..n).fold(Cyclotomic::zero(n), |acc, k| &acc + &Cyclotomic::root(n, k));
            assert!(total.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn arithmetic_matches_floats() {
        let w = Cyclotomic::root(3, 1);
        let one = Cyclotomic::integer(3, 1);
        let s = &one + &w;
        // 1 + ω = −ω², of modulus 1
        assert_eq!(s, Cyclotomic::root(6, 1));
        assert!((s.to_complex().norm() - 1.0).abs() < 1e-12);
        let norm = &s * &s.conj();
        assert_eq!(norm.as_integer(), Some(1));
        let i = Cyclotomic::root(4, 1);
        assert_eq!((&i * &i).as_integer(), Some(-1));
        assert_eq!((&w + &w.conj()).as_integer(), Some(-1));
        assert_eq!(w.as_integer(), None);
    }

    #[test]
    fn mixed_orders_align() {
        let i = Cyclotomic::root(4, 1);
        let w = Cyclotomic::root(3, 1);
        let z = &i * &w;
        assert_eq!(z.order(), 12);
        assert!((z.to_complex() - i.to_complex() * w.to_complex()).norm() < 1e-12);
    }
}
