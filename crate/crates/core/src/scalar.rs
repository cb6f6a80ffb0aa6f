//! Scalar abstractions shared by the exact and floating-point routines.
//!
//! Exact routines are written once against [`ExactInt`] and instantiated at a
//! fixed width (`i128`) first; when a checked operation overflows they are
//! re-run over [`BigInt`]. Floating-point routines are generic over
//! nalgebra's `RealField`, with `f64` as the default instantiation.

use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Integer scalar usable by the exact linear algebra.
///
/// Every arithmetic step goes through the checked operations so that a
/// fixed-width instantiation reports overflow instead of wrapping.
pub trait ExactInt:
    Clone + Debug + Display + PartialEq + Eq + Zero + One + Signed + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive + Send + Sync
{
    fn lift(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 fits every exact scalar")
    }
}

impl<T> ExactInt for T where
    T: Clone + Debug + Display + PartialEq + Eq + Zero + One + Signed + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Dense polynomial with coefficients stored highest degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: ExactInt> Polynomial<T> {
    /// Builds from coefficients listed highest degree first. Leading zeros are trimmed.
    pub fn from_descending(mut coeffs: Vec<T>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len().saturating_sub(1));
        coeffs.drain(..lead);
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Polynomial { coeffs }
    }

    /// `∏ (x − r)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut coeffs = vec![T::one()];
        for &r in roots {
            let r = T::lift(r);
            let mut next = coeffs.clone();
            next.push(T::zero());
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].clone() - c.clone() * r.clone();
            }
            coeffs = next;
        }
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, highest degree first.
    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^power`.
    pub fn coefficient(&self, power: usize) -> T {
        if power > self.degree() {
            T::zero()
        } else {
            self.coeffs[self.degree() - power].clone()
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0].is_one()
    }

    /// Horner evaluation; `None` on overflow.
    pub fn eval_checked(&self, x: &T) -> Option<T> {
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc = acc.checked_mul(x)?.checked_add(c)?;
        }
        Some(acc)
    }

    /// Divides by `(x − root)` when `root` is a root, returning the quotient.
    pub fn deflate(&self, root: &T) -> Option<Self> {
        if self.degree() == 0 {
            return None;
        }
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        let mut carry = T::zero();
        for c in &self.coeffs {
            carry = carry.checked_mul(root)?.checked_add(c)?;
            quotient.push(carry.clone());
        }
        let remainder = quotient.pop()?;
        if remainder.is_zero() {
            Some(Polynomial { coeffs: quotient })
        } else {
            None
        }
    }

    pub fn to_bigint(&self) -> Polynomial<BigInt> {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let wide = c.to_i128().expect("exact scalar wider than i128");
                    BigInt::from(wide)
                })
                .collect(),
        }
    }
}

impl Polynomial<BigInt> {
    /// Coefficients rendered as decimal strings, highest degree first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl<T: ExactInt> Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !(deg == 0) {
                continue;
            }
            let power = deg - i;
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || power == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial<BigInt> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coefficient_strings().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_roots_expands() {
        let p: Polynomial<i128> = Polynomial::from_roots(&[3, -1, -1, -1]);
        assert_eq!(p.coefficients(), &[1, 0, -6, -8, -3]);
        assert_eq!(p.to_string(), "x^4 - 6x^2 - 8x - 3");
    }

    #[test]
    fn deflation_only_at_roots() {
        let p: Polynomial<i128> = Polynomial::from_descending(vec![1, 0, -1]);
        assert_eq!(p.deflate(&1).unwrap().coefficients(), &[1, 1]);
        assert!(p.deflate(&2).is_none());
    }

    #[test]
    fn overflow_is_reported() {
        let p: Polynomial<i128> = Polynomial::from_descending(vec![1, 0]);
        let big = i128::MAX / 2 + 1;
        assert!(p.eval_checked(&big).is_some());
        let sq: Polynomial<i128> = Polynomial::from_descending(vec![1, 0, 0]);
        assert!(sq.eval_checked(&big).is_none());
    }
}
