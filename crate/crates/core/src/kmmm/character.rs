use std::sync::Arc;

use super::{Cyclotomic, KmmmError};
use crate::group::{lcm, AbelianBasis, SubgroupHandle};
use crate::Complex;

/// A linear character of an abelian subgroup: `χ(∏ g_i^{a_i}) = ζ^{Σ e_i a_i N/d_i}`
/// with `N = lcm(d_i)`.
#[derive(Clone, Debug)]
pub struct Character {
    basis: Arc<AbelianBasis>,
    exponents: Vec<usize>,
    root_order: usize,
}

impl Character {
    pub fn basis(&self) -> &AbelianBasis {
        &self.basis
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn root_order(&self) -> usize {
        self.root_order
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `k` with `χ(h) = ζ^k`, or `None` if `h` lies outside the subgroup.
    pub fn power(&self, h: usize) -> Option<usize> {
        let coords = self.basis.coordinates(h)?;
        let n = self.root_order;
        Some(
            coords
                .iter()
                .zip(&self.exponents)
                .zip(self.basis.orders())
                .map(|((&a, &e), &d)| a * e * (n / d))
                .sum::<usize>()
                % n,
        )
    }

    pub fn value(&self, h: usize) -> Option<Cyclotomic> {
        self.power(h).map(|k| Cyclotomic::root(self.root_order, k))
    }

    pub fn value_complex(&self, h: usize) -> Option<Complex> {
        self.value(h).map(|z| z.to_complex())
    }

    /// `Σ_{s ∈ cell} χ(s)`, exactly.
    pub fn sum(&self, cell: &[usize]) -> Cyclotomic {
        let mut z = Cyclotomic::zero(self.root_order);
        for &s in cell {
            z = &z + &self.value(s).expect("cell element lies in the subgroup");
        }
        z
    }
}

/// All `|H|` characters of an abelian subgroup, trivial first.
pub fn abelian_characters(subgroup: &SubgroupHandle<'_>) -> Result<Vec<Character>, KmmmError> {
    if !subgroup.is_abelian() {
        return Err(KmmmError::NonAbelianSubgroup);
    }
    let basis = Arc::new(AbelianBasis::of_subgroup(subgroup)?);
    let orders = basis.orders().to_vec();
    let root_order = orders.iter().fold(1, |acc, &d| lcm(acc, d));
    let total: usize = orders.iter().product();
    let mut exponents = vec![0usize; orders.len()];
    let mut out = Vec::with_capacity(total);
    for _ in 0..total {
        out.push(Character { basis: Arc::clone(&basis), exponents: exponents.clone(), root_order });
        for (e, &d) in exponents.iter_mut().zip(&orders) {
            *e += 1;
            if *e < d {
                break;
            }
            *e = 0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generated_subgroup, make_abelian, named_group};

    fn close(a: Complex, b: Complex) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn z2_characters() {
        let g = make_abelian(&[2]).unwrap();
        let chars = abelian_characters(&SubgroupHandle::whole(&g)).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_trivial());
        assert_eq!(chars[1].value(1).unwrap().as_integer(), Some(-1));
    }

    #[test]
    fn e9_has_the_omega_character() {
        let g = named_group("E9sZ2").unwrap();
        let h = generated_subgroup(&g, &g.elements("u,v").unwrap());
        let (u, v) = (g.element("u").unwrap(), g.element("v").unwrap());
        let omega = Complex::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let chars = abelian_characters(&h).unwrap();
        assert!(chars.iter().any(|c| close(c.value_complex(u).unwrap(), Complex::new(1.0, 0.0))
            && close(c.value_complex(v).unwrap(), omega)));
    }

    #[test]
    fn orthogonality_and_distinctness() {
        let g = named_group("H16").unwrap();
        let h = generated_subgroup(&g, &g.elements("a,c").unwrap());
        let (a, c) = (g.element("a").unwrap(), g.element("c").unwrap());
        let chars = abelian_characters(&h).unwrap();
        assert_eq!(chars.len(), 8);
        assert!(chars.iter().any(|x| close(x.value_complex(a).unwrap(), Complex::new(0.0, 1.0))
            && close(x.value_complex(c).unwrap(), Complex::new(-1.0, 0.0))));
        let tables: std::collections::HashSet<Vec<usize>> =
            chars.iter().map(|x| h.elements().iter().map(|&e| x.power(e).unwrap()).collect()).collect();
        assert_eq!(tables.len(), 8);
        for x in chars.iter().skip(1) {
            assert!(x.sum(h.elements()).is_zero());
        }
        assert_eq!(chars[0].sum(h.elements()).as_integer(), Some(8));
    }
}
