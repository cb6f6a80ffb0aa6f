use nalgebra::DMatrix;
use serde::Serialize;

use super::{Character, Cyclotomic, SymbolMatrix};
use crate::spectral::float::hermitian_eigenvalues;
use crate::Complex;

/// `χ(S)` with entries `Σ_{s ∈ S_ij} χ(s)`, held exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiMatrix {
    m: usize,
    entries: Vec<Cyclotomic>,
}

/// Eigenvalues of one chi-matrix, ascending. For `m = 2` the exact radicand
/// `(a − d)² + 4|b|²` under the square root is kept alongside.
#[derive(Clone, Debug, Serialize)]
pub struct ChiEigenvalues {
    pub values: Vec<f64>,
    pub radicand: Option<Cyclotomic>,
}

pub fn chi_matrix(character: &Character, symbol: &SymbolMatrix) -> ChiMatrix {
    let m = symbol.m();
    let entries = (0..m * m).map(|k| character.sum(symbol.cell(k / m, k % m))).collect();
    ChiMatrix { m, entries }
}

impl ChiMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.m + j]
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex>> {
        (0..self.m).map(|i| (0..self.m).map(|j| self.entry(i, j).to_complex()).collect()).collect()
    }

    /// Entries as integers, when all of them are.
    pub fn as_integers(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.m).map(|i| (0..self.m).map(|j| self.entry(i, j).as_integer()).collect()).collect()
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.m).all(|i| (i..self.m).all(|j| *self.entry(i, j) == self.entry(j, i).conj()))
    }

    pub fn eigenvalues(&self) -> ChiEigenvalues {
        match self.m {
            0 => ChiEigenvalues { values: Vec::new(), radicand: None },
            1 => ChiEigenvalues { values: vec![self.entry(0, 0).to_complex().re], radicand: None },
            2 => {
                let (a, b, d) = (self.entry(0, 0), self.entry(0, 1), self.entry(1, 1));
                let diff = a - d;
                let four = Cyclotomic::integer(1, 4);
                let radicand = &(&diff * &diff) + &(&four * &(b * &b.conj()));
                let root = radicand.to_complex().re.max(0.0).sqrt();
                let mid = (a + d).to_complex().re;
                ChiEigenvalues { values: vec![(mid - root) / 2.0, (mid + root) / 2.0], radicand: Some(radicand) }
            }
            m => {
                let dense = DMatrix::from_fn(m, m, |i, j| self.entry(i, j).to_complex());
                ChiEigenvalues { values: hermitian_eigenvalues(&dense), radicand: None }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generated_subgroup, named_group};
    use crate::kmmm::{abelian_characters, left_transversal, symbol_matrix};
    use crate::spectral::ConnectionSet;

    #[test]
    fn h27_omega_block() {
        let g = named_group("H27").unwrap();
        let h = generated_subgroup(&g, &g.elements("a,c").unwrap());
        let t = left_transversal(&g, &h, &g.elements("1,b,b^-1").unwrap()).unwrap();
        let s = ConnectionSet::parse(&g, "a,a^-1,b,b^-1").unwrap();
        let sym = symbol_matrix(&s, &t).unwrap();
        let (a, c) = (g.element("a").unwrap(), g.element("c").unwrap());
        let chi = abelian_characters(&h)
            .unwrap()
            .into_iter()
            .find(|x| x.power(a) == Some(0) && x.value(c) == Some(Cyclotomic::root(3, 1)))
            .unwrap();
        let mat = chi_matrix(&chi, &sym);
        assert_eq!(mat.as_integers().unwrap(), vec![vec![2, 1, 1], vec![1, -1, 1], vec![1, 1, -1]]);
        let ev = mat.eigenvalues().values;
        let r3 = 3f64.sqrt();
        for (got, want) in ev.iter().zip([-2.0, 1.0 - r3, 1.0 + r3]) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn q8s3_trivial_block() {
        let g = named_group("Q8sZ3").unwrap();
        let h = generated_subgroup(&g, &g.elements("-1,σ").unwrap());
        let t = left_transversal(&g, &h, &g.elements("1,i,j,k").unwrap()).unwrap();
        let s = ConnectionSet::parse(&g, "i,-i,σ,σ^-1").unwrap();
        let sym = symbol_matrix(&s, &t).unwrap();
        let chars = abelian_characters(&h).unwrap();
        let mat = chi_matrix(&chars[0], &sym);
        assert!(mat.is_hermitian());
        assert_eq!(
            mat.as_integers().unwrap(),
            vec![vec![2, 2, 0, 0], vec![2, 0, 1, 1], vec![0, 1, 0, 3], vec![0, 1, 3, 0]]
        );
    }

    #[test]
    fn two_by_two_radicand() {
        let g = named_group("H16").unwrap();
        let h = generated_subgroup(&g, &g.elements("a,c").unwrap());
        let t = left_transversal(&g, &h, &g.elements("1,b").unwrap()).unwrap();
        let s = ConnectionSet::parse(&g, "ba,ba^-1c,b").unwrap();
        let sym = symbol_matrix(&s, &t).unwrap();
        let (a, c) = (g.element("a").unwrap(), g.element("c").unwrap());
        let chi = abelian_characters(&h)
            .unwrap()
            .into_iter()
            .find(|x| x.value(a) == Some(Cyclotomic::root(4, 1)) && x.value(c) == Some(Cyclotomic::integer(1, -1)))
            .unwrap();
        let ev = chi_matrix(&chi, &sym).eigenvalues();
        // ±√5: radicand 4·5
        assert_eq!(ev.radicand.unwrap().as_integer(), Some(20));
        assert!((ev.values[1] - 5f64.sqrt()).abs() < 1e-9);
    }
}
