use rayon::prelude::*;

use super::{abelian_characters, chi_matrix, left_transversal, symbol_matrix, Character, ChiEigenvalues, ChiMatrix};
use super::{KmmmError, SymbolMatrix, Transversal};
use crate::group::{Group, SubgroupHandle};
use crate::spectral::ConnectionSet;

/// One character's share of the spectrum.
#[derive(Clone, Debug)]
pub struct CharacterBlock {
    pub character: Character,
    pub matrix: ChiMatrix,
    pub eigenvalues: ChiEigenvalues,
}

/// Symbol of `Cay(G, S)` over `H` together with every character block.
#[derive(Clone, Debug)]
pub struct Decomposition<'g> {
    pub transversal: Transversal<'g>,
    pub symbol: SymbolMatrix,
    /// In character enumeration order, trivial first.
    pub blocks: Vec<CharacterBlock>,
}

impl Decomposition<'_> {
    /// Union of the block spectra, ascending.
    pub fn spectrum(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.blocks.iter().flat_map(|b| b.eigenvalues.values.iter().copied()).collect();
        all.sort_by(f64::total_cmp);
        all
    }
}

pub fn decompose<'g>(
    group: &'g Group,
    set: &ConnectionSet,
    subgroup: &SubgroupHandle<'g>,
    pinned: &[usize],
) -> Result<Decomposition<'g>, KmmmError> {
    if !subgroup.is_abelian() {
        return Err(KmmmError::NonAbelianSubgroup);
    }
    let transversal = left_transversal(group, subgroup, pinned)?;
    let symbol = symbol_matrix(set, &transversal)?;
    let blocks = abelian_characters(subgroup)?
        .into_par_iter()
        .map(|character| {
            let matrix = chi_matrix(&character, &symbol);
            let eigenvalues = matrix.eigenvalues();
            CharacterBlock { character, matrix, eigenvalues }
        })
        .collect();
    Ok(Decomposition { transversal, symbol, blocks })
}

/// Spectrum of `Cay(G, S)` assembled from the chi-matrices over `H`, ascending.
pub fn kmmm_spectrum<'g>(
    group: &'g Group,
    set: &ConnectionSet,
    subgroup: &SubgroupHandle<'g>,
    pinned: &[usize],
) -> Result<Vec<f64>, KmmmError> {
    Ok(decompose(group, set, subgroup, pinned)?.spectrum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generated_subgroup, named_group};
    use crate::spectral::float::{contains_close, sorted_close};
    use crate::spectral::{cayley_adjacency, float_spectrum};

    fn check(name: &str, set: &str, sub: &str, pins: &str, expect: &[f64]) {
        let g = named_group(name).unwrap();
        let s = ConnectionSet::parse(&g, set).unwrap();
        let h = generated_subgroup(&g, &g.elements(sub).unwrap());
        let pins = if pins.is_empty() { Vec::new() } else { g.elements(pins).unwrap() };
        let spec = kmmm_spectrum(&g, &s, &h, &pins).unwrap();
        assert!(sorted_close(&spec, &float_spectrum(&cayley_adjacency(&g, &s)), 1e-9));
        for &v in expect {
            assert!(contains_close(&spec, v, 1e-9), "{name}: missing {v}");
        }
    }

    #[test]
    fn a4_witness() {
        let r = 17f64.sqrt();
        check("A4", "a,b,c,c^-1", "a,b", "1,c,c^-1", &[-1.0, (-1.0 + r) / 2.0, (-1.0 - r) / 2.0]);
    }

    #[test]
    fn q8s3_witness() {
        let r = 17f64.sqrt();
        check("Q8sZ3", "i,-i,σ,σ^-1", "-1,σ", "1,i,j,k", &[4.0, -3.0, (1.0 + r) / 2.0, (1.0 - r) / 2.0]);
    }

    #[test]
    fn empty_set_spectrum_is_zero() {
        let g = named_group("D8").unwrap();
        let h = generated_subgroup(&g, &g.elements("a").unwrap());
        let spec = kmmm_spectrum(&g, &ConnectionSet::empty(), &h, &[]).unwrap();
        assert_eq!(spec, vec![0.0; 8]);
    }
}
