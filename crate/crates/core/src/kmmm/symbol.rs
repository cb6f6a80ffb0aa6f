use super::{KmmmError, Transversal};
use crate::spectral::ConnectionSet;

/// The `m×m` array of cells `S_ij = H ∩ t_j⁻¹·S·t_i`: `x ∈ S_ij` iff
/// `t_i` is adjacent to `t_j·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolMatrix {
    m: usize,
    /// Row-major; each cell sorted, with multiplicity.
    cells: Vec<Vec<usize>>,
}

impl SymbolMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cell(&self, i: usize, j: usize) -> &[usize] {
        &self.cells[i * self.m + j]
    }

    pub fn mass(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }
}

pub fn symbol_matrix(set: &ConnectionSet, transversal: &Transversal<'_>) -> Result<SymbolMatrix, KmmmError> {
    let h = transversal.subgroup();
    if !h.is_abelian() {
        return Err(KmmmError::NonAbelianSubgroup);
    }
    let group = transversal.group();
    let m = transversal.m();
    let mut cells = vec![Vec::new(); m * m];
    for (i, &t) in transversal.reps().iter().enumerate() {
        for &s in set.elements() {
            let (j, x) = transversal.coset_of(group.mul(s, t));
            cells[i * m + j].push(x);
        }
    }
    for cell in &mut cells {
        cell.sort_unstable();
    }
    let symbol = SymbolMatrix { m, cells };
    // S_ji is the elementwise inverse of S_ij
    for i in 0..m {
        for j in 0..m {
            let mut inv: Vec<usize> = symbol.cell(i, j).iter().map(|&x| group.inv(x)).collect();
            inv.sort_unstable();
            if inv != symbol.cell(j, i) {
                return Err(KmmmError::InvariantViolated(format!("cells ({i},{j}) and ({j},{i}) are not mutually inverse")));
            }
        }
    }
    if symbol.mass() != m * set.len() {
        return Err(KmmmError::InvariantViolated("cell mass differs from m·|S|".into()));
    }
    Ok(symbol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generalized_dicyclic, generated_subgroup, make_abelian, named_group};
    use crate::kmmm::left_transversal;

    #[test]
    fn h27_symbol_cells() {
        let g = named_group("H27").unwrap();
        let h = generated_subgroup(&g, &g.elements("a,c").unwrap());
        let t = left_transversal(&g, &h, &g.elements("1,b,b^-1").unwrap()).unwrap();
        let s = ConnectionSet::parse(&g, "a,a^-1,b,b^-1").unwrap();
        let sym = symbol_matrix(&s, &t).unwrap();
        let sorted = |list: &str| {
            let mut v = g.elements(list).unwrap();
            v.sort();
            v
        };
        assert_eq!(sym.cell(0, 0), sorted("a,a^-1"));
        let ac = g.element("ac").unwrap();
        let mut ac_pair = vec![ac, g.inv(ac)];
        ac_pair.sort();
        assert_eq!(sym.cell(1, 1), ac_pair.as_slice());
        assert_eq!(sym.cell(2, 2), sorted("ac^-1,a^-1c"));
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(sym.cell(i, j), &[0]);
                }
            }
        }
    }

    #[test]
    fn dicyclic_disjoint_case() {
        let g = generalized_dicyclic(&make_abelian(&[3, 6]).unwrap()).unwrap();
        let x = g.element("x").unwrap();
        let a_part: Vec<usize> = (0..18).collect();
        let h = crate::group::SubgroupHandle::new(&g, a_part).unwrap();
        let t = left_transversal(&g, &h, &[0, x]).unwrap();
        // u = a, v = b (generators of Z3 × Z6)
        let (u, v) = (g.element("a").unwrap(), g.element("b").unwrap());
        let xi = g.inv(x);
        let s = ConnectionSet::new(&g, vec![g.mul(x, u), g.mul(xi, u), g.mul(x, v), g.mul(xi, v)]).unwrap();
        let sym = symbol_matrix(&s, &t).unwrap();
        assert!(sym.cell(0, 0).is_empty() && sym.cell(1, 1).is_empty());
        let x2 = g.mul(x, x);
        let mut expected = vec![u, g.mul(x2, u), v, g.mul(x2, v)];
        expected.sort();
        assert_eq!(sym.cell(0, 1), expected.as_slice());
        assert_eq!(sym.cell(1, 0).len(), 4);
    }

    #[test]
    fn empty_set_has_empty_cells() {
        let g = named_group("A4").unwrap();
        let h = generated_subgroup(&g, &g.elements("a,b").unwrap());
        let t = left_transversal(&g, &h, &[]).unwrap();
        let sym = symbol_matrix(&ConnectionSet::empty(), &t).unwrap();
        assert_eq!(sym.mass(), 0);
    }

    #[test]
    fn non_abelian_rejected() {
        let g = named_group("A4").unwrap();
        let whole = crate::group::SubgroupHandle::whole(&g);
        let t = left_transversal(&g, &whole, &[]).unwrap();
        assert_eq!(symbol_matrix(&ConnectionSet::empty(), &t), Err(KmmmError::NonAbelianSubgroup));
    }
}
