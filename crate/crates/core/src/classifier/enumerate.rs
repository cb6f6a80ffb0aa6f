use crate::group::Group;
use crate::spectral::{atoms, Atom, ConnectionSet};

/// Every inverse-closed, identity-free `S` with `1 ≤ |S| ≤ k`, once each, as
/// unions of atoms taken in lexicographic order of their atom-index lists.
pub fn enumerate_connection_sets(group: &Group, k: usize) -> ConnectionSets {
    ConnectionSets::new(atoms(group), k)
}

/// Depth-first walk over increasing atom-index lists with size-sum at most `k`.
#[derive(Clone, Debug)]
pub struct ConnectionSets {
    atoms: Vec<Atom>,
    k: usize,
    stack: Vec<usize>,
    size: usize,
    next: usize,
}

impl ConnectionSets {
    pub fn new(atoms: Vec<Atom>, k: usize) -> Self {
        ConnectionSets { atoms, k, stack: Vec::new(), size: 0, next: 0 }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Indices of the atoms in the set most recently returned.
    pub fn current_atoms(&self) -> &[usize] {
        &self.stack
    }
}

impl Iterator for ConnectionSets {
    type Item = ConnectionSet;

    fn next(&mut self) -> Option<ConnectionSet> {
        loop {
            // first atom at or after `next` that still fits
            let fits = (self.next..self.atoms.len()).find(|&i| self.size + self.atoms[i].size() <= self.k);
            match fits {
                Some(i) => {
                    self.stack.push(i);
                    self.size += self.atoms[i].size();
                    self.next = i + 1;
                    return Some(ConnectionSet::from_atoms(&self.atoms, &self.stack));
                }
                None => {
                    let last = self.stack.pop()?;
                    self.size -= self.atoms[last].size();
                    self.next = last + 1;
                }
            }
        }
    }
}

/// Number of sets [`enumerate_connection_sets`] yields, from atom sizes alone.
pub fn count_connection_sets(group: &Group, k: usize) -> u64 {
    let all = atoms(group);
    let singles = all.iter().filter(|a| a.size() == 1).count();
    let pairs = all.len() - singles;
    let mut total = 0u64;
    for i in 0..=singles.min(k) {
        for j in 0..=pairs.min((k - i) / 2) {
            if i + j > 0 {
                total += binomial(singles, i) * binomial(pairs, j);
            }
        }
    }
    total
}

fn binomial(n: usize, r: usize) -> u64 {
    (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{elementary_abelian, generalized_dicyclic, make_abelian, named_group};
    use std::collections::HashSet;

    #[test]
    fn q8_and_e4_counts() {
        let q8 = named_group("Q8").unwrap();
        let sets: Vec<ConnectionSet> = enumerate_connection_sets(&q8, 3).collect();
        assert_eq!(sets.len(), 7);
        assert_eq!(sets.iter().filter(|s| s.len() == 1).count(), 1);
        let e4 = elementary_abelian(4).unwrap();
        assert_eq!(enumerate_connection_sets(&e4, 2).count(), 6);
    }

    #[test]
    fn dicyclic_count() {
        let g = generalized_dicyclic(&make_abelian(&[3, 6]).unwrap()).unwrap();
        assert_eq!(enumerate_connection_sets(&g, 5).count(), 307);
        assert_eq!(count_connection_sets(&g, 5), 307);
    }

    #[test]
    fn sets_are_distinct_valid_and_lexicographic() {
        let g = named_group("D8").unwrap();
        let mut it = enumerate_connection_sets(&g, 7);
        let mut seen = HashSet::new();
        let mut prev: Option<Vec<usize>> = None;
        while let Some(s) = it.next() {
            assert!(ConnectionSet::new(&g, s.elements().to_vec()).is_ok());
            assert!(seen.insert(s.elements().to_vec()));
            let cur = it.current_atoms().to_vec();
            if let Some(p) = prev {
                assert!(p < cur);
            }
            prev = Some(cur);
        }
        assert_eq!(seen.len(), 63);
        assert_eq!(count_connection_sets(&g, 7), 63);
    }
}
