use serde::Serialize;

use super::KmmmError;
use crate::group::{Group, SubgroupHandle};

/// Representatives `t_1 = 1, t_2, …, t_m` of the left cosets `t_i·H`, the
/// orbits of `H` acting by right multiplication.
#[derive(Clone, Debug)]
pub struct Transversal<'g> {
    subgroup: SubgroupHandle<'g>,
    reps: Vec<usize>,
    /// Element `g` ↦ `(i, x)` with `g = t_i·x`, `x ∈ H`.
    coset_of: Vec<(usize, usize)>,
}

impl<'g> Transversal<'g> {
    pub fn subgroup(&self) -> &SubgroupHandle<'g> {
        &self.subgroup
    }

    pub fn group(&self) -> &'g Group {
        self.subgroup.parent()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn m(&self) -> usize {
        self.reps.len()
    }

    /// `(i, x)` with `g = t_i·x`.
    pub fn coset_of(&self, g: usize) -> (usize, usize) {
        self.coset_of[g]
    }

    pub fn rep_labels(&self) -> Vec<String> {
        self.reps.iter().map(|&t| self.group().label(t).to_string()).collect()
    }
}

/// Chooses coset representatives, keeping `pinned` verbatim in front.
///
/// The identity is always `t_1`: it is prepended when absent from `pinned` and
/// must come first when present. Remaining cosets take their least element.
pub fn left_transversal<'g>(
    group: &'g Group,
    subgroup: &SubgroupHandle<'g>,
    pinned: &[usize],
) -> Result<Transversal<'g>, KmmmError> {
    if !std::ptr::eq(subgroup.parent(), group) {
        return Err(KmmmError::ForeignSubgroup);
    }
    for &p in pinned {
        group.check_element(p)?;
    }
    let mut reps: Vec<usize> = Vec::with_capacity(subgroup.index());
    match pinned.iter().position(|&p| p == 0) {
        None => reps.push(0),
        Some(0) => {}
        Some(_) => return Err(KmmmError::IdentityNotFirst),
    }
    reps.extend_from_slice(pinned);
    let n = group.order();
    let mut coset_of = vec![(usize::MAX, 0); n];
    let claim = |reps: &[usize], i: usize, coset_of: &mut Vec<(usize, usize)>| -> Result<(), KmmmError> {
        let t = reps[i];
        for &x in subgroup.elements() {
            let g = group.mul(t, x);
            if coset_of[g].0 != usize::MAX {
                return Err(KmmmError::PinnedCollision {
                    first: group.label(reps[coset_of[g].0]).to_string(),
                    second: group.label(t).to_string(),
                });
            }
            coset_of[g] = (i, x);
        }
        Ok(())
    };
    for i in 0..reps.len() {
        claim(&reps, i, &mut coset_of)?;
    }
    for g in 0..n {
        if coset_of[g].0 == usize::MAX {
            reps.push(g);
            claim(&reps, reps.len() - 1, &mut coset_of)?;
        }
    }
    Ok(Transversal { subgroup: subgroup.clone(), reps, coset_of })
}

/// Transversal data in label form, for reports.
#[derive(Clone, Debug, Serialize)]
pub struct TransversalSummary {
    pub subgroup: Vec<String>,
    pub reps: Vec<String>,
}

impl From<&Transversal<'_>> for TransversalSummary {
    fn from(t: &Transversal<'_>) -> Self {
        let g = t.group();
        TransversalSummary {
            subgroup: t.subgroup.elements().iter().map(|&h| g.label(h).to_string()).collect(),
            reps: t.rep_labels(),
        }
    }
}
