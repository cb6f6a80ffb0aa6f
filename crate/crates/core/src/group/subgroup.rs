use std::collections::HashSet;

use super::{Group, GroupError};

/// A subgroup of a parent group, held as a sorted element list.
#[derive(Clone)]
pub struct SubgroupHandle<'g> {
    parent: &'g Group,
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl std::fmt::Debug for SubgroupHandle<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupHandle")
            .field("parent", &self.parent.name())
            .field("order", &self.elements.len())
            .finish()
    }
}

impl PartialEq for SubgroupHandle<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.elements == other.elements
    }
}

impl<'g> SubgroupHandle<'g> {
    /// Wraps an element set after checking it is a subgroup.
    pub fn new(parent: &'g Group, mut elements: Vec<usize>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        for &e in &elements {
            parent.check_element(e)?;
        }
        let mut member = vec![false; parent.order()];
        for &e in &elements {
            member[e] = true;
        }
        let closed = member[0]
            && elements.iter().all(|&a| member[parent.inv(a)] && elements.iter().all(|&b| member[parent.mul(a, b)]));
        if !closed {
            return Err(GroupError::InvalidTable("element set is not closed under products and inverses".into()));
        }
        Ok(SubgroupHandle { parent, elements, member })
    }

    pub fn trivial(parent: &'g Group) -> Self {
        Self::from_closed(parent, vec![0])
    }

    pub fn whole(parent: &'g Group) -> Self {
        Self::from_closed(parent, (0..parent.order()).collect())
    }

    fn from_closed(parent: &'g Group, elements: Vec<usize>) -> Self {
        let mut member = vec![false; parent.order()];
        for &e in &elements {
            member[e] = true;
        }
        SubgroupHandle { parent, elements, member }
    }

    pub fn parent(&self) -> &'g Group {
        self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.member[g]
    }

    pub fn is_subset_of(&self, other: &SubgroupHandle<'_>) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.parent;
        self.elements.iter().all(|&a| self.elements.iter().all(|&b| g.commutes(a, b)))
    }

    /// `g·N·g⁻¹ = N` for every `g`.
    pub fn is_normal(&self) -> bool {
        let g = self.parent;
        (0..g.order()).all(|x| self.elements.iter().all(|&n| self.contains(g.conjugate(n, x))))
    }

    /// The subgroup as a standalone group; element `i` is `elements()[i]`.
    pub fn to_group(&self) -> Group {
        let g = self.parent;
        let n = self.order();
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &e) in self.elements.iter().enumerate() {
            pos[e] = i;
        }
        let mut mul = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                mul.push(pos[g.mul(a, b)] as u32);
            }
        }
        let labeling = g.labeling().derived(&self.elements, |e| (pos[e] != usize::MAX).then_some(pos[e]));
        let gens: Vec<&str> = self.elements.iter().skip(1).take(3).map(|&e| g.label(e)).collect();
        let name = if n == g.order() {
            g.name().to_string()
        } else {
            format!("<{}{}> <= {}", gens.join(","), if n > 4 { ",…" } else { "" }, g.name())
        };
        Group::from_table(name, n, mul, labeling).expect("subgroup of a valid group is a valid group")
    }
}

/// Smallest subgroup containing `seed`.
pub fn generated_subgroup<'g>(group: &'g Group, seed: &[usize]) -> SubgroupHandle<'g> {
    let n = group.order();
    let mut member = vec![false; n];
    member[0] = true;
    let mut elements = vec![0usize];
    let gens: Vec<usize> = seed.iter().copied().filter(|&s| s != 0 && s < n).collect();
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i];
        for &s in &gens {
            let y = group.mul(x, s);
            if !member[y] {
                member[y] = true;
                elements.push(y);
            }
        }
        i += 1;
    }
    elements.sort_unstable();
    SubgroupHandle { parent: group, elements, member }
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure<'g>(group: &'g Group, seed: &[usize]) -> SubgroupHandle<'g> {
    let mut conjugates: Vec<usize> = Vec::new();
    for &s in seed {
        for g in 0..group.order() {
            conjugates.push(group.conjugate(s, g));
        }
    }
    conjugates.sort_unstable();
    conjugates.dedup();
    generated_subgroup(group, &conjugates)
}

/// The derived subgroup `[G,G]`.
pub fn commutator_subgroup(group: &Group) -> SubgroupHandle<'_> {
    let n = group.order();
    let mut comms: Vec<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| group.commutator(a, b)).collect();
    comms.sort_unstable();
    comms.dedup();
    generated_subgroup(group, &comms)
}

/// Factor group with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    /// Parent element ↦ coset index.
    pub projection: Vec<usize>,
    /// Coset index ↦ least parent element of the coset.
    pub representatives: Vec<usize>,
}

impl Quotient {
    /// All parent elements in coset `c`.
    pub fn coset(&self, c: usize) -> Vec<usize> {
        self.projection.iter().enumerate().filter(|(_, &p)| p == c).map(|(g, _)| g).collect()
    }
}

pub fn quotient(group: &Group, normal: &SubgroupHandle<'_>) -> Result<Quotient, GroupError> {
    if !normal.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let n = group.order();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for g in 0..n {
        if projection[g] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(g);
        for &h in normal.elements() {
            projection[group.mul(g, h)] = c;
        }
    }
    let m = representatives.len();
    let mut mul = Vec::with_capacity(m * m);
    for &a in &representatives {
        for &b in &representatives {
            mul.push(projection[group.mul(a, b)] as u32);
        }
    }
    let labeling = group.labeling().derived(&representatives, |e| Some(projection[e]));
    let name = format!("{}/N{}", group.name(), normal.order());
    let group = Group::from_table(name, m, mul, labeling)?;
    Ok(Quotient { group, projection, representatives })
}

/// Subgroups minimal among the non-abelian subgroups.
///
/// A minimal non-abelian group is generated by any two of its non-commuting
/// elements, so these are the inclusion-minimal members of
/// `{⟨a,b⟩ : ab ≠ ba}`.
pub fn minimal_nonabelian_subgroups(group: &Group, cap: usize) -> Result<Vec<SubgroupHandle<'_>>, GroupError> {
    let n = group.order();
    if n > cap {
        return Err(GroupError::CapExceeded { order: n, cap });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut found: Vec<SubgroupHandle<'_>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if group.commutes(a, b) {
                continue;
            }
            let h = generated_subgroup(group, &[a, b]);
            if seen.insert(h.elements().to_vec()) {
                found.push(h);
            }
        }
    }
    found.sort_by_key(|h| (h.order(), h.elements().to_vec()));
    let mut minimal: Vec<SubgroupHandle<'_>> = Vec::new();
    for h in found {
        if !minimal.iter().any(|m| m.is_subset_of(&h)) {
            minimal.push(h);
        }
    }
    Ok(minimal)
}

/// Every normal subgroup, ordered by size then elements.
///
/// Each normal subgroup is the join of the normal closures of its elements, so
/// closing the set of single-element normal closures under joins finds them all.
pub fn normal_subgroups(group: &Group) -> Vec<SubgroupHandle<'_>> {
    let mut found: Vec<Vec<usize>> = vec![vec![0]];
    for g in 1..group.order() {
        let n = normal_closure(group, &[g]).elements;
        if !found.contains(&n) {
            found.push(n);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let mut seed = found[i].clone();
            seed.extend_from_slice(&found[j]);
            let join = generated_subgroup(group, &seed).elements;
            if !found.contains(&join) {
                found.push(join);
            }
        }
        i += 1;
    }
    found.sort_by_key(|e| (e.len(), e.clone()));
    found.into_iter().map(|e| SubgroupHandle::from_closed(group, e)).collect()
}
