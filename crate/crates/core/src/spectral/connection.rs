use serde::Serialize;

use super::SpectralError;
use crate::group::Group;

/// An inverse-closed, identity-free subset of a group.
///
/// Holds sorted element indices only; it is validated against a group at
/// construction and must be used with that group afterwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConnectionSet {
    elements: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(group: &Group, mut elements: Vec<usize>) -> Result<Self, SpectralError> {
        elements.sort_unstable();
        elements.dedup();
        for &s in &elements {
            if s >= group.order() {
                return Err(SpectralError::InvalidConnectionSet(format!("element {s} out of range")));
            }
            if s == 0 {
                return Err(SpectralError::InvalidConnectionSet("contains the identity".into()));
            }
            if elements.binary_search(&group.inv(s)).is_err() {
                return Err(SpectralError::InvalidConnectionSet(format!(
                    "not inverse-closed: {} present but {} missing",
                    group.label(s),
                    group.label(group.inv(s))
                )));
            }
        }
        Ok(ConnectionSet { elements })
    }

    /// Parses comma-separated labels or words.
    pub fn parse(group: &Group, list: &str) -> Result<Self, SpectralError> {
        let elems = group.elements(list).map_err(|e| SpectralError::InvalidConnectionSet(e.to_string()))?;
        Self::new(group, elems)
    }

    pub fn empty() -> Self {
        ConnectionSet { elements: Vec::new() }
    }

    pub(crate) fn from_atoms(atoms: &[Atom], chosen: &[usize]) -> Self {
        let mut elements: Vec<usize> = chosen.iter().flat_map(|&i| atoms[i].elements().iter().copied()).collect();
        elements.sort_unstable();
        ConnectionSet { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn labels(&self, group: &Group) -> Vec<String> {
        self.elements.iter().map(|&s| group.label(s).to_string()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AtomKind {
    Involution,
    Pair,
}

/// `{t}` for an involution `t`, or `{s, s⁻¹}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    kind: AtomKind,
    elements: [usize; 2],
}

impl Atom {
    pub fn kind(&self) -> AtomKind {
        self.kind
    }

    pub fn elements(&self) -> &[usize] {
        match self.kind {
            AtomKind::Involution => &self.elements[..1],
            AtomKind::Pair => &self.elements,
        }
    }

    pub fn size(&self) -> usize {
        self.elements().len()
    }
}

/// Partition of the non-identity elements into involution singletons and inverse pairs,
/// ordered by least element.
pub fn atoms(group: &Group) -> Vec<Atom> {
    (1..group.order())
        .filter_map(|g| {
            let gi = group.inv(g);
            if gi == g {
                Some(Atom { kind: AtomKind::Involution, elements: [g, g] })
            } else if g < gi {
                Some(Atom { kind: AtomKind::Pair, elements: [g, gi] })
            } else {
                None
            }
        })
        .collect()
}
