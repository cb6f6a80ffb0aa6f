//! Finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..n` with the identity fixed at index 0. Every
//! higher layer (spectra, symbols, classification) consumes indices only;
//! labels exist for reports and for typing connection sets by hand.

mod abelian;
mod catalog;
mod construct;
mod fingerprint;
mod labels;
mod perm;
mod subgroup;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use abelian::AbelianBasis;
pub use catalog::{named_group, CATALOG_NAMES};
pub use construct::{
    automorphism_from_images, cyclic, direct_product, elementary_abelian, generalized_dicyclic, make_abelian,
    make_dihedral, semidirect_product,
};
pub use fingerprint::{fingerprint, Fingerprint};
pub use perm::{from_permutations, parse_cycles, Permutation};
pub use subgroup::{
    commutator_subgroup, generated_subgroup, minimal_nonabelian_subgroups, normal_closure, normal_subgroups, quotient, Quotient,
    SubgroupHandle,
};

pub(crate) use labels::Labeling;

/// Tables up to this order get the full associativity check on construction.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;

/// Default order cap for the table-quadratic algorithms.
pub const DEFAULT_ORDER_CAP: usize = 256;

/// Default closure cap for permutation groups.
pub const DEFAULT_CLOSURE_CAP: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("group {name} has {count} involutions, expected exactly one")]
    NoUniqueInvolution { name: String, count: usize },
    #[error("group {name} of order {order} is too small (need order > 2)")]
    TooSmall { name: String, order: usize },
    #[error("dihedral order must be even and at least 4, got {0}")]
    InvalidDihedralOrder(usize),
    #[error("cyclic factor orders must be positive")]
    ZeroOrder,
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("action is inconsistent with the relations of the acting group: {0}")]
    ActionInconsistent(String),
    #[error("unknown catalog group {name:?}; known: {known}")]
    UnknownName { name: String, known: String },
    #[error("permutation closure exceeds cap {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("element index {index} out of range for order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("unknown element label {label:?}{}", suggestion_suffix(.suggestions))]
    UnknownLabel { label: String, suggestions: Vec<String> },
    #[error("elements do not generate the group")]
    NotGenerating,
}

fn split_top_level(list: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&list[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&list[start..]);
    parts
}

fn suggestion_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!("; did you mean one of: {}", suggestions.join(", "))
    }
}

/// A finite group as an immutable multiplication table.
#[derive(Clone)]
pub struct Group {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labeling: Labeling,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("name", &self.name).field("order", &self.order).finish()
    }
}

impl Group {
    /// Validates and wraps a row-major table. `mul[g * n + h]` is `g·h`.
    pub(crate) fn from_table(name: impl Into<String>, order: usize, mul: Vec<u32>, labeling: Labeling) -> Result<Self, GroupError> {
        let name = name.into();
        if order == 0 {
            return Err(GroupError::InvalidTable("empty group".into()));
        }
        if mul.len() != order * order {
            return Err(GroupError::InvalidTable(format!("table has {} cells for order {order}", mul.len())));
        }
        if labeling.len() != order {
            return Err(GroupError::InvalidTable(format!("{} labels for order {order}", labeling.len())));
        }
        for g in 0..order {
            if mul[g] as usize != g || mul[g * order] as usize != g {
                return Err(GroupError::InvalidTable(format!("index 0 is not the identity at {g}")));
            }
        }
        let mut seen = vec![0usize; order];
        for g in 0..order {
            for h in 0..order {
                let v = mul[g * order + h] as usize;
                if v >= order || seen[v] == g + 1 {
                    return Err(GroupError::InvalidTable(format!("row {g} is not a permutation")));
                }
                seen[v] = g + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for h in 0..order {
            for g in 0..order {
                let v = mul[g * order + h] as usize;
                if seen[v] == h + 1 {
                    return Err(GroupError::InvalidTable(format!("column {h} is not a permutation")));
                }
                seen[v] = h + 1;
            }
        }
        let mut inv = vec![0u32; order];
        for g in 0..order {
            let row = &mul[g * order..(g + 1) * order];
            let h = row.iter().position(|&v| v == 0).expect("latin row contains the identity");
            inv[g] = h as u32;
        }
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = mul[a * order + b] as usize;
                    for c in 0..order {
                        let bc = mul[b * order + c] as usize;
                        if mul[ab * order + c] != mul[a * order + bc] {
                            return Err(GroupError::InvalidTable(format!("associativity fails at ({a},{b},{c})")));
                        }
                    }
                }
            }
        }
        Ok(Group { name, order, mul, inv, labeling })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }

    /// Row `g` of the table: `h ↦ g·h`.
    pub fn row(&self, g: usize) -> &[u32] {
        &self.mul[g * self.order..(g + 1) * self.order]
    }

    pub fn check_element(&self, g: usize) -> Result<usize, GroupError> {
        if g < self.order {
            Ok(g)
        } else {
            Err(GroupError::InvalidElement { index: g, order: self.order })
        }
    }

    /// `g^e` for any integer exponent.
    pub fn pow(&self, g: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(g) } else { g };
        let mut e = e.unsigned_abs() % self.element_order(g) as u64;
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// Least `m ≥ 1` with `g^m = 1`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut m = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    /// Census of element orders as `order ↦ count`.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for g in 0..self.order {
            *profile.entry(self.element_order(g)).or_insert(0) += 1;
        }
        profile
    }

    pub fn exponent(&self) -> usize {
        self.order_profile().keys().fold(1, |acc, &o| lcm(acc, o))
    }

    pub fn commutes(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g + 1..self.order).all(|h| self.commutes(g, h)))
    }

    /// `[g,h] = g⁻¹h⁻¹gh`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        let gi = self.inv(g);
        let hi = self.inv(h);
        self.mul(self.mul(gi, hi), self.mul(g, h))
    }

    /// `h^g = g⁻¹hg`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| (0..self.order).all(|g| self.commutes(z, g))).collect()
    }

    pub fn involutions(&self) -> Vec<usize> {
        (1..self.order).filter(|&g| self.mul(g, g) == 0).collect()
    }

    pub fn labels(&self) -> &[String] {
        self.labeling.display()
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labeling.display()[g]
    }

    /// Named elements usable in words: generators then aliases.
    pub fn named_elements(&self) -> Vec<(String, usize)> {
        self.labeling.named_elements()
    }

    /// Resolves a label or a word such as `b^-1a^2c` to an element index.
    pub fn element(&self, text: &str) -> Result<usize, GroupError> {
        self.labeling.resolve(self, text)
    }

    /// Resolves a comma-separated list of labels or words. Commas inside
    /// parentheses belong to cycle notation, not to the list.
    pub fn elements(&self, list: &str) -> Result<Vec<usize>, GroupError> {
        split_top_level(list).into_iter().map(str::trim).filter(|s| !s.is_empty()).map(|s| self.element(s)).collect()
    }

    /// Replaces generator names; display labels are re-rendered from words.
    pub fn with_generator_names(mut self, names: &[&str]) -> Self {
        self.labeling.rename_generators(names);
        self
    }

    /// Adds an alias; aliases take part in word parsing.
    pub fn with_alias(mut self, alias: &str, element: usize) -> Self {
        self.labeling.add_alias(alias, element);
        self
    }

    /// Overrides display labels (must be unique).
    pub fn with_display_labels(mut self, labels: Vec<String>) -> Self {
        self.labeling.set_display(labels);
        self
    }

    pub(crate) fn labeling(&self) -> &Labeling {
        &self.labeling
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_splitting_respects_cycles() {
        let a4 = named_group("A4").unwrap();
        let xs = a4.elements("(1,3)(2,4), (1,2,3),c^-1").unwrap();
        assert_eq!(xs.len(), 3);
        assert_eq!(xs[0], a4.element("b").unwrap());
        assert_eq!(xs[1], a4.element("c").unwrap());
        assert_eq!(split_top_level("a,b"), vec!["a", "b"]);
    }

    #[test]
    fn cyclic_four_profile() {
        let z4 = make_abelian(&[4]).unwrap();
        let orders: Vec<_> = (0..4).map(|g| z4.element_order(g)).collect();
        assert_eq!(orders, vec![1, 4, 2, 4]);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let z6 = make_abelian(&[6]).unwrap();
        let a = z6.element("a").unwrap();
        assert_eq!(z6.pow(a, -1), z6.inv(a));
        assert_eq!(z6.pow(a, 6), 0);
        assert_eq!(z6.pow(a, -7), z6.inv(a));
    }

    #[test]
    fn rejects_non_latin_table() {
        let lab = Labeling::plain(2);
        let err = Group::from_table("bad", 2, vec![0, 1, 1, 1], lab).unwrap_err();
        assert!(matches!(err, GroupError::InvalidTable(_)));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // Latin square of order 5 with identity 0 that is not a group.
        let t: Vec<u32> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = Group::from_table("loop", 5, t, Labeling::plain(5)).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }
}
