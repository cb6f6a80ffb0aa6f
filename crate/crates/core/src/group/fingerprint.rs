use serde::Serialize;

use super::{commutator_subgroup, quotient, AbelianBasis, Group};

/// Isomorphism invariants used to tell catalog groups apart.
///
/// Not a complete invariant in general; it separates the exponent-≤4
/// minimal non-abelian 2-groups and `H27`, which is all the catalog needs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub center_order: usize,
    /// `(element order, count)`, ascending.
    pub order_profile: Vec<(usize, usize)>,
    /// Invariant factors of `G/[G,G]`.
    pub abelianization: Vec<usize>,
}

pub fn fingerprint(group: &Group) -> Fingerprint {
    let derived = commutator_subgroup(group);
    let ab = quotient(group, &derived).expect("derived subgroup is normal");
    let abelianization =
        AbelianBasis::of_group(&ab.group).expect("abelianization is abelian").invariant_factors();
    Fingerprint {
        order: group.order(),
        abelian: group.is_abelian(),
        exponent: group.exponent(),
        center_order: group.center().len(),
        order_profile: group.order_profile().into_iter().collect(),
        abelianization,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, elementary_abelian, named_group};

    #[test]
    fn e4_and_z4_differ_in_exponent() {
        let e4 = fingerprint(&elementary_abelian(4).unwrap());
        let z4 = fingerprint(&cyclic(4).unwrap());
        assert_eq!(e4.exponent, 2);
        assert_eq!(z4.exponent, 4);
        assert_ne!(e4, z4);
        assert_eq!(z4.abelianization, vec![4]);
    }

    #[test]
    fn q8_and_d8_differ_in_involutions() {
        let q = fingerprint(&named_group("Q8").unwrap());
        let d = fingerprint(&named_group("D8").unwrap());
        assert_eq!(q.order_profile, vec![(1, 1), (2, 1), (4, 6)]);
        assert_eq!(d.order_profile, vec![(1, 1), (2, 5), (4, 2)]);
    }
}
