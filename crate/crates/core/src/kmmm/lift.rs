use super::KmmmError;
use crate::group::{Group, Quotient, SubgroupHandle};
use crate::spectral::ConnectionSet;

/// Lifts a connection set of `G/N` to one of `G` of the same size that
/// projects onto it, for `N` normal, abelian and of odd order.
///
/// Mutually inverse cosets `Nr ≠ Nr⁻¹` take the representatives `r` and `r⁻¹`;
/// a self-inverse coset takes its least involution, which exists because
/// `⟨N, r⟩` has order `2|N|` with `|N|` odd.
pub fn lift_connection_set(
    group: &Group,
    normal: &SubgroupHandle<'_>,
    quotient: &Quotient,
    quotient_set: &ConnectionSet,
) -> Result<ConnectionSet, KmmmError> {
    if !std::ptr::eq(normal.parent(), group) {
        return Err(KmmmError::ForeignSubgroup);
    }
    if !normal.is_normal() {
        return Err(KmmmError::NotNormal);
    }
    if !normal.is_abelian() {
        return Err(KmmmError::NonAbelianSubgroup);
    }
    if normal.order().is_multiple_of(2) {
        return Err(KmmmError::EvenOrderSubgroup { order: normal.order() });
    }
    let matches = quotient.projection.len() == group.order()
        && quotient.group.order() * normal.order() == group.order()
        && normal.elements().iter().all(|&h| quotient.projection[h] == 0);
    if !matches {
        return Err(KmmmError::QuotientMismatch);
    }
    let q = &quotient.group;
    let mut lifted = Vec::with_capacity(quotient_set.len());
    for &c in quotient_set.elements() {
        let ci = q.inv(c);
        let r = if ci == c {
            quotient
                .coset(c)
                .into_iter()
                .find(|&y| group.mul(y, y) == 0)
                .expect("a self-inverse coset of an odd-order normal subgroup holds an involution")
        } else if c < ci {
            quotient.representatives[c]
        } else {
            group.inv(quotient.representatives[ci])
        };
        lifted.push(r);
    }
    let lifted = ConnectionSet::new(group, lifted).map_err(KmmmError::Spectral)?;
    debug_assert!(lifted.elements().iter().all(|&r| quotient_set.contains(quotient.projection[r])));
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generated_subgroup, named_group, quotient};
    use crate::spectral::float::sub_multiset_close;
    use crate::spectral::{atoms, cayley_adjacency, float_spectrum};

    #[test]
    fn trivial_normal_subgroup_changes_nothing() {
        let g = named_group("D6").unwrap();
        let n = SubgroupHandle::trivial(&g);
        let q = quotient(&g, &n).unwrap();
        let s = ConnectionSet::parse(&q.group, "a,a^-1").unwrap();
        let r = lift_connection_set(&g, &n, &q, &s).unwrap();
        let projected: Vec<usize> = r.elements().iter().map(|&x| q.projection[x]).collect();
        assert_eq!(projected, s.elements());
    }

    #[test]
    fn central_z3_of_d6xz3() {
        let g = named_group("D6xZ3").unwrap();
        let n = generated_subgroup(&g, &g.elements("u").unwrap());
        let q = quotient(&g, &n).unwrap();
        // quotient ≅ D6; lift every pair-free set of size 2
        for a in atoms(&q.group) {
            for b in atoms(&q.group) {
                if a.size() + b.size() != 2 || a.elements()[0] >= b.elements()[0] {
                    continue;
                }
                let mut elems = a.elements().to_vec();
                elems.extend_from_slice(b.elements());
                let s = ConnectionSet::new(&q.group, elems).unwrap();
                let r = lift_connection_set(&g, &n, &q, &s).unwrap();
                assert_eq!(r.len(), 2);
                let qs = float_spectrum(&cayley_adjacency(&q.group, &s));
                let gs = float_spectrum(&cayley_adjacency(&g, &r));
                assert!(sub_multiset_close(&qs, &gs, 1e-6));
            }
        }
    }

    #[test]
    fn rejects_even_and_non_normal() {
        let g = named_group("D8").unwrap();
        let center = generated_subgroup(&g, &[g.pow(g.element("a").unwrap(), 2)]);
        let q = quotient(&g, &center).unwrap();
        let err = lift_connection_set(&g, &center, &q, &ConnectionSet::empty()).unwrap_err();
        assert_eq!(err, KmmmError::EvenOrderSubgroup { order: 2 });
        let d6 = named_group("D6").unwrap();
        let flip = generated_subgroup(&d6, &d6.elements("b").unwrap());
        let q6 = quotient(&d6, &SubgroupHandle::trivial(&d6)).unwrap();
        assert_eq!(lift_connection_set(&d6, &flip, &q6, &ConnectionSet::empty()).unwrap_err(), KmmmError::NotNormal);
    }
}
