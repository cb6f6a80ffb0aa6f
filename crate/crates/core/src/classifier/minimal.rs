//! `G_3` membership of non-abelian 2-groups against their minimal non-abelian subgroups.

use serde::Serialize;

use super::{gk_membership_with, ClassifierError, SweepOptions};
use crate::group::{fingerprint, minimal_nonabelian_subgroups, named_group, Fingerprint, Group, DEFAULT_ORDER_CAP};

/// Minimal non-abelian groups allowed inside a 2-group of `G_3`.
pub const G3_ALLOWED: [&str; 3] = ["Q8", "H2", "H32"];

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalSubgroup {
    pub order: usize,
    pub generators: Vec<String>,
    pub fingerprint: Fingerprint,
    /// Which allowed group it matches by fingerprint.
    pub matches: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalNonabelianReport {
    pub group: String,
    pub in_g3: bool,
    pub subgroups: Vec<MinimalSubgroup>,
    /// Every minimal non-abelian subgroup is `Q8`, `H2` or `H32`.
    pub all_allowed: bool,
    pub agrees: bool,
}

/// For a 2-group: compares `G ∈ G_3` (by sweep) with "every minimal non-abelian
/// subgroup is `Q8`, `H2` or `H32`" (by fingerprint).
pub fn minimal_nonabelian_report(group: &Group, opts: &SweepOptions) -> Result<MinimalNonabelianReport, ClassifierError> {
    if !group.order().is_power_of_two() {
        return Err(ClassifierError::NotTwoGroup { order: group.order() });
    }
    let allowed: Vec<(&str, Fingerprint)> =
        G3_ALLOWED.iter().map(|&n| Ok((n, fingerprint(&named_group(n)?)))).collect::<Result<_, ClassifierError>>()?;
    let in_g3 = gk_membership_with(group, 3, opts)?.is_member();
    let subgroups: Vec<MinimalSubgroup> = minimal_nonabelian_subgroups(group, DEFAULT_ORDER_CAP)?
        .iter()
        .map(|h| {
            let fp = fingerprint(&h.to_group());
            let gens = two_generators(group, h.elements());
            MinimalSubgroup {
                order: h.order(),
                generators: gens.iter().map(|&g| group.label(g).to_string()).collect(),
                matches: allowed.iter().find(|(_, f)| *f == fp).map(|(n, _)| n.to_string()),
                fingerprint: fp,
            }
        })
        .collect();
    let all_allowed = subgroups.iter().all(|s| s.matches.is_some());
    Ok(MinimalNonabelianReport { group: group.name().to_string(), in_g3, agrees: in_g3 == all_allowed, all_allowed, subgroups })
}

/// A non-commuting pair inside `elements` (which generates it when minimal).
fn two_generators(group: &Group, elements: &[usize]) -> Vec<usize> {
    for (i, &a) in elements.iter().enumerate() {
        for &b in &elements[i + 1..] {
            if !group.commutes(a, b) {
                return vec![a, b];
            }
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, elementary_abelian};

    #[test]
    fn q8_times_e4() {
        let g = direct_product(&named_group("Q8").unwrap(), &elementary_abelian(4).unwrap()).unwrap();
        let r = minimal_nonabelian_report(&g, &SweepOptions::default()).unwrap();
        assert!(r.in_g3 && r.all_allowed && r.agrees);
        assert!(r.subgroups.iter().all(|s| s.matches.as_deref() == Some("Q8")));
    }

    #[test]
    fn h16_is_its_own_minimal_subgroup() {
        let g = named_group("H16").unwrap();
        let r = minimal_nonabelian_report(&g, &SweepOptions::default()).unwrap();
        assert!(!r.in_g3);
        assert_eq!(r.subgroups.len(), 1);
        assert_eq!(r.subgroups[0].order, 16);
        assert!(r.agrees);
    }

    #[test]
    fn h2_in_g3() {
        let r = minimal_nonabelian_report(&named_group("H2").unwrap(), &SweepOptions::default()).unwrap();
        assert!(r.in_g3 && r.agrees);
    }

    #[test]
    fn odd_order_rejected() {
        let g = named_group("H27").unwrap();
        assert!(matches!(
            minimal_nonabelian_report(&g, &SweepOptions::default()),
            Err(ClassifierError::NotTwoGroup { order: 27 })
        ));
    }
}
