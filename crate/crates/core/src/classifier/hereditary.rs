//! Subgroup and quotient closure checks for a member of `G_k`.

use std::collections::HashSet;

use serde::Serialize;

use super::{gk_membership_with, ClassifierError, SweepOptions};
use crate::group::{fingerprint, generated_subgroup, normal_subgroups, quotient, Fingerprint, Group};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum HereditaryKind {
    /// `⟨a, b⟩ ∈ G_k`.
    PairSubgroup,
    /// `G/N ∈ G_{k/|N|}` for `|N|` dividing `k`.
    DivisorQuotient,
    /// `G/N ∈ G_k` for `N` abelian of odd order.
    OddAbelianQuotient,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HereditaryCheck {
    pub kind: HereditaryKind,
    /// Order of the subgroup, or of the normal subgroup `N`.
    pub subgroup_order: usize,
    /// Generators of the subgroup, or elements of `N`.
    pub elements: Vec<String>,
    pub tested_order: usize,
    pub k: usize,
    pub member: bool,
}

/// A quotient outside `G_k`: closure under factor groups fails without a divisibility hypothesis.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientObservation {
    pub normal_order: usize,
    pub normal_elements: Vec<String>,
    pub quotient: Fingerprint,
    pub k: usize,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HereditaryReport {
    pub group: String,
    pub k: usize,
    pub checks: Vec<HereditaryCheck>,
    pub violations: Vec<HereditaryCheck>,
    pub observations: Vec<QuotientObservation>,
    pub passed: bool,
}

/// For `G ∈ G_k`: every subgroup generated by at most two elements lies in
/// `G_k`; `G/N ∈ G_{k/|N|}` whenever `|N|` divides `k`; `G/N ∈ G_k` whenever
/// `N` is abelian of odd order. Also records every proper quotient that falls
/// outside `G_k`.
pub fn verify_hereditary_properties(group: &Group, k: usize, opts: &SweepOptions) -> Result<HereditaryReport, ClassifierError> {
    if !gk_membership_with(group, k, opts)?.is_member() {
        return Err(ClassifierError::NotAMember { group: group.name().to_string(), k });
    }
    let n = group.order();
    let mut checks = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for a in 0..n {
        for b in a..n {
            let h = generated_subgroup(group, &[a, b]);
            if h.order() == n || !seen.insert(h.elements().to_vec()) {
                continue;
            }
            let sub = h.to_group();
            let member = gk_membership_with(&sub, k, opts)?.is_member();
            let gens = if a == b { vec![a] } else { vec![a, b] };
            checks.push(HereditaryCheck {
                kind: HereditaryKind::PairSubgroup,
                subgroup_order: h.order(),
                elements: gens.iter().map(|&g| group.label(g).to_string()).collect(),
                tested_order: h.order(),
                k,
                member,
            });
        }
    }
    let mut observations = Vec::new();
    for normal in normal_subgroups(group) {
        if normal.order() == 1 || normal.order() == n {
            continue;
        }
        let q = quotient(group, &normal)?;
        let labels: Vec<String> = normal.elements().iter().map(|&g| group.label(g).to_string()).collect();
        let at_k = gk_membership_with(&q.group, k, opts)?;
        if k.is_multiple_of(normal.order()) {
            let l = k / normal.order();
            let member = if l == k { at_k.is_member() } else { gk_membership_with(&q.group, l, opts)?.is_member() };
            checks.push(HereditaryCheck {
                kind: HereditaryKind::DivisorQuotient,
                subgroup_order: normal.order(),
                elements: labels.clone(),
                tested_order: q.group.order(),
                k: l,
                member,
            });
        }
        if normal.order() % 2 == 1 && normal.is_abelian() {
            checks.push(HereditaryCheck {
                kind: HereditaryKind::OddAbelianQuotient,
                subgroup_order: normal.order(),
                elements: labels.clone(),
                tested_order: q.group.order(),
                k,
                member: at_k.is_member(),
            });
        }
        if !at_k.is_member() {
            observations.push(QuotientObservation {
                normal_order: normal.order(),
                normal_elements: labels,
                quotient: fingerprint(&q.group),
                k,
                witness: at_k.witness_labels.unwrap_or_default(),
            });
        }
    }
    let violations: Vec<HereditaryCheck> = checks.iter().filter(|c| !c.member).cloned().collect();
    Ok(HereditaryReport {
        group: group.name().to_string(),
        k,
        passed: violations.is_empty(),
        checks,
        violations,
        observations,
    })
}
