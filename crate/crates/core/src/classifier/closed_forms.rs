//! Chi-matrix eigenvalues of `Dic(E_{3^n} × Z6)` against their closed forms.
//!
//! `H = E_{3^n} × Z6` (which contains `x²`), pinned representatives `1, x`.
//! Two families of 4-element sets:
//!
//! * disjoint: `S = {xu, x⁻¹u, xv, x⁻¹v}` with `u, v` in distinct cosets of
//!   `⟨x²⟩`; each chi-matrix has eigenvalues `±(1+χ(x²))·|χ(u)+χ(v)|`;
//! * meeting: `S = {v, v⁻¹, xu, x⁻¹u}` with `v ∈ H`, `v ≠ v⁻¹`; eigenvalues
//!   `χ(v)+χ(v⁻¹) ± (1+χ(x²))`.
//!
//! `χ(x²) = ±1`, so the factor `1+χ(x²)` is real and the absolute value in the
//! disjoint case is immaterial.

use serde::Serialize;

use super::ClassifierError;
use crate::group::{generalized_dicyclic, generated_subgroup, make_abelian, Group};
use crate::kmmm::decompose;
use crate::spectral::float::sorted_close;
use crate::spectral::{cayley_adjacency, float_spectrum, ConnectionSet};

use super::witnesses::CLOSED_FORM_TOLERANCE;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ClosedFormCase {
    Disjoint,
    Meeting,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedFormCaseReport {
    pub case: ClosedFormCase,
    pub sets: usize,
    /// Character blocks compared, summed over sets.
    pub blocks_checked: usize,
    pub max_error: f64,
    /// Symbol cells had the expected sizes for every set.
    pub symbol_shape_ok: bool,
    /// Union of the closed forms equals the float spectrum of the graph.
    pub graph_spectrum_ok: bool,
    pub failures: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedFormReport {
    pub group: String,
    pub n: u32,
    pub group_order: usize,
    pub characters: usize,
    pub cases: Vec<ClosedFormCaseReport>,
    pub passed: bool,
}

/// `Dic(E_{3^n} × Z6)`; generators `a, b, …` then `x`.
pub fn dicyclic_host(n: u32) -> Result<Group, ClassifierError> {
    let mut orders = vec![3; n as usize];
    orders.push(6);
    Ok(generalized_dicyclic(&make_abelian(&orders)?)?)
}

pub fn verify_closed_forms(n: u32) -> Result<ClosedFormReport, ClassifierError> {
    let g = dicyclic_host(n)?;
    let na = g.order() / 2;
    let h = generated_subgroup(&g, &(0..na).collect::<Vec<_>>());
    let x = na;
    let t = g.mul(x, x);
    let pins = [0, x];
    // least element of each ⟨x²⟩-coset in H
    let coset_reps: Vec<usize> = (0..na).filter(|&u| g.mul(t, u) > u).collect();
    let half = |u: usize| vec![g.mul(x, u), g.mul(g.inv(x), u)];

    let mut families: Vec<(ClosedFormCase, Vec<(usize, usize)>)> = Vec::new();
    let mut disjoint = Vec::new();
    for (i, &u) in coset_reps.iter().enumerate() {
        for &v in &coset_reps[i + 1..] {
            disjoint.push((u, v));
        }
    }
    families.push((ClosedFormCase::Disjoint, disjoint));
    let mut meeting = Vec::new();
    for &u in &coset_reps {
        for v in 1..na {
            if g.inv(v) > v {
                meeting.push((u, v));
            }
        }
    }
    families.push((ClosedFormCase::Meeting, meeting));

    let mut cases = Vec::new();
    let mut characters = 0;
    for (case, pairs) in families {
        let mut report = ClosedFormCaseReport {
            case,
            sets: pairs.len(),
            blocks_checked: 0,
            max_error: 0.0,
            symbol_shape_ok: true,
            graph_spectrum_ok: true,
            failures: Vec::new(),
        };
        for (u, v) in pairs {
            let elements = match case {
                ClosedFormCase::Disjoint => [half(u), half(v)].concat(),
                ClosedFormCase::Meeting => [vec![v, g.inv(v)], half(u)].concat(),
            };
            let set = ConnectionSet::new(&g, elements)?;
            let dec = decompose(&g, &set, &h, &pins)?;
            let sym = &dec.symbol;
            let diag = if case == ClosedFormCase::Meeting { 2 } else { 0 };
            let shape = sym.m() == 2
                && sym.cell(0, 0).len() == diag
                && sym.cell(1, 1).len() == diag
                && sym.cell(0, 1).len() == 4 - diag
                && sym.cell(1, 0).len() == 4 - diag;
            report.symbol_shape_ok &= shape;
            characters = dec.blocks.len();
            let mut predicted_all = Vec::with_capacity(g.order());
            let mut ok = shape;
            for block in &dec.blocks {
                let chi = |e: usize| block.character.value_complex(e).expect("element of H");
                let scale = 1.0 + chi(t).re;
                let predicted = match case {
                    ClosedFormCase::Disjoint => {
                        let r = scale * (chi(u) + chi(v)).norm();
                        [-r, r]
                    }
                    ClosedFormCase::Meeting => {
                        let c = (chi(v) + chi(g.inv(v))).re;
                        [c - scale, c + scale]
                    }
                };
                let mut got = block.eigenvalues.values.clone();
                got.sort_by(f64::total_cmp);
                for (p, q) in predicted.iter().zip(&got) {
                    let err = (p - q).abs();
                    report.max_error = report.max_error.max(err);
                    ok &= err <= CLOSED_FORM_TOLERANCE;
                }
                ok &= got.len() == 2;
                predicted_all.extend_from_slice(&predicted);
                report.blocks_checked += 1;
            }
            predicted_all.sort_by(f64::total_cmp);
            let graph = float_spectrum(&cayley_adjacency(&g, &set));
            let graph_ok = sorted_close(&predicted_all, &graph, CLOSED_FORM_TOLERANCE);
            report.graph_spectrum_ok &= graph_ok;
            if !(ok && graph_ok) {
                report.failures.push(set.labels(&g));
            }
        }
        cases.push(report);
    }
    let passed = cases.iter().all(|c| c.failures.is_empty() && c.symbol_shape_ok && c.graph_spectrum_ok);
    Ok(ClosedFormReport { group: g.name().to_string(), n, group_order: g.order(), characters, cases, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_36_both_cases() {
        let r = verify_closed_forms(1).unwrap();
        assert_eq!(r.group_order, 36);
        assert_eq!(r.characters, 18);
        assert_eq!(r.cases[0].sets, 36);
        assert_eq!(r.cases[1].sets, 72);
        assert_eq!(r.cases[0].blocks_checked, 36 * 18);
        assert!(r.passed, "{:?}", r.cases);
        assert!(r.cases.iter().all(|c| c.max_error < 1e-9));
    }
}
