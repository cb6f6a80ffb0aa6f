//! The eight witness graphs with closed-form non-integral eigenvalues.

use serde::Serialize;

use super::ClassifierError;
use crate::group::{generated_subgroup, named_group};
use crate::kmmm::decompose;
use crate::spectral::float::{contains_close, sorted_close};
use crate::spectral::{analyze, ConnectionSet};

/// Tolerance for matching closed forms.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-9;

pub struct Witness {
    pub name: &'static str,
    pub group: &'static str,
    pub set: &'static str,
    /// Generators of the abelian subgroup used for the symbol.
    pub subgroup: &'static str,
    pub pins: &'static str,
    /// `(rendering, value)` of each expected eigenvalue.
    pub expected: Vec<(&'static str, f64)>,
}

pub fn witnesses() -> Vec<Witness> {
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let r5 = 5f64.sqrt();
    let r17 = 17f64.sqrt();
    vec![
        Witness {
            name: "D8",
            group: "D8",
            set: "ab,b",
            subgroup: "a",
            pins: "",
            expected: vec![("√2", r2), ("-√2", -r2)],
        },
        Witness {
            name: "H27",
            group: "H27",
            set: "a,a^-1,b,b^-1",
            subgroup: "a,c",
            pins: "1,b,b^-1",
            expected: vec![("-2", -2.0), ("1+√3", 1.0 + r3), ("1-√3", 1.0 - r3)],
        },
        Witness {
            name: "H16",
            group: "H16",
            set: "ba,ba^-1c,b",
            subgroup: "a,c",
            pins: "1,b",
            expected: vec![("√5", r5), ("-√5", -r5)],
        },
        Witness {
            name: "H32",
            group: "H32",
            set: "ba,b^-1a^-1c,b,b^-1",
            subgroup: "a,b^2,c",
            pins: "1,b",
            expected: vec![("2√2", 2.0 * r2), ("-2√2", -2.0 * r2)],
        },
        Witness {
            name: "A4",
            group: "A4",
            set: "a,b,c,c^-1",
            subgroup: "a,b",
            pins: "1,c,c^-1",
            expected: vec![("-1", -1.0), ("(-1+√17)/2", (-1.0 + r17) / 2.0), ("(-1-√17)/2", (-1.0 - r17) / 2.0)],
        },
        Witness {
            name: "Q8sZ3",
            group: "Q8sZ3",
            set: "i,-i,σ,σ^-1",
            subgroup: "-1,σ",
            pins: "1,i,j,k",
            expected: vec![
                ("4", 4.0),
                ("-3", -3.0),
                ("(1+√17)/2", (1.0 + r17) / 2.0),
                ("(1-√17)/2", (1.0 - r17) / 2.0),
            ],
        },
        Witness {
            name: "D6xZ3",
            group: "D6xZ3",
            set: "xu,xu^-1,xv",
            subgroup: "u,v",
            pins: "1,x",
            expected: vec![("√3", r3), ("-√3", -r3)],
        },
        Witness {
            name: "E9sZ2",
            group: "E9sZ2",
            set: "xu,xu^-1,xv",
            subgroup: "u,v",
            pins: "1,x",
            expected: vec![("√3", r3), ("-√3", -r3)],
        },
    ]
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExpectedEigenvalue {
    pub closed_form: String,
    pub value: f64,
    /// Present in the spectrum of the whole graph.
    pub in_graph: bool,
    /// Present in the spectrum of some chi-matrix.
    pub in_chi_matrix: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessResult {
    pub name: String,
    pub group: String,
    pub set: Vec<String>,
    pub subgroup_order: usize,
    pub pins: Vec<String>,
    pub integral: bool,
    pub expected: Vec<ExpectedEigenvalue>,
    /// The chi-matrix spectra union to the graph spectrum.
    pub kmmm_agrees: bool,
    pub float_spectrum: Vec<f64>,
    pub confirmed: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessReport {
    pub witnesses: Vec<WitnessResult>,
    pub all_confirmed: bool,
}

pub fn check_witness(w: &Witness) -> Result<WitnessResult, ClassifierError> {
    let g = named_group(w.group)?;
    let set = ConnectionSet::parse(&g, w.set)?;
    let h = generated_subgroup(&g, &g.elements(w.subgroup)?);
    let pins = if w.pins.is_empty() { Vec::new() } else { g.elements(w.pins)? };
    let report = analyze(&g, &set)?;
    let dec = decompose(&g, &set, &h, &pins)?;
    let kmmm = dec.spectrum();
    let kmmm_agrees = sorted_close(&kmmm, &report.float_spectrum, CLOSED_FORM_TOLERANCE);
    let expected: Vec<ExpectedEigenvalue> = w
        .expected
        .iter()
        .map(|&(form, value)| ExpectedEigenvalue {
            closed_form: form.to_string(),
            value,
            in_graph: contains_close(&report.float_spectrum, value, CLOSED_FORM_TOLERANCE),
            in_chi_matrix: dec
                .blocks
                .iter()
                .any(|b| contains_close(&b.eigenvalues.values, value, CLOSED_FORM_TOLERANCE)),
        })
        .collect();
    let confirmed = !report.integral && kmmm_agrees && expected.iter().all(|e| e.in_graph && e.in_chi_matrix);
    Ok(WitnessResult {
        name: w.name.to_string(),
        group: g.name().to_string(),
        set: set.labels(&g),
        subgroup_order: h.order(),
        pins: dec.transversal.rep_labels(),
        integral: report.integral,
        expected,
        kmmm_agrees,
        float_spectrum: report.float_spectrum,
        confirmed,
    })
}

pub fn witness_suite() -> Result<WitnessReport, ClassifierError> {
    let witnesses = witnesses().iter().map(check_witness).collect::<Result<Vec<_>, _>>()?;
    let all_confirmed = witnesses.iter().all(|w| w.confirmed);
    Ok(WitnessReport { witnesses, all_confirmed })
}
