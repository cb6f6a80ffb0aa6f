//! Built-in groups with their expected `G_k` verdicts for `k = 2, …, 6`.

use serde::Serialize;

use super::{gk_membership_with, ClassifierError, GkVerdict, SweepOptions};
use crate::group::{
    cyclic, direct_product, elementary_abelian, fingerprint, generalized_dicyclic, make_abelian, make_dihedral,
    named_group, Fingerprint, Group, GroupError,
};

/// The `k` values every entry carries expectations for.
pub const CATALOG_K: [usize; 5] = [2, 3, 4, 5, 6];

const M: bool = true;
const N: bool = false;

pub struct CatalogEntry {
    pub name: &'static str,
    /// The group in CLI spec syntax.
    pub spec: &'static str,
    build: fn() -> Result<Group, GroupError>,
    /// Membership in `G_k` for `k = 2, …, 6`.
    pub expected: [bool; 5],
    /// Why the expected verdicts hold.
    pub provenance: &'static str,
    golden: GoldenFingerprint,
}

/// `(order, abelian, exponent, |Z|, order profile, abelianization)`.
type GoldenFingerprint = (usize, bool, usize, usize, &'static [(usize, usize)], &'static [usize]);

impl CatalogEntry {
    pub fn build(&self) -> Result<Group, GroupError> {
        Ok((self.build)()?.with_name(self.name))
    }

    pub fn expected_at(&self, k: usize) -> Option<bool> {
        CATALOG_K.iter().position(|&x| x == k).map(|i| self.expected[i])
    }

    pub fn golden_fingerprint(&self) -> Fingerprint {
        let (order, abelian, exponent, center_order, profile, ab) = self.golden;
        Fingerprint {
            order,
            abelian,
            exponent,
            center_order,
            order_profile: profile.to_vec(),
            abelianization: ab.to_vec(),
        }
    }

    /// Cayley integral: a member for every `k`.
    pub fn cayley_integral(&self) -> bool {
        self.expected.iter().all(|&m| m)
    }
}

fn abelian(orders: &'static [usize]) -> Result<Group, GroupError> {
    make_abelian(orders)
}

pub fn catalog() -> Vec<CatalogEntry> {
    const CI: &str = "Cayley integral";
    vec![
        CatalogEntry {
            name: "E4",
            spec: "E(4)",
            build: || elementary_abelian(4),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: elementary abelian 2-group",
            golden: (4, true, 2, 4, &[(1, 1), (2, 3)], &[2, 2]),
        },
        CatalogEntry {
            name: "Z4",
            spec: "C(4)",
            build: || cyclic(4),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: E_2^n x Z_4^m with n = 0, m = 1",
            golden: (4, true, 4, 4, &[(1, 1), (2, 1), (4, 2)], &[4]),
        },
        CatalogEntry {
            name: "Z6",
            spec: "C(6)",
            build: || cyclic(6),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: E_2^n x E_3^m with n = m = 1",
            golden: (6, true, 6, 6, &[(1, 1), (2, 1), (3, 2), (6, 2)], &[6]),
        },
        CatalogEntry {
            name: "E8",
            spec: "E(8)",
            build: || elementary_abelian(8),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: elementary abelian 2-group",
            golden: (8, true, 2, 8, &[(1, 1), (2, 7)], &[2, 2, 2]),
        },
        CatalogEntry {
            name: "E9",
            spec: "E(9)",
            build: || elementary_abelian(9),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: elementary abelian 3-group",
            golden: (9, true, 3, 9, &[(1, 1), (3, 8)], &[3, 3]),
        },
        CatalogEntry {
            name: "Z3xZ6",
            spec: "C(3) x C(6)",
            build: || abelian(&[3, 6]),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: E_2 x E_9",
            golden: (18, true, 6, 18, &[(1, 1), (2, 1), (3, 8), (6, 8)], &[3, 6]),
        },
        CatalogEntry {
            name: "Z4xZ4",
            spec: "C(4) x C(4)",
            build: || abelian(&[4, 4]),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: Z_4^2",
            golden: (16, true, 4, 16, &[(1, 1), (2, 3), (4, 12)], &[4, 4]),
        },
        CatalogEntry {
            name: "E4xZ4",
            spec: "E(4) x C(4)",
            build: || abelian(&[2, 2, 4]),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: E_4 x Z_4",
            golden: (16, true, 4, 16, &[(1, 1), (2, 7), (4, 8)], &[2, 2, 4]),
        },
        CatalogEntry {
            name: "D6",
            spec: "D(6)",
            build: || make_dihedral(6),
            expected: [M, M, M, M, M],
            provenance: CI,
            golden: (6, false, 6, 1, &[(1, 1), (2, 3), (3, 2)], &[2]),
        },
        CatalogEntry {
            name: "Dic12",
            spec: "Dic12",
            build: || named_group("Dic12"),
            expected: [M, M, M, M, M],
            provenance: CI,
            golden: (12, false, 12, 2, &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)], &[4]),
        },
        CatalogEntry {
            name: "Q8",
            spec: "Q8",
            build: || named_group("Q8"),
            expected: [M, M, M, M, M],
            provenance: CI,
            golden: (8, false, 4, 2, &[(1, 1), (2, 1), (4, 6)], &[2, 2]),
        },
        CatalogEntry {
            name: "Q8xZ2",
            spec: "Q8 x C(2)",
            build: || direct_product(&named_group("Q8")?, &cyclic(2)?),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: Q_8 x E_2^n with n = 1",
            golden: (16, false, 4, 4, &[(1, 1), (2, 3), (4, 12)], &[2, 2, 2]),
        },
        CatalogEntry {
            name: "Q8xE4",
            spec: "Q8 x E(4)",
            build: || direct_product(&named_group("Q8")?, &elementary_abelian(4)?),
            expected: [M, M, M, M, M],
            provenance: "Cayley integral: Q_8 x E_2^n with n = 2",
            golden: (32, false, 4, 8, &[(1, 1), (2, 7), (4, 24)], &[2, 2, 2, 2]),
        },
        CatalogEntry {
            name: "Dic(Z3xZ6)",
            spec: "Dic(C(3) x C(6))",
            build: || generalized_dicyclic(&make_abelian(&[3, 6])?),
            expected: [M, M, M, M, N],
            provenance: "in G_5 by the symbol analysis over <P, x^2>; \
                         not in G_6 because the quotient by <x^2> is E9 x| Z2, which is not in G_3",
            golden: (36, false, 12, 2, &[(1, 1), (2, 1), (3, 8), (4, 18), (6, 8)], &[4]),
        },
        CatalogEntry {
            name: "D8",
            spec: "D(8)",
            build: || make_dihedral(8),
            expected: [N, N, N, N, N],
            provenance: "Cay(D8, {ab, b}) is an 8-cycle, eigenvalues include ±√2",
            golden: (8, false, 4, 2, &[(1, 1), (2, 5), (4, 2)], &[2, 2]),
        },
        CatalogEntry {
            name: "H2",
            spec: "H2",
            build: || named_group("H2"),
            expected: [M, M, N, N, N],
            provenance: "exponent 4 and the G_3 criterion on minimal non-abelian subgroups; \
                         not in G_4 because H2/<b^2> is D8 and D8 is not in G_2",
            golden: (16, false, 4, 4, &[(1, 1), (2, 3), (4, 12)], &[2, 4]),
        },
        CatalogEntry {
            name: "H16",
            spec: "H16",
            build: || named_group("H16"),
            expected: [M, N, N, N, N],
            provenance: "Cay(H16, {ba, ba^-1c, b}): a chi-matrix over <a, c> has eigenvalues ±√5",
            golden: (16, false, 4, 4, &[(1, 1), (2, 7), (4, 8)], &[2, 4]),
        },
        CatalogEntry {
            name: "H27",
            spec: "H27",
            build: || named_group("H27"),
            expected: [M, M, N, N, N],
            provenance: "Cay(H27, {a, a^-1, b, b^-1}) has eigenvalues -2 and 1 ± √3; G_3 membership from the sweep",
            golden: (27, false, 3, 3, &[(1, 1), (3, 26)], &[3, 3]),
        },
        CatalogEntry {
            name: "H32",
            spec: "H32",
            build: || named_group("H32"),
            expected: [M, M, N, N, N],
            provenance: "Cay(H32, {ba, b^-1a^-1c, b, b^-1}) has eigenvalues ±2√2, so H32 is not in G_4",
            golden: (32, false, 4, 8, &[(1, 1), (2, 7), (4, 24)], &[4, 4]),
        },
        CatalogEntry {
            name: "A4",
            spec: "A4",
            build: || named_group("A4"),
            expected: [M, M, N, N, N],
            provenance: "Cay(A4, {a, b, c, c^-1}) has eigenvalues -1, (-1 ± √17)/2; \
                         G_3 membership derived by exhaustive sweep",
            golden: (12, false, 6, 1, &[(1, 1), (2, 3), (3, 8)], &[3]),
        },
        CatalogEntry {
            name: "Q8sZ3",
            spec: "Q8sZ3",
            build: || named_group("Q8sZ3"),
            expected: [M, M, N, N, N],
            provenance: "Cay(Q8 x| Z3, {i, -i, σ, σ^-1}) has eigenvalues 4, -3, (1 ± √17)/2; \
                         G_3 membership derived by exhaustive sweep",
            golden: (24, false, 12, 2, &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)], &[3]),
        },
        CatalogEntry {
            name: "D6xZ3",
            spec: "D6xZ3",
            build: || named_group("D6xZ3"),
            expected: [M, N, N, N, N],
            provenance: "Cay(D6 x Z3, {xu, xu^-1, xv}) has eigenvalues ±√3",
            golden: (18, false, 6, 3, &[(1, 1), (2, 3), (3, 8), (6, 6)], &[6]),
        },
        CatalogEntry {
            name: "E9sZ2",
            spec: "E9sZ2",
            build: || named_group("E9sZ2"),
            expected: [M, N, N, N, N],
            provenance: "Cay(E9 x| Z2, {xu, xu^-1, xv}) has eigenvalues ±√3",
            golden: (18, false, 6, 1, &[(1, 1), (2, 9), (3, 8)], &[2]),
        },
        CatalogEntry {
            name: "Z5",
            spec: "C(5)",
            build: || cyclic(5),
            expected: [N, N, N, N, N],
            provenance: "element of order 5: Cay(Z5, {±1}) is a 5-cycle with eigenvalues 2cos(2πj/5)",
            golden: (5, true, 5, 5, &[(1, 1), (5, 4)], &[5]),
        },
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogCell {
    pub k: usize,
    pub expected: bool,
    pub verdict: GkVerdict,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogRow {
    pub name: String,
    pub spec: String,
    pub order: usize,
    pub fingerprint: Fingerprint,
    pub fingerprint_matches: bool,
    pub provenance: String,
    pub cells: Vec<CatalogCell>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogReport {
    pub rows: Vec<CatalogRow>,
    pub all_match: bool,
    /// `G_k ⊆ G_{k−1}` on every row.
    pub monotone: bool,
    /// `G_4` and `G_5` agree on every row (when both were computed).
    pub g4_equals_g5: bool,
    /// `G_6` membership coincides with Cayley integrality (when computed).
    pub g6_equals_cayley_integral: bool,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.all_match && self.monotone && self.g4_equals_g5 && self.g6_equals_cayley_integral
    }
}

/// Runs every catalog entry at every requested `k` against its expectations.
pub fn classify_catalog(ks: &[usize], opts: &SweepOptions) -> Result<CatalogReport, ClassifierError> {
    if let Some(&bad) = ks.iter().find(|k| !CATALOG_K.contains(k)) {
        return Err(ClassifierError::InvalidK(bad));
    }
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    let mut rows = Vec::new();
    for entry in catalog() {
        let group = entry.build()?;
        let fp = fingerprint(&group);
        let mut cells = Vec::new();
        for &k in &ks {
            let verdict = gk_membership_with(&group, k, opts)?;
            let expected = entry.expected_at(k).expect("k validated above");
            cells.push(CatalogCell { k, expected, matches: verdict.is_member() == expected, verdict });
        }
        rows.push(CatalogRow {
            name: entry.name.to_string(),
            spec: entry.spec.to_string(),
            order: group.order(),
            fingerprint_matches: fp == entry.golden_fingerprint(),
            fingerprint: fp,
            provenance: entry.provenance.to_string(),
            cells,
        });
    }
    let member = |row: &CatalogRow, k: usize| row.cells.iter().find(|c| c.k == k).map(|c| c.verdict.is_member());
    let all_match = rows.iter().all(|r| r.fingerprint_matches && r.cells.iter().all(|c| c.matches));
    let monotone = rows.iter().all(|r| r.cells.windows(2).all(|w| !w[1].verdict.is_member() || w[0].verdict.is_member()));
    let g4_equals_g5 = rows.iter().all(|r| match (member(r, 4), member(r, 5)) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    });
    let entries = catalog();
    let g6_equals_cayley_integral = rows.iter().all(|r| match member(r, 6) {
        Some(m) => entries.iter().find(|e| e.name == r.name).is_some_and(|e| e.cayley_integral() == m),
        None => true,
    });
    Ok(CatalogReport { rows, all_match, monotone, g4_equals_g5, g6_equals_cayley_integral })
}
