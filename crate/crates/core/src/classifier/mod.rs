//! Membership in `G_k`: every Cayley graph `Cay(G, S)` with `|S| ≤ k` is integral.

mod catalog;
mod closed_forms;
mod enumerate;
mod gk;
mod hereditary;
mod minimal;
mod witnesses;

use thiserror::Error;

pub use catalog::{
    catalog, catalog_entry, classify_catalog, CatalogCell, CatalogEntry, CatalogReport, CatalogRow, CATALOG_K,
};
pub use closed_forms::{dicyclic_host, verify_closed_forms, ClosedFormCase, ClosedFormCaseReport, ClosedFormReport};
pub use enumerate::{count_connection_sets, enumerate_connection_sets, ConnectionSets};
pub use gk::{
    cayley_integral_check, g2_order_test, gk_membership, gk_membership_with, Decision, Evidence, GkVerdict,
    SweepOptions, ATOM_CAP,
};
pub use hereditary::{verify_hereditary_properties, HereditaryCheck, HereditaryKind, HereditaryReport, QuotientObservation};
pub use minimal::{minimal_nonabelian_report, MinimalNonabelianReport, MinimalSubgroup, G3_ALLOWED};
pub use witnesses::{
    check_witness, witness_suite, witnesses, ExpectedEigenvalue, Witness, WitnessReport, WitnessResult,
    CLOSED_FORM_TOLERANCE,
};

use crate::group::GroupError;
use crate::kmmm::KmmmError;
use crate::spectral::SpectralError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error("k must be positive, got {0}")]
    InvalidK(usize),
    #[error("group of order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("{atoms} atoms exceed the power-set cap of {cap}")]
    AtomCapExceeded { atoms: usize, cap: usize },
    #[error("order {order} is not a power of two")]
    NotTwoGroup { order: usize },
    #[error("{group} is not in G_{k}")]
    NotAMember { group: String, k: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Kmmm(#[from] KmmmError),
}
