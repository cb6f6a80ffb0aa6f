//! Spectral decomposition of `Cay(G, S)` relative to an abelian subgroup `H`
//! acting by right multiplication.
//!
//! With left-coset representatives `t_1, …, t_m` the graph is encoded by the
//! symbol `S_ij = H ∩ t_j⁻¹·S·t_i`; each character `χ` of `H` turns the symbol
//! into an `m×m` Hermitian matrix `χ(S)`, and the graph spectrum is the union
//! of the spectra of these `|H|` matrices.

mod character;
mod chi;
mod cyclotomic;
mod decompose;
mod lift;
mod symbol;
mod transversal;

use thiserror::Error;

pub use character::{abelian_characters, Character};
pub use chi::{chi_matrix, ChiEigenvalues, ChiMatrix};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use decompose::{decompose, kmmm_spectrum, CharacterBlock, Decomposition};
pub use lift::lift_connection_set;
pub use symbol::{symbol_matrix, SymbolMatrix};
pub use transversal::{left_transversal, Transversal, TransversalSummary};

use crate::group::GroupError;
use crate::spectral::SpectralError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KmmmError {
    #[error("pinned representatives {first} and {second} lie in the same coset")]
    PinnedCollision { first: String, second: String },
    #[error("the identity must be the first pinned representative")]
    IdentityNotFirst,
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("subgroup is not abelian")]
    NonAbelianSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("normal subgroup has even order {order}")]
    EvenOrderSubgroup { order: usize },
    #[error("quotient does not belong to this normal subgroup")]
    QuotientMismatch,
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}
