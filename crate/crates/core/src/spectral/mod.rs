//! Connection sets, Cayley adjacency matrices and integrality decisions.
//!
//! The exact annihilating-product test is authoritative; the characteristic
//! polynomial and the float eigenvalues are computed alongside it by
//! [`analyze`] and must agree.

mod adjacency;
mod connection;
pub mod exact;
pub mod float;
mod report;

use thiserror::Error;

pub use adjacency::{cayley_adjacency, AdjacencyMatrix};
pub use connection::{atoms, Atom, AtomKind, ConnectionSet};
pub use exact::{char_poly, char_poly_of, integer_spectrum, integrality_test};
pub use float::{float_spectrum, float_spectrum_in, FLOAT_TOLERANCE};
pub use report::{analyze, analyze_adjacency, analyzed_count, check_graph_invariants, SpectrumReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix entries must be 0 or 1")]
    NotBinary,
    #[error("adjacency matrix is not symmetric")]
    AsymmetricInput,
    #[error("row {row} sums to {sum}, expected {degree}")]
    DegreeMismatch { row: usize, sum: usize, degree: usize },
    #[error("integrality oracles disagree: exact {exact}, char poly {char_poly}, float {float}")]
    OracleDisagreement { exact: bool, char_poly: bool, float: bool },
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}
