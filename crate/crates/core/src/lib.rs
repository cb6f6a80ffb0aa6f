//! Finite groups, exact Cayley graph spectra, and the classes `G_k` of groups
//! whose Cayley graphs with connection sets of size at most `k` are all integral.
//!
//! * [`group`]: multiplication tables, constructors, subgroups, quotients.
//! * [`spectral`]: connection sets, adjacency matrices, exact integrality.
//! * [`kmmm`]: symbol matrices over an abelian semiregular subgroup and their
//!   character images, whose spectra union to the graph spectrum.
//! * [`classifier`]: connection-set enumeration, `G_k` verdicts, the built-in
//!   catalog and the witness suite.

pub mod classifier;
pub mod group;
pub mod kmmm;
pub mod scalar;
pub mod spectral;

pub use group::{Group, GroupError, SubgroupHandle};
pub use scalar::{ExactInt, Polynomial};

/// Characteristic polynomials with arbitrary-precision coefficients.
pub type IntPolynomial = Polynomial<num_bigint::BigInt>;

/// Fixed-width scalar tried first by the exact routines.
pub type WideInt = i128;

/// Default floating-point scalar for spectra.
pub type Real = f64;

/// Character values and chi-matrix entries in their float rendering.
pub type Complex = num_complex::Complex<f64>;
