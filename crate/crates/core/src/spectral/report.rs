use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use super::exact::{char_poly, integer_spectrum, integrality_test};
use super::float::{float_spectrum, non_integer_evidence, FLOAT_TOLERANCE};
use super::{cayley_adjacency, AdjacencyMatrix, ConnectionSet, SpectralError};
use crate::group::Group;
use crate::IntPolynomial;

/// Integrality decision plus the diagnostics that must agree with it.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumReport {
    pub integral: bool,
    /// `(eigenvalue, multiplicity)`, ascending; present iff the char poly splits over the integers.
    pub integer_spectrum: Option<Vec<(i64, usize)>>,
    pub float_spectrum: Vec<f64>,
    /// Non-integer eigenvalue farthest from the integers.
    pub evidence: Option<f64>,
    #[serde(skip)]
    pub char_poly: IntPolynomial,
}

static ANALYZED: AtomicU64 = AtomicU64::new(0);

/// Graphs that have passed through the three-way comparison in this process.
pub fn analyzed_count() -> u64 {
    ANALYZED.load(Ordering::Relaxed)
}

/// Runs the exact test, the char-poly deflation and the float solver on `A`,
/// failing if they disagree or if a structural invariant is broken.
pub fn analyze_adjacency(a: &AdjacencyMatrix, degree: usize) -> Result<SpectrumReport, SpectralError> {
    let integral = integrality_test(a, degree)?;
    check_graph_invariants(a, degree)?;
    let p = char_poly(a);
    let ints = integer_spectrum(&p, degree as i64);
    let floats = float_spectrum(a);
    let evidence = non_integer_evidence(&floats, FLOAT_TOLERANCE);
    if integral != ints.is_some() || integral != evidence.is_none() {
        return Err(SpectralError::OracleDisagreement {
            exact: integral,
            char_poly: ints.is_some(),
            float: evidence.is_none(),
        });
    }
    ANALYZED.fetch_add(1, Ordering::Relaxed);
    if let Some(spec) = &ints {
        check_deflation(spec, a.n(), degree)?;
    }
    Ok(SpectrumReport { integral, integer_spectrum: ints, float_spectrum: floats, evidence, char_poly: p })
}

/// [`analyze_adjacency`] on `Cay(G, S)`.
pub fn analyze(group: &Group, set: &ConnectionSet) -> Result<SpectrumReport, SpectralError> {
    analyze_adjacency(&cayley_adjacency(group, set), set.len())
}

/// Zero trace, `trace(A²) = n·degree`, symmetric and regular.
pub fn check_graph_invariants(a: &AdjacencyMatrix, degree: usize) -> Result<(), SpectralError> {
    a.validate(degree)?;
    if a.trace() != 0 {
        return Err(SpectralError::InvariantViolated(format!("trace {} is not zero", a.trace())));
    }
    if a.trace_of_square() != a.n() * degree {
        return Err(SpectralError::InvariantViolated(format!(
            "trace(A^2) = {} but n*degree = {}",
            a.trace_of_square(),
            a.n() * degree
        )));
    }
    Ok(())
}

fn check_deflation(spec: &[(i64, usize)], n: usize, degree: usize) -> Result<(), SpectralError> {
    let count: usize = spec.iter().map(|&(_, m)| m).sum();
    let sum: i64 = spec.iter().map(|&(l, m)| l * m as i64).sum();
    let squares: i64 = spec.iter().map(|&(l, m)| l * l * m as i64).sum();
    if count != n || sum != 0 || squares != (n * degree) as i64 {
        return Err(SpectralError::InvariantViolated(format!(
            "integer spectrum moments ({count}, {sum}, {squares}) do not match ({n}, 0, {})",
            n * degree
        )));
    }
    Ok(())
}
