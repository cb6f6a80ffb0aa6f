use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_connection_sets, ClassifierError};
use crate::group::{Group, DEFAULT_ORDER_CAP};
use crate::spectral::float::{non_integer_evidence, FLOAT_TOLERANCE};
use crate::spectral::{analyze, atoms, cayley_adjacency, float_spectrum, integrality_test, ConnectionSet};

/// Largest atom count for which [`cayley_integral_check`] sweeps the power set.
pub const ATOM_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Member,
    Nonmember,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Evidence {
    /// Eigenvalue farthest from the integers.
    pub eigenvalue: f64,
    /// The annihilating product did not vanish.
    pub annihilation_failed: bool,
}

/// Outcome of a `G_k` sweep.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GkVerdict {
    pub group: String,
    pub k: usize,
    pub decision: Decision,
    #[serde(skip)]
    pub witness: Option<ConnectionSet>,
    pub witness_labels: Option<Vec<String>>,
    /// Enumeration index of the witness.
    pub witness_index: Option<u64>,
    pub evidence: Option<Evidence>,
    pub sets_examined: u64,
    /// Non-integral sets seen; counted over the whole stream only with `full`.
    pub failures: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl GkVerdict {
    pub fn is_member(&self) -> bool {
        self.decision == Decision::Member
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Keep going after the first failure.
    pub full: bool,
    /// Run all three integrality oracles on every set and fail on disagreement.
    pub cross_check: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub order_cap: usize,
    /// Sets handed to the workers per round.
    pub chunk: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { full: false, cross_check: false, jobs: None, order_cap: DEFAULT_ORDER_CAP, chunk: 256 }
    }
}

impl SweepOptions {
    pub fn cross_checked() -> Self {
        SweepOptions { cross_check: true, ..Self::default() }
    }
}

pub fn gk_membership(group: &Group, k: usize) -> Result<GkVerdict, ClassifierError> {
    gk_membership_with(group, k, &SweepOptions::default())
}

/// Decides `G ∈ G_k`. The witness of a non-member is the failing set of least
/// enumeration index, whatever the thread count.
pub fn gk_membership_with(group: &Group, k: usize, opts: &SweepOptions) -> Result<GkVerdict, ClassifierError> {
    if k == 0 {
        return Err(ClassifierError::InvalidK(k));
    }
    if group.order() > opts.order_cap {
        return Err(ClassifierError::CapExceeded { order: group.order(), cap: opts.order_cap });
    }
    let start = Instant::now();
    let mut verdict = with_pool(opts.jobs, || sweep(group, k, opts))?;
    verdict.elapsed = start.elapsed();
    Ok(verdict)
}

/// Full Cayley integrality: every inverse-closed subset, i.e. `k = |G| − 1`.
pub fn cayley_integral_check(group: &Group, opts: &SweepOptions) -> Result<GkVerdict, ClassifierError> {
    let count = atoms(group).len();
    if count > ATOM_CAP {
        return Err(ClassifierError::AtomCapExceeded { atoms: count, cap: ATOM_CAP });
    }
    gk_membership_with(group, (group.order() - 1).max(1), opts)
}

/// Every non-identity element has order 2, 3, 4 or 6.
pub fn g2_order_test(group: &Group) -> bool {
    group.order_profile().keys().all(|o| matches!(o, 1 | 2 | 3 | 4 | 6))
}

pub(crate) fn with_pool<T: Send>(
    jobs: Option<usize>,
    f: impl FnOnce() -> Result<T, ClassifierError> + Send,
) -> Result<T, ClassifierError> {
    match jobs {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| ClassifierError::ThreadPool(e.to_string()))?
            .install(f),
    }
}

fn evaluate(group: &Group, set: &ConnectionSet, cross_check: bool) -> Result<bool, ClassifierError> {
    if cross_check {
        Ok(analyze(group, set)?.integral)
    } else {
        Ok(integrality_test(&cayley_adjacency(group, set), set.len())?)
    }
}

fn sweep(group: &Group, k: usize, opts: &SweepOptions) -> Result<GkVerdict, ClassifierError> {
    let mut stream = enumerate_connection_sets(group, k);
    let mut index = 0u64;
    let mut failures = 0u64;
    let mut first: Option<(u64, ConnectionSet)> = None;
    let chunk_len = opts.chunk.max(1);
    loop {
        let chunk: Vec<ConnectionSet> = stream.by_ref().take(chunk_len).collect();
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Result<bool, ClassifierError>> =
            chunk.par_iter().map(|s| evaluate(group, s, opts.cross_check)).collect();
        for (offset, r) in results.into_iter().enumerate() {
            if !r? {
                failures += 1;
                if first.is_none() {
                    first = Some((index + offset as u64, chunk[offset].clone()));
                }
            }
        }
        index += chunk.len() as u64;
        if first.is_some() && !opts.full {
            break;
        }
    }
    let examined = match (&first, opts.full) {
        (Some((i, _)), false) => i + 1,
        _ => index,
    };
    let failures = if opts.full { failures } else { u64::from(first.is_some()) };
    let base = GkVerdict {
        group: group.name().to_string(),
        k,
        decision: Decision::Member,
        witness: None,
        witness_labels: None,
        witness_index: None,
        evidence: None,
        sets_examined: examined,
        failures,
        elapsed: Duration::ZERO,
    };
    Ok(match first {
        None => base,
        Some((i, set)) => {
            let spectrum = float_spectrum(&cayley_adjacency(group, &set));
            let eigenvalue = non_integer_evidence(&spectrum, FLOAT_TOLERANCE).ok_or_else(|| {
                ClassifierError::InvariantViolated("failing set has no non-integral float eigenvalue".into())
            })?;
            GkVerdict {
                decision: Decision::Nonmember,
                witness_labels: Some(set.labels(group)),
                witness: Some(set),
                witness_index: Some(i),
                evidence: Some(Evidence { eigenvalue, annihilation_failed: true }),
                ..base
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, generalized_dicyclic, make_abelian, named_group};

    #[test]
    fn h16_not_in_g3() {
        let g = named_group("H16").unwrap();
        let v = gk_membership(&g, 3).unwrap();
        assert_eq!(v.decision, Decision::Nonmember);
        let w = v.witness.unwrap();
        assert!(w.len() <= 3);
        assert!(!integrality_test(&cayley_adjacency(&g, &w), w.len()).unwrap());
        assert!(gk_membership(&g, 2).unwrap().is_member());
    }

    #[test]
    fn dicyclic_in_g5() {
        let g = generalized_dicyclic(&make_abelian(&[3, 6]).unwrap()).unwrap();
        let v = gk_membership(&g, 5).unwrap();
        assert!(v.is_member());
        assert_eq!(v.sets_examined, 307);
    }

    #[test]
    fn witness_is_independent_of_threads_and_chunking() {
        let g = named_group("A4").unwrap();
        let reference = gk_membership_with(&g, 4, &SweepOptions { jobs: Some(1), chunk: 1, ..Default::default() }).unwrap();
        for (jobs, chunk) in [(2, 3), (4, 64), (3, 7)] {
            let v = gk_membership_with(&g, 4, &SweepOptions { jobs: Some(jobs), chunk, ..Default::default() }).unwrap();
            assert_eq!(v.witness, reference.witness);
            assert_eq!(v.sets_examined, reference.sets_examined);
        }
    }

    #[test]
    fn full_sweep_counts_everything() {
        let g = named_group("D8").unwrap();
        let v = gk_membership_with(&g, 7, &SweepOptions { full: true, ..Default::default() }).unwrap();
        assert_eq!(v.sets_examined, 63);
        assert!(v.failures >= 1);
    }

    #[test]
    fn g2_test_and_cycle() {
        let z5 = cyclic(5).unwrap();
        assert!(!g2_order_test(&z5));
        assert!(!gk_membership(&z5, 2).unwrap().is_member());
        assert!(g2_order_test(&named_group("Z4sZ4").unwrap()));
    }

    #[test]
    fn caps() {
        let big = cyclic(300).unwrap();
        assert!(matches!(gk_membership(&big, 2), Err(ClassifierError::CapExceeded { .. })));
        let z64 = cyclic(64).unwrap();
        assert!(matches!(cayley_integral_check(&z64, &SweepOptions::default()), Err(ClassifierError::AtomCapExceeded { .. })));
    }
}
