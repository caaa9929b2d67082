//! Seeded search for bijection families whose built graph is isomorphic to a
//! target instance.
//!
//! The search walks a deterministic stream of (labeling, bijection) choices:
//! attempt 0 is the canonical labeling with identity bijections, attempt
//! `k ≥ 1` uses seeds derived from the base seed. Each candidate is built,
//! then tested against the target with the isomorphism solver; a witness is
//! re-verified before being returned. Exhausting the budget is a recorded
//! outcome, not an error.

use super::SymplecticError;
use crate::construct::{
    affine_ddg, construction_params, sigma_family, BijectionFamily, DdgInstance, SigmaStrategy,
};
use crate::designs::ResolvableDesign;
use crate::symdesigns::{label_assign, LabelStrategy, LabeledMatrix, SymmetricDesignMatrix};
use crate::verify::{iso_check_with, IsoLimits, IsoOutcome};
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum number of (labeling, bijection) attempts.
    pub max_attempts: usize,
    /// Wall-clock limit for the whole search.
    pub time_limit: Option<Duration>,
    /// Per-attempt limit for the isomorphism test; an undecided test counts
    /// as a failed attempt rather than stalling the stream.
    pub iso_timeout: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_attempts: 64,
            time_limit: Some(Duration::from_secs(300)),
            iso_timeout: Some(Duration::from_secs(15)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchWitness {
    pub attempt: usize,
    /// `None` means the canonical labeling.
    pub labeling_seed: Option<u64>,
    /// `None` means identity bijections.
    pub sigma_seed: Option<u64>,
    pub labeling: LabeledMatrix,
    pub family: BijectionFamily,
    /// Vertex mapping from the built instance onto the target, re-verified
    /// edge by edge.
    pub mapping: Vec<usize>,
    pub instance: DdgInstance,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(Box<SearchWitness>),
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct SigmaSearchReport {
    pub attempts: usize,
    /// Attempts whose isomorphism test hit its timeout (undecided).
    pub undecided: usize,
    pub elapsed: Duration,
    pub outcome: SearchOutcome,
}

impl SigmaSearchReport {
    pub fn found(&self) -> Option<&SearchWitness> {
        match &self.outcome {
            SearchOutcome::Found(w) => Some(w),
            SearchOutcome::Exhausted => None,
        }
    }
}

/// Searches labelings of `a` and bijection families over `designs` for a
/// built graph isomorphic to `target`.
///
/// The closed-form parameters of the inputs must equal the target's
/// parameters, otherwise the search is vacuous and an error is returned.
/// Deterministic given `budget.max_attempts` and `base_seed`.
pub fn sigma_search(
    target: &DdgInstance,
    a: &SymmetricDesignMatrix,
    designs: &[ResolvableDesign],
    budget: SearchBudget,
    base_seed: u64,
) -> Result<SigmaSearchReport, SymplecticError> {
    let start = Instant::now();

    // closed-form precheck: (q, d) from the designs, (m, λ) from the matrix
    let q = designs.first().map(|d| d.q() as u64).unwrap_or(0);
    let pts = designs.first().map(|d| d.point_count() as u64).unwrap_or(0);
    let d = exponent_of(q, pts).unwrap_or(0);
    let formula = construction_params(q, d, a.m() as u64, a.params().lambda as u64)?;
    if formula != target.params() {
        return Err(SymplecticError::ParameterMismatch { formula, target: target.params() });
    }

    let deadline = budget.time_limit.map(|t| start + t);
    let mut undecided = 0;
    let mut attempts = 0;

    for attempt in 0..budget.max_attempts {
        if deadline.is_some_and(|d| Instant::now() > d) {
            break;
        }
        attempts += 1;
        let (labeling_seed, sigma_seed) = if attempt == 0 {
            (None, None) // canonical labeling, identity bijections
        } else {
            (
                Some(base_seed.wrapping_add(2 * attempt as u64)),
                Some(base_seed.wrapping_add(2 * attempt as u64 + 1)),
            )
        };
        let labeling = match labeling_seed {
            Some(s) => label_assign(a, LabelStrategy::Seeded(s)),
            None => label_assign(a, LabelStrategy::Canonical),
        }
        .expect("built-in strategies always produce valid labelings");
        let strategy = match sigma_seed {
            Some(s) => SigmaStrategy::Seeded(s),
            None => SigmaStrategy::Identity,
        };
        let family = sigma_family(&labeling, designs, strategy)?;
        let instance = affine_ddg(&labeling, designs, &family)?;

        let iso_budget = match (budget.iso_timeout, deadline) {
            (Some(per), Some(d)) => Some(per.min(d.saturating_duration_since(Instant::now()))),
            (Some(per), None) => Some(per),
            (None, Some(d)) => Some(d.saturating_duration_since(Instant::now())),
            (None, None) => None,
        };
        let limits = IsoLimits { max_vertices: target.graph().n(), time_budget: iso_budget };
        match iso_check_with(instance.graph(), target.graph(), limits)
            .expect("vertex bound set to the target size")
        {
            IsoOutcome::Isomorphic(mapping) => {
                return Ok(SigmaSearchReport {
                    attempts,
                    undecided,
                    elapsed: start.elapsed(),
                    outcome: SearchOutcome::Found(Box::new(SearchWitness {
                        attempt,
                        labeling_seed,
                        sigma_seed,
                        labeling,
                        family,
                        mapping,
                        instance,
                    })),
                });
            }
            IsoOutcome::NonIsomorphic(_) => {}
            IsoOutcome::Unknown => undecided += 1,
        }
    }

    Ok(SigmaSearchReport {
        attempts,
        undecided,
        elapsed: start.elapsed(),
        outcome: SearchOutcome::Exhausted,
    })
}

fn exponent_of(q: u64, pts: u64) -> Option<u32> {
    if q < 2 {
        return None;
    }
    let mut power = 1u64;
    let mut d = 0u32;
    while power < pts {
        power = power.checked_mul(q)?;
        d += 1;
    }
    (power == pts).then_some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LocalRing;
    use crate::designs::affine_from_ag;
    use crate::symdesigns::{fano, null_polarity};
    use crate::symplectic::{symplectic_graph, SymplecticVariant};
    use crate::construct::sporadic28;

    #[test]
    fn zero_budget_reports_exhausted() {
        let target = sporadic28();
        let a = fano();
        let designs = vec![affine_from_ag(2, 2).unwrap(); 7];
        let budget = SearchBudget { max_attempts: 0, time_limit: None, iso_timeout: None };
        let report = sigma_search(&target, &a, &designs, budget, 0).unwrap();
        assert_eq!(report.attempts, 0);
        assert!(matches!(report.outcome, SearchOutcome::Exhausted));
    }

    #[test]
    fn parameter_mismatch_is_vacuous() {
        let ring = LocalRing::integers_mod_p_squared(2).unwrap();
        let y = symplectic_graph(SymplecticVariant::Y, 2, &ring).unwrap();
        let target = y.to_ddg_instance().unwrap();
        // Fano inputs give (28,6,2,1;7,4), not (120,28,12,6;15,8)
        let a = fano();
        let designs = vec![affine_from_ag(2, 2).unwrap(); 7];
        assert!(matches!(
            sigma_search(&target, &a, &designs, SearchBudget::default(), 0),
            Err(SymplecticError::ParameterMismatch { .. })
        ));
    }

    #[test]
    fn search_for_sporadic_instance_runs() {
        let target = sporadic28();
        let a = fano();
        let designs = vec![affine_from_ag(2, 2).unwrap(); 7];
        let budget = SearchBudget {
            max_attempts: 24,
            time_limit: Some(Duration::from_secs(60)),
            iso_timeout: Some(Duration::from_secs(5)),
        };
        let report = sigma_search(&target, &a, &designs, budget, 1).unwrap();
        if let Some(w) = report.found() {
            // re-verify the witness mapping independently
            let g = w.instance.graph();
            let t = target.graph();
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    assert_eq!(g.has_edge(u, v), t.has_edge(w.mapping[u], w.mapping[v]));
                }
            }
        }
    }

    #[test]
    fn search_hits_y_over_z4() {
        let ring = LocalRing::integers_mod_p_squared(2).unwrap();
        let y = symplectic_graph(SymplecticVariant::Y, 2, &ring).unwrap();
        let target = y.to_ddg_instance().unwrap();
        let a = null_polarity(2, 2).unwrap();
        let designs = vec![affine_from_ag(2, 3).unwrap(); 15];
        let budget = SearchBudget {
            max_attempts: 16,
            time_limit: Some(Duration::from_secs(120)),
            iso_timeout: Some(Duration::from_secs(10)),
        };
        let report = sigma_search(&target, &a, &designs, budget, 7).unwrap();
        // record either outcome; a found witness must verify
        if let Some(w) = report.found() {
            let g = w.instance.graph();
            let t = target.graph();
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    assert_eq!(g.has_edge(u, v), t.has_edge(w.mapping[u], w.mapping[v]));
                }
            }
        }
    }
}
