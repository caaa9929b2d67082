//! Row labelings of a symmetric design matrix.
//!
//! A labeling writes the integers `1..=κ` onto the nonzero entries of each
//! row, one bijection per row. The zero pattern (and with it support
//! symmetry) is inherited from the parent matrix; entrywise symmetry
//! `e(i,j) = e(j,i)` is not required for the construction to work, but
//! [`label_symmetric`] searches for such a labeling when one is wanted.

use super::{SymDesignError, SymParams, SymmetricDesignMatrix};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub enum LabelStrategy {
    /// Labels `1..=κ` in increasing column order within each row.
    Canonical,
    /// Deterministic pseudo-random permutation of labels per row.
    Seeded(u64),
    /// Caller-provided entries, validated against all invariants.
    Explicit(Vec<Vec<usize>>),
}

/// Parallel-class labels on the nonzero pattern of a symmetric design matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix {
    entries: Vec<Vec<usize>>,
    params: SymParams,
}

impl LabeledMatrix {
    pub fn m(&self) -> usize {
        self.params.m
    }

    pub fn kappa(&self) -> usize {
        self.params.kappa
    }

    /// Parameters of the parent design.
    pub fn params(&self) -> SymParams {
        self.params
    }

    /// Label at `(i, j)`; zero means no incidence.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn is_entrywise_symmetric(&self) -> bool {
        let m = self.params.m;
        (0..m).all(|i| (i + 1..m).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Checks every labeling invariant against the parent matrix:
    /// zero pattern equality, and each row's nonzero entries a bijection
    /// onto `1..=κ`.
    pub fn validate_against(&self, a: &SymmetricDesignMatrix) -> Result<(), SymDesignError> {
        let m = a.m();
        let kappa = a.params().kappa;
        if self.entries.len() != m || self.entries.iter().any(|r| r.len() != m) {
            return Err(SymDesignError::LabelInvariant(format!(
                "label matrix is not {m}x{m}"
            )));
        }
        for i in 0..m {
            for j in 0..m {
                let label = self.entries[i][j];
                if (label == 0) != (a.entry(i, j) == 0) {
                    return Err(SymDesignError::LabelInvariant(format!(
                        "zero pattern differs from the design at ({i},{j})"
                    )));
                }
                if label > kappa {
                    return Err(SymDesignError::LabelInvariant(format!(
                        "label {label} at ({i},{j}) exceeds κ = {kappa}"
                    )));
                }
            }
            let mut seen = vec![false; kappa + 1];
            for &label in self.entries[i].iter().filter(|&&l| l != 0) {
                if seen[label] {
                    return Err(SymDesignError::LabelInvariant(format!(
                        "label {label} repeats in row {i}"
                    )));
                }
                seen[label] = true;
            }
            if let Some(missing) = (1..=kappa).find(|&l| !seen[l]) {
                return Err(SymDesignError::LabelInvariant(format!(
                    "row {i} misses label {missing}"
                )));
            }
        }
        Ok(())
    }
}

/// Assigns labels to the nonzero entries of `a` under the given strategy.
pub fn label_assign(
    a: &SymmetricDesignMatrix,
    strategy: LabelStrategy,
) -> Result<LabeledMatrix, SymDesignError> {
    let m = a.m();
    let kappa = a.params().kappa;
    let entries = match strategy {
        LabelStrategy::Canonical => rows_with_labels(a, |_row| (1..=kappa).collect()),
        LabelStrategy::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut per_row: Vec<Vec<usize>> = Vec::with_capacity(m);
            for _ in 0..m {
                let mut labels: Vec<usize> = (1..=kappa).collect();
                labels.shuffle(&mut rng);
                per_row.push(labels);
            }
            rows_with_labels(a, |row| per_row[row].clone())
        }
        LabelStrategy::Explicit(entries) => entries,
    };
    let l = LabeledMatrix { entries, params: a.params() };
    l.validate_against(a)?;
    Ok(l)
}

fn rows_with_labels(
    a: &SymmetricDesignMatrix,
    labels_for_row: impl Fn(usize) -> Vec<usize>,
) -> Vec<Vec<usize>> {
    let m = a.m();
    (0..m)
        .map(|i| {
            let labels = labels_for_row(i);
            let mut next = labels.into_iter();
            (0..m)
                .map(|j| if a.entry(i, j) == 1 { next.next().expect("κ labels per row") } else { 0 })
                .collect()
        })
        .collect()
}

/// Searches for an entrywise-symmetric labeling (`e(i,j) = e(j,i)` for all
/// pairs, not just matching supports). This is a proper edge colouring
/// problem on the design's incidence pattern; the search is exact
/// backtracking on the symmetric entry pairs, most-constrained pair first.
pub fn label_symmetric(a: &SymmetricDesignMatrix) -> Result<LabeledMatrix, SymDesignError> {
    let m = a.m();
    let kappa = a.params().kappa;
    assert!(kappa <= 64, "label masks use u64");
    // variables: unordered support pairs {i, j} (i == j for diagonal entries)
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        for j in i..m {
            if a.entry(i, j) == 1 {
                pairs.push((i, j));
            }
        }
    }
    let full: u64 = if kappa == 64 { u64::MAX } else { (1 << kappa) - 1 };
    let mut used = vec![0u64; m]; // labels already taken in each row
    let mut assigned = vec![0usize; pairs.len()];
    let mut done = vec![false; pairs.len()];

    fn solve(
        pairs: &[(usize, usize)],
        used: &mut [u64],
        assigned: &mut [usize],
        done: &mut [bool],
        full: u64,
        remaining: usize,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        // most-constrained unassigned pair
        let mut best: Option<(usize, u64, u32)> = None;
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            if done[idx] {
                continue;
            }
            let free = full & !(used[i] | used[j]);
            let count = free.count_ones();
            if count == 0 {
                return false;
            }
            if best.map_or(true, |(_, _, c)| count < c) {
                best = Some((idx, free, count));
                if count == 1 {
                    break;
                }
            }
        }
        let (idx, mut free, _) = best.expect("remaining > 0");
        let (i, j) = pairs[idx];
        while free != 0 {
            let bit = free & free.wrapping_neg();
            free ^= bit;
            used[i] |= bit;
            used[j] |= bit;
            done[idx] = true;
            assigned[idx] = bit.trailing_zeros() as usize + 1;
            if solve(pairs, used, assigned, done, full, remaining - 1) {
                return true;
            }
            done[idx] = false;
            used[i] &= !bit;
            used[j] &= !bit;
        }
        false
    }

    let total = pairs.len();
    if !solve(&pairs, &mut used, &mut assigned, &mut done, full, total) {
        return Err(SymDesignError::SymmetricLabelingInfeasible);
    }
    let mut entries = vec![vec![0usize; m]; m];
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        entries[i][j] = assigned[idx];
        entries[j][i] = assigned[idx];
    }
    let l = LabeledMatrix { entries, params: a.params() };
    l.validate_against(a)?;
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symdesigns::{fano, trivial, null_polarity, TrivialVariant};

    #[test]
    fn canonical_labels_in_column_order() {
        let l = label_assign(&fano(), LabelStrategy::Canonical).unwrap();
        assert_eq!(l.entries()[0], vec![0, 1, 2, 3, 0, 0, 0]);
        assert_eq!(l.entry(1, 0), 1);
        assert_eq!(l.entry(1, 1), 2);
    }

    #[test]
    fn seeded_labelings_differ_but_validate() {
        let a = fano();
        let l7 = label_assign(&a, LabelStrategy::Seeded(7)).unwrap();
        let l8 = label_assign(&a, LabelStrategy::Seeded(8)).unwrap();
        assert_ne!(l7.entries(), l8.entries());
        l7.validate_against(&a).unwrap();
        l8.validate_against(&a).unwrap();
        // determinism
        let again = label_assign(&a, LabelStrategy::Seeded(7)).unwrap();
        assert_eq!(l7.entries(), again.entries());
    }

    #[test]
    fn row_labels_are_distinct() {
        let a = null_polarity(2, 2).unwrap();
        let l = label_assign(&a, LabelStrategy::Seeded(3)).unwrap();
        for h in 0..l.m() {
            for i in 0..l.m() {
                for j in (i + 1)..l.m() {
                    if l.entry(h, i) != 0 && l.entry(h, j) != 0 {
                        assert_ne!(l.entry(h, i), l.entry(h, j));
                    }
                }
            }
        }
    }

    #[test]
    fn explicit_invalid_labelings_are_named() {
        let a = fano();
        let good = label_assign(&a, LabelStrategy::Canonical).unwrap();
        // break the zero pattern
        let mut entries = good.entries().to_vec();
        entries[0][0] = 1;
        let err = label_assign(&a, LabelStrategy::Explicit(entries)).unwrap_err();
        assert!(err.to_string().contains("zero pattern"), "{err}");
        // repeat a label in a row
        let mut entries = good.entries().to_vec();
        entries[0][2] = 1;
        let err = label_assign(&a, LabelStrategy::Explicit(entries)).unwrap_err();
        assert!(err.to_string().contains("repeats"), "{err}");
    }

    #[test]
    fn symmetric_labeling_of_small_designs() {
        for a in [
            fano(),
            trivial(TrivialVariant::AllOnes, 3).unwrap(),
            trivial(TrivialVariant::AllOnesMinusIdentity, 4).unwrap(),
            null_polarity(2, 2).unwrap(),
        ] {
            let l = label_symmetric(&a).unwrap();
            assert!(l.is_entrywise_symmetric());
            l.validate_against(&a).unwrap();
        }
    }

    #[test]
    fn canonical_labeling_need_not_be_entrywise_symmetric() {
        let l = label_assign(&fano(), LabelStrategy::Canonical).unwrap();
        assert!(!l.is_entrywise_symmetric());
    }
}
