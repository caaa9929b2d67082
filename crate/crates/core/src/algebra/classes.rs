//! Equivalence classes of ring vectors under unit scaling.
//!
//! Over a local ring `K` with ideal `J`, take all length-`2e` vectors having
//! at least one unit coordinate; two vectors are equivalent when one is a
//! unit multiple of the other. Each class is represented by its
//! lexicographically least member (coordinates compared as element indices,
//! first coordinate most significant), and class ids follow the lexicographic
//! order of representatives.

use super::{AlgebraError, LocalRing};
use std::collections::HashMap;

/// Cap on the raw vector space swept during enumeration.
const SWEEP_LIMIT: u128 = 1 << 27;

#[derive(Clone, Debug)]
pub struct ProjectiveClasses {
    ring: LocalRing,
    e: usize,
    reps: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, u32>,
    units: Vec<u64>,
}

impl ProjectiveClasses {
    pub fn enumerate(ring: &LocalRing, e: usize) -> Result<Self, AlgebraError> {
        Self::enumerate_bounded(ring, e, crate::bounds::DEFAULT_MAX_CLASSES)
    }

    pub fn enumerate_bounded(
        ring: &LocalRing,
        e: usize,
        max_classes: usize,
    ) -> Result<Self, AlgebraError> {
        if e < 1 {
            return Err(AlgebraError::InvalidDimension);
        }
        let expected = Self::expected_count(ring, e);
        if expected > max_classes as u128 {
            return Err(AlgebraError::ClassCountExceedsBound {
                count: expected,
                bound: max_classes as u128,
            });
        }
        let dim = 2 * e;
        let size = ring.size();
        let space = (size as u128).pow(dim as u32);
        if space > SWEEP_LIMIT {
            return Err(AlgebraError::EnumerationSpaceExceeded { space });
        }
        let space = space as usize;

        let units = ring.units();
        let mut visited = vec![false; space];
        let mut reps = Vec::with_capacity(expected as usize);
        let mut index = HashMap::with_capacity(expected as usize);

        let mut vec = vec![0u64; dim];
        for linear in 0..space {
            if !visited[linear] && vec.iter().any(|&c| ring.is_unit(c)) {
                let id = reps.len() as u32;
                for &u in &units {
                    let scaled: Vec<u64> = vec.iter().map(|&c| ring.mul(u, c)).collect();
                    visited[linear_index(&scaled, size)] = true;
                }
                index.insert(vec.clone(), id);
                reps.push(vec.clone());
            }
            // odometer step, last coordinate fastest
            for c in vec.iter_mut().rev() {
                *c += 1;
                if *c < size {
                    break;
                }
                *c = 0;
            }
        }
        debug_assert_eq!(reps.len() as u128, expected);
        Ok(ProjectiveClasses { ring: ring.clone(), e, reps, index, units })
    }

    /// Closed-form class count `q^{2e-1} (q^{2e} - 1) / (q - 1)`.
    pub fn expected_count(ring: &LocalRing, e: usize) -> u128 {
        let q = ring.base() as u128;
        let ee = 2 * e as u32;
        q.pow(ee - 1) * (q.pow(ee) - 1) / (q - 1)
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn dim(&self) -> usize {
        2 * self.e
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Canonical representative of a class.
    pub fn rep(&self, id: usize) -> &[u64] {
        &self.reps[id]
    }

    /// Class of an arbitrary vector; `None` when the vector has the wrong
    /// length or no unit coordinate.
    pub fn class_of(&self, v: &[u64]) -> Option<usize> {
        if v.len() != self.dim() || !v.iter().any(|&c| self.ring.is_unit(c)) {
            return None;
        }
        let canonical = self
            .units
            .iter()
            .map(|&u| -> Vec<u64> { v.iter().map(|&c| self.ring.mul(u, c)).collect() })
            .min()
            .expect("rings have at least one unit");
        self.index.get(&canonical).map(|&id| id as usize)
    }

    pub fn unit_list(&self) -> &[u64] {
        &self.units
    }
}

fn linear_index(v: &[u64], size: u64) -> usize {
    v.iter().fold(0usize, |acc, &c| acc * size as usize + c as usize)
}
