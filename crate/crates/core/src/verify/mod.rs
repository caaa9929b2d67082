//! Ground truth: brute-force verification of divisible-design structure,
//! canonical-partition discovery, the counting identity, and desk-scale
//! graph isomorphism.
//!
//! Nothing in this module trusts a formula from the construction side. Pair
//! counts come from bitset AND + popcount over all vertex pairs, and every
//! verdict carries a witness.

mod discover;
mod iso;

pub use discover::{
    partitions_discover, partitions_discover_bounded, DiscoveredPartition, DiscoveryOutcome,
    SrgParams,
};
pub use iso::{iso_check, iso_check_with, refined_colour_class_sizes, IsoLimits, IsoOutcome};

use crate::graph::{Graph, Partition};
use crate::params::{DdgParams, IdentityCheck};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DdgViolation {
    #[error("graph has {graph} vertices but the partition covers {partition}")]
    VertexCountMismatch { graph: usize, partition: usize },
    #[error("partition classes have unequal sizes ({0} vs {1})")]
    UnequalClassSizes(usize, usize),
    #[error("not regular: vertex {u} has degree {deg_u}, vertex {v} has degree {deg_v}")]
    NotRegular { u: usize, deg_u: usize, v: usize, deg_v: usize },
    #[error("same-class pair ({x},{y}) has {got} common neighbours; pair ({x0},{y0}) has {expected}")]
    WithinClassNotConstant { x: usize, y: usize, got: usize, x0: usize, y0: usize, expected: usize },
    #[error("cross-class pair ({x},{y}) has {got} common neighbours; pair ({x0},{y0}) has {expected}")]
    CrossClassNotConstant { x: usize, y: usize, got: usize, x0: usize, y0: usize, expected: usize },
    #[error("graph with no vertices")]
    Empty,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("graph on {v} vertices exceeds the bound {bound}")]
    BoundExceeded { v: usize, bound: usize },
    #[error("graph is not regular: vertex {u} has degree {deg_u}, vertex {v} has degree {deg_v}")]
    NotRegular { u: usize, deg_u: usize, v: usize, deg_v: usize },
}

/// All-pairs common-neighbour counts, row-parallel.
pub(crate) fn pair_counts(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut counts = vec![0u32; n * n];
    counts
        .par_chunks_mut(n)
        .enumerate()
        .for_each(|(u, row)| {
            for (v, slot) in row.iter_mut().enumerate() {
                if v != u {
                    *slot = g.common_neighbors(u, v) as u32;
                }
            }
        });
    counts
}

/// Brute-force check that `(g, partition)` is a divisible design graph:
/// regularity, a constant same-class common-neighbour count `λ1`, and a
/// constant cross-class count `λ2`. Returns the parameters (with
/// [`DdgParams::is_proper`] classifying proper versus strongly regular), or
/// the first violation with a witness pair.
pub fn ddg_verify(g: &Graph, partition: &Partition) -> Result<DdgParams, DdgViolation> {
    let v = g.n();
    if v == 0 {
        return Err(DdgViolation::Empty);
    }
    if partition.vertex_count() != v {
        return Err(DdgViolation::VertexCountMismatch {
            graph: v,
            partition: partition.vertex_count(),
        });
    }
    let n = match partition.uniform_class_size() {
        Some(n) => n,
        None => {
            let sizes: Vec<usize> = partition.classes().iter().map(|c| c.len()).collect();
            let min = *sizes.iter().min().unwrap();
            let max = *sizes.iter().max().unwrap();
            return Err(DdgViolation::UnequalClassSizes(min, max));
        }
    };
    let m = partition.class_count();

    let k = g.degree(0);
    for u in 1..v {
        let d = g.degree(u);
        if d != k {
            return Err(DdgViolation::NotRegular { u: 0, deg_u: k, v: u, deg_v: d });
        }
    }

    let counts = pair_counts(g);
    let mut within: Option<(usize, usize, usize)> = None;
    let mut cross: Option<(usize, usize, usize)> = None;
    for x in 0..v {
        for y in (x + 1)..v {
            let got = counts[x * v + y] as usize;
            if partition.class_of(x) == partition.class_of(y) {
                match within {
                    None => within = Some((got, x, y)),
                    Some((expected, x0, y0)) if got != expected => {
                        return Err(DdgViolation::WithinClassNotConstant {
                            x, y, got, x0, y0, expected,
                        });
                    }
                    _ => {}
                }
            } else {
                match cross {
                    None => cross = Some((got, x, y)),
                    Some((expected, x0, y0)) if got != expected => {
                        return Err(DdgViolation::CrossClassNotConstant {
                            x, y, got, x0, y0, expected,
                        });
                    }
                    _ => {}
                }
            }
        }
    }

    Ok(DdgParams {
        v: v as u64,
        k: k as u64,
        lambda1: within.map(|(c, _, _)| c as u64).unwrap_or(0),
        lambda2: cross.map(|(c, _, _)| c as u64).unwrap_or(0),
        m: m as u64,
        n: n as u64,
    })
}

/// Exact evaluation of the double-counting identity
/// `λ1(n-1) + λ2·n·(m-1) = k(k-1)` together with `v = m·n`.
pub fn identity_check(p: &DdgParams) -> IdentityCheck {
    IdentityCheck::of(p)
}
