//! Discovery of all partitions certifying divisible-design structure.
//!
//! The procedure is exhaustive over the observed common-neighbour count
//! values: designating a value as `λ1` determines a candidate relation
//! "same class iff count = λ1", which is accepted only if it is a genuine
//! equivalence with equal class sizes and a constant cross-class count.
//! Transitivity is checked explicitly rather than assumed.

use super::{pair_counts, VerifyError};
use crate::bounds::DEFAULT_MAX_VERTICES;
use crate::graph::{Graph, Partition};
use crate::params::DdgParams;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct DiscoveredPartition {
    pub partition: Partition,
    pub params: DdgParams,
}

/// Strongly-regular classification `(v, k, λ, μ)`: counts constant over
/// adjacent pairs and over non-adjacent pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

#[derive(Debug, Clone)]
pub struct DiscoveryOutcome {
    pub degree: usize,
    /// Observed common-neighbour count values with pair multiplicities.
    pub count_histogram: Vec<(usize, usize)>,
    /// Proper divisible-design partitions (more than one class, classes
    /// bigger than a single vertex).
    pub partitions: Vec<DiscoveredPartition>,
    /// Present when the graph is strongly regular (the improper case).
    pub srg: Option<SrgParams>,
}

pub fn partitions_discover(g: &Graph) -> Result<DiscoveryOutcome, VerifyError> {
    partitions_discover_bounded(g, DEFAULT_MAX_VERTICES)
}

pub fn partitions_discover_bounded(
    g: &Graph,
    max_vertices: usize,
) -> Result<DiscoveryOutcome, VerifyError> {
    let v = g.n();
    if v > max_vertices {
        return Err(VerifyError::BoundExceeded { v, bound: max_vertices });
    }
    let k = g.degree(0);
    for u in 1..v {
        let d = g.degree(u);
        if d != k {
            return Err(VerifyError::NotRegular { u: 0, deg_u: k, v: u, deg_v: d });
        }
    }

    let counts = pair_counts(g);
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for x in 0..v {
        for y in (x + 1)..v {
            *histogram.entry(counts[x * v + y] as usize).or_default() += 1;
        }
    }

    let mut partitions = Vec::new();
    for (&lambda1, _) in &histogram {
        if let Some(p) = try_lambda1(g, &counts, lambda1) {
            partitions.push(p);
        }
    }

    // strongly regular: counts depend only on adjacency
    let srg = classify_srg(g, &counts, k);

    Ok(DiscoveryOutcome {
        degree: k,
        count_histogram: histogram.into_iter().collect(),
        partitions,
        srg,
    })
}

/// Builds the partition induced by "count = λ1" and checks it certifies a
/// divisible design; `None` when any check fails.
fn try_lambda1(g: &Graph, counts: &[u32], lambda1: usize) -> Option<DiscoveredPartition> {
    let v = g.n();
    let mut class_of = vec![usize::MAX; v];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..v {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut class = vec![x];
        for y in 0..v {
            if y != x && counts[x * v + y] as usize == lambda1 {
                // members must be fresh, or the relation is not transitive
                if class_of[y] != usize::MAX {
                    return None;
                }
                class.push(y);
            }
        }
        // equivalence: every internal pair must also have count λ1
        for (a, &p) in class.iter().enumerate() {
            for &q in &class[a + 1..] {
                if counts[p * v + q] as usize != lambda1 {
                    return None;
                }
            }
        }
        let id = classes.len();
        for &p in &class {
            class_of[p] = id;
        }
        classes.push(class);
    }

    let n = classes[0].len();
    if classes.iter().any(|c| c.len() != n) {
        return None;
    }
    let m = classes.len();
    if m < 2 || n < 2 {
        return None;
    }

    // constant cross-class count
    let mut lambda2: Option<usize> = None;
    for x in 0..v {
        for y in (x + 1)..v {
            if class_of[x] != class_of[y] {
                let got = counts[x * v + y] as usize;
                match lambda2 {
                    None => lambda2 = Some(got),
                    Some(expected) if got != expected => return None,
                    _ => {}
                }
            }
        }
    }
    let lambda2 = lambda2?;

    let partition = Partition::new(classes, v).expect("constructed to cover");
    let params = DdgParams {
        v: v as u64,
        k: g.degree(0) as u64,
        lambda1: lambda1 as u64,
        lambda2: lambda2 as u64,
        m: m as u64,
        n: n as u64,
    };
    Some(DiscoveredPartition { partition, params })
}

fn classify_srg(g: &Graph, counts: &[u32], k: usize) -> Option<SrgParams> {
    let v = g.n();
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for x in 0..v {
        for y in (x + 1)..v {
            let got = counts[x * v + y] as usize;
            let slot = if g.has_edge(x, y) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(got),
                Some(expected) if got != *expected => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams {
        v,
        k,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // outer C5, inner pentagram, spokes
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    #[test]
    fn petersen_is_srg_with_no_proper_partition() {
        let out = partitions_discover(&petersen()).unwrap();
        assert!(out.partitions.is_empty());
        assert_eq!(
            out.srg,
            Some(SrgParams { v: 10, k: 3, lambda: 0, mu: 1 })
        );
        let values: Vec<usize> = out.count_histogram.iter().map(|&(v, _)| v).collect();
        assert_eq!(values, vec![0, 1]);
    }

    #[test]
    fn c4_has_exactly_one_partition() {
        let mut g = Graph::empty(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        let out = partitions_discover(&g).unwrap();
        assert_eq!(out.partitions.len(), 1);
        let found = &out.partitions[0];
        assert_eq!(
            found.params,
            DdgParams { v: 4, k: 2, lambda1: 2, lambda2: 0, m: 2, n: 2 }
        );
        assert_eq!(found.partition.classes(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn non_regular_input_is_an_error() {
        let mut g = Graph::empty(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        assert!(matches!(
            partitions_discover(&g),
            Err(VerifyError::NotRegular { .. })
        ));
    }

    #[test]
    fn bound_is_enforced() {
        let g = Graph::empty(10);
        assert!(matches!(
            partitions_discover_bounded(&g, 5),
            Err(VerifyError::BoundExceeded { v: 10, bound: 5 })
        ));
    }

    #[test]
    fn complete_multipartite_found() {
        // K_{3,3,3}: classes are the independent triples
        let mut g = Graph::empty(9);
        for u in 0..9 {
            for v in (u + 1)..9 {
                if u / 3 != v / 3 {
                    g.add_edge(u, v);
                }
            }
        }
        let out = partitions_discover(&g).unwrap();
        assert_eq!(out.partitions.len(), 1);
        let p = &out.partitions[0];
        // same-class pairs see the other six vertices; adjacent cross pairs
        // share only the third class
        assert_eq!(
            p.params,
            DdgParams { v: 9, k: 6, lambda1: 6, lambda2: 3, m: 3, n: 3 }
        );
        assert!(p.params.is_proper());
    }
}
