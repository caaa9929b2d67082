//! Dense bitset graphs and vertex partitions.
//!
//! Adjacency is stored as one bit row per vertex, so common-neighbour counts
//! are a word-wise AND plus popcount. All verification kernels in this crate
//! run on this representation.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("vertex {0} appears in more than one class")]
    Overlap(usize),
    #[error("vertex {0} is not covered by any class")]
    Uncovered(usize),
    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    OutOfRange(usize, usize),
    #[error("partition has an empty class (index {0})")]
    EmptyClass(usize),
}

/// Undirected simple graph on `n` vertices, bitset rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from raw bit rows, rejecting loops and asymmetry.
    pub fn from_bit_rows(n: usize, rows: Vec<u64>) -> Result<Self, String> {
        let words = n.div_ceil(64);
        if rows.len() != n * words {
            return Err(format!(
                "expected {} words for {} vertices, got {}",
                n * words,
                n,
                rows.len()
            ));
        }
        let g = Graph { n, words, rows };
        for u in 0..n {
            if g.has_edge(u, u) {
                return Err(format!("loop at vertex {u}"));
            }
            let row = g.row(u);
            if let Some(w) = row.last() {
                let tail = n % 64;
                if tail != 0 && w >> tail != 0 {
                    return Err(format!("row {u} has bits beyond vertex range"));
                }
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(format!("asymmetric pair ({u},{v})"));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, u: usize) -> &mut [u64] {
        &mut self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.row_mut(u)[v / 64] |= 1 << (v % 64);
        self.row_mut(v)[u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.row_mut(u)[v / 64] &= !(1 << (v % 64));
        self.row_mut(v)[u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|N(u) ∩ N(v)|` by word-wise AND.
    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (self.row(u), self.row(v));
        a.iter()
            .zip(b)
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.has_edge(u, v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Image of the graph under a vertex relabeling: edge (u,v) becomes
    /// (perm[u], perm[v]).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// True when the bipartite block between `left` and `right` has no edge.
    pub fn block_is_zero(&self, left: &[usize], right: &[usize]) -> bool {
        left.iter()
            .all(|&u| right.iter().all(|&v| u == v || !self.has_edge(u, v)))
    }

    /// True when every cross pair between `left` and `right` is an edge.
    pub fn block_is_complete(&self, left: &[usize], right: &[usize]) -> bool {
        left.iter()
            .all(|&u| right.iter().all(|&v| u == v || self.has_edge(u, v)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={})", self.n, self.edge_count())
    }
}

/// Partition of `0..n` into non-empty classes, with constant-time class lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
}

impl Partition {
    pub fn new(classes: Vec<Vec<usize>>, n: usize) -> Result<Self, PartitionError> {
        let mut class_of = vec![u32::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(PartitionError::EmptyClass(c));
            }
            for &v in class {
                if v >= n {
                    return Err(PartitionError::OutOfRange(v, n));
                }
                if class_of[v] != u32::MAX {
                    return Err(PartitionError::Overlap(v));
                }
                class_of[v] = c as u32;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == u32::MAX) {
            return Err(PartitionError::Uncovered(v));
        }
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Partition { classes, class_of })
    }

    /// `m` consecutive classes of size `n` over `0..m*n`.
    pub fn contiguous(m: usize, n: usize) -> Self {
        let classes = (0..m)
            .map(|c| (c * n..(c + 1) * n).collect())
            .collect();
        Partition::new(classes, m * n).expect("contiguous partition is always valid")
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v] as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    /// `Some(size)` when all classes have the same size.
    pub fn uniform_class_size(&self) -> Option<usize> {
        let s = self.classes[0].len();
        self.classes.iter().all(|c| c.len() == s).then_some(s)
    }
}
