//! The fixed 28-vertex instance with parameters (28,6,2,1;7,4).
//!
//! Assembled from six 4×4 cell matrices arranged in a 7×7 block layout whose
//! zero/nonzero collapse is the Fano incidence matrix. This instance predates
//! the general construction and serves as a golden test vector.

use super::DdgInstance;
use crate::graph::{Graph, Partition};

const A: [[u8; 4]; 4] = [
    [1, 1, 0, 0],
    [1, 1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, 1],
];
const B: [[u8; 4]; 4] = [
    [1, 1, 0, 0],
    [0, 0, 1, 1],
    [1, 1, 0, 0],
    [0, 0, 1, 1],
];
const C: [[u8; 4]; 4] = [
    [1, 1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, 1],
    [1, 1, 0, 0],
];
const D: [[u8; 4]; 4] = [
    [0, 1, 1, 0],
    [1, 0, 0, 1],
    [1, 0, 0, 1],
    [0, 1, 1, 0],
];
const E: [[u8; 4]; 4] = [
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
];
const F: [[u8; 4]; 4] = [
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [0, 1, 1, 0],
    [1, 0, 0, 1],
];

#[derive(Clone, Copy)]
enum Cell {
    Zero,
    Plain(&'static [[u8; 4]; 4]),
    Transposed(&'static [[u8; 4]; 4]),
}

use Cell::{Plain as P, Transposed as T, Zero as O};

const LAYOUT: [[Cell; 7]; 7] = [
    [O,    P(&A), P(&B), P(&C), O,    O,    O],
    [T(&A), P(&D), O,    O,    P(&E), O,    O],
    [T(&B), O,    P(&D), O,    O,    P(&E), O],
    [T(&C), O,    O,    P(&D), O,    O,    P(&E)],
    [O,    T(&E), O,    O,    O,    P(&A), P(&C)],
    [O,    O,    T(&E), O,    T(&A), O,    P(&F)],
    [O,    O,    O,    T(&E), T(&C), T(&F), O],
];

/// The 28-vertex sporadic divisible design graph, with its canonical
/// partition into seven classes of four in block order. Both triangles of the
/// matrix are filled straight from the layout and then checked for symmetry
/// and an empty diagonal; parameters are derived by brute-force verification
/// at construction.
pub fn sporadic28() -> DdgInstance {
    let words = 28usize.div_ceil(64);
    let mut rows = vec![0u64; 28 * words];
    for (bi, row) in LAYOUT.iter().enumerate() {
        for (bj, cell) in row.iter().enumerate() {
            for r in 0..4 {
                for c in 0..4 {
                    let e = match cell {
                        Cell::Zero => 0,
                        Cell::Plain(m) => m[r][c],
                        Cell::Transposed(m) => m[c][r],
                    };
                    if e == 1 {
                        let (u, v) = (4 * bi + r, 4 * bj + c);
                        rows[u * words + v / 64] |= 1 << (v % 64);
                    }
                }
            }
        }
    }
    let g = Graph::from_bit_rows(28, rows)
        .expect("the printed block layout is symmetric with an empty diagonal");
    let partition = Partition::contiguous(7, 4);
    DdgInstance::from_graph(g, partition, "sporadic28")
        .expect("the fixed 28-vertex instance is a divisible design graph")
}
