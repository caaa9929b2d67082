//! Symmetric incidence matrices of symmetric 2-designs, and the labeled
//! matrices that drive the graph construction.
//!
//! A symmetric 2-design with parameters `(m, κ, λ)` is represented by an
//! `m×m` 0/1 matrix that equals its own transpose, has constant row sum `κ`,
//! and constant inner product `λ` between distinct rows. A labeling replaces
//! the `κ` nonzero entries of each row by the integers `1..=κ` in some order;
//! only the support pattern must stay symmetric. Labels name parallel classes
//! of the affine designs downstream.

mod label;
mod matrices;

pub use label::{label_assign, label_symmetric, LabelStrategy, LabeledMatrix};
pub use matrices::{difference_set, fano, null_polarity, null_polarity_bounded, trivial, TrivialVariant};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymDesignError {
    #[error("order m must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("design would have {points} points, above the bound {bound}")]
    PointCountExceedsBound { points: u128, bound: usize },
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error("difference set contains {0} twice")]
    DuplicateElement(u64),
    #[error("difference set element {element} out of range 0..{m}")]
    ElementOutOfRange { element: u64, m: u64 },
    #[error("not a difference set: residue {residue} is covered {got} times, residue {first} {expected} times")]
    NotDifferenceSet { residue: u64, got: usize, first: u64, expected: usize },
    #[error("matrix fails symmetric 2-design verification: {0}")]
    Violation(#[from] SymViolation),
    #[error("labeling invariant violated: {0}")]
    LabelInvariant(String),
    #[error("no entrywise-symmetric labeling exists for this matrix")]
    SymmetricLabelingInfeasible,
}

/// First failed check of [`symdesign_verify`], with witness indices.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymViolation {
    #[error("matrix is empty")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({i},{j}) is {value}, expected 0 or 1")]
    BadEntry { i: usize, j: usize, value: u8 },
    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("row {row} sums to {got} but row {first} sums to {expected}")]
    RowSumNotConstant { row: usize, got: usize, first: usize, expected: usize },
    #[error("rows ({i},{j}) have inner product {got}, rows ({i0},{j0}) have {expected}")]
    InnerProductNotConstant { i: usize, j: usize, got: usize, i0: usize, j0: usize, expected: usize },
    #[error("rows meet in 0 columns; not a 2-design with λ ≥ 1")]
    LambdaZero,
}

/// Verified parameters `(m, κ, λ)` of a symmetric 2-design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymParams {
    pub m: usize,
    pub kappa: usize,
    pub lambda: usize,
}

/// A 0/1 matrix that passed [`symdesign_verify`] at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDesignMatrix {
    rows: Vec<Vec<u8>>,
    params: SymParams,
}

impl SymmetricDesignMatrix {
    /// Wraps a raw matrix after verifying all 2-design axioms.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self, SymDesignError> {
        let params = symdesign_verify(&rows)?;
        Ok(SymmetricDesignMatrix { rows, params })
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    pub fn params(&self) -> SymParams {
        self.params
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }
}

/// Confirms symmetry, constant row sum, and constant pairwise inner product
/// of a square 0/1 matrix, returning `(m, κ, λ)` or the first violation.
pub fn symdesign_verify(rows: &[Vec<u8>]) -> Result<SymParams, SymViolation> {
    let m = rows.len();
    if m == 0 {
        return Err(SymViolation::Empty);
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != m {
            return Err(SymViolation::NotSquare { row: i, len: row.len(), expected: m });
        }
        for (j, &e) in row.iter().enumerate() {
            if e > 1 {
                return Err(SymViolation::BadEntry { i, j, value: e });
            }
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            if rows[i][j] != rows[j][i] {
                return Err(SymViolation::NotSymmetric { i, j });
            }
        }
    }
    let kappa: usize = rows[0].iter().map(|&e| e as usize).sum();
    for (i, row) in rows.iter().enumerate().skip(1) {
        let sum: usize = row.iter().map(|&e| e as usize).sum();
        if sum != kappa {
            return Err(SymViolation::RowSumNotConstant { row: i, got: sum, first: 0, expected: kappa });
        }
    }
    let mut lambda: Option<(usize, usize, usize)> = None;
    for i in 0..m {
        for j in (i + 1)..m {
            let dot: usize = (0..m).map(|c| (rows[i][c] & rows[j][c]) as usize).sum();
            match lambda {
                None => lambda = Some((dot, i, j)),
                Some((expected, i0, j0)) if dot != expected => {
                    return Err(SymViolation::InnerProductNotConstant { i, j, got: dot, i0, j0, expected });
                }
                _ => {}
            }
        }
    }
    let lambda = match lambda {
        Some((l, _, _)) => l,
        None => kappa, // m = 1: no distinct row pairs
    };
    if lambda == 0 {
        return Err(SymViolation::LambdaZero);
    }
    Ok(SymParams { m, kappa, lambda })
}
