//! Built-in families of symmetric design matrices.

use super::{SymDesignError, SymmetricDesignMatrix};
use crate::algebra::FiniteField;
use crate::bounds::DEFAULT_MAX_DESIGN_POINTS;
use serde::{Deserialize, Serialize};

/// The 7×7 incidence matrix of the Fano plane, in the fixed symmetric form
/// used throughout this crate. Parameters `(7, 3, 1)`.
pub fn fano() -> SymmetricDesignMatrix {
    let rows: Vec<Vec<u8>> = [
        [0, 1, 1, 1, 0, 0, 0],
        [1, 1, 0, 0, 1, 0, 0],
        [1, 0, 1, 0, 0, 1, 0],
        [1, 0, 0, 1, 0, 0, 1],
        [0, 1, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 1, 0],
    ]
    .iter()
    .map(|r| r.to_vec())
    .collect();
    SymmetricDesignMatrix::from_rows(rows).expect("the Fano matrix is a (7,3,1) design")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrivialVariant {
    /// All-ones matrix: parameters `(m, m, m)`.
    AllOnes,
    /// All-ones minus identity: parameters `(m, m-1, m-2)`.
    AllOnesMinusIdentity,
}

/// The two degenerate symmetric designs, valid for any `m ≥ 2` (the second
/// needs `m ≥ 3` to keep `λ ≥ 1`).
pub fn trivial(variant: TrivialVariant, m: usize) -> Result<SymmetricDesignMatrix, SymDesignError> {
    if m < 2 {
        return Err(SymDesignError::TooSmall(m));
    }
    let rows: Vec<Vec<u8>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| match variant {
                    TrivialVariant::AllOnes => 1,
                    TrivialVariant::AllOnesMinusIdentity => u8::from(i != j),
                })
                .collect()
        })
        .collect();
    Ok(SymmetricDesignMatrix::from_rows(rows)?)
}

/// Incidence of points of `PG(2e-1, q)` with their perps under the standard
/// alternating bilinear form: `A[i][j] = 1` iff the form vanishes on
/// `(x_i, x_j)`. Since the form is alternating every point is incident with
/// its own perp, so the diagonal is all ones. Parameters
/// `((q^{2e}-1)/(q-1), (q^{2e-1}-1)/(q-1), (q^{2e-2}-1)/(q-1))`.
pub fn null_polarity(e: u32, q: u64) -> Result<SymmetricDesignMatrix, SymDesignError> {
    null_polarity_bounded(e, q, DEFAULT_MAX_DESIGN_POINTS)
}

pub fn null_polarity_bounded(
    e: u32,
    q: u64,
    max_points: usize,
) -> Result<SymmetricDesignMatrix, SymDesignError> {
    let field = FiniteField::of_order(q)?;
    let dim = 2 * e as usize;
    let count = ((q as u128).pow(2 * e) - 1) / (q as u128 - 1);
    if count > max_points as u128 {
        return Err(SymDesignError::PointCountExceedsBound { points: count, bound: max_points });
    }

    // projective points: first nonzero coordinate normalized to 1, lex order
    let mut points: Vec<Vec<u64>> = Vec::with_capacity(count as usize);
    let mut v = vec![0u64; dim];
    let total = (q as u128).pow(dim as u32);
    for _ in 0..total {
        if let Some(first) = v.iter().position(|&c| c != 0) {
            if v[first] == 1 {
                points.push(v.clone());
            }
        }
        for c in v.iter_mut().rev() {
            *c += 1;
            if *c < q {
                break;
            }
            *c = 0;
        }
    }
    debug_assert_eq!(points.len() as u128, count);

    let e = e as usize;
    let form = |x: &[u64], y: &[u64]| -> u64 {
        let mut acc = 0;
        for t in 0..e {
            acc = field.add(acc, field.mul(x[t], y[e + t]));
            acc = field.sub(acc, field.mul(x[e + t], y[t]));
        }
        acc
    };
    let m = points.len();
    let mut rows = vec![vec![0u8; m]; m];
    for i in 0..m {
        for j in i..m {
            let incident = u8::from(form(&points[i], &points[j]) == 0);
            rows[i][j] = incident;
            rows[j][i] = incident;
        }
    }
    Ok(SymmetricDesignMatrix::from_rows(rows)?)
}

/// Symmetric design from a difference set `D` in `Z_m`: `A[i][j] = 1` iff
/// `i + j mod m ∈ D`. Using the sum rather than the difference makes `A`
/// symmetric with no condition on `D`. The difference-set property (every
/// nonzero residue arises as `d - d'` a constant number of times) is checked
/// first. Parameters `(m, |D|, λ)`.
pub fn difference_set(m: u64, set: &[u64]) -> Result<SymmetricDesignMatrix, SymDesignError> {
    if m < 2 {
        return Err(SymDesignError::TooSmall(m as usize));
    }
    let mut seen = vec![false; m as usize];
    for &d in set {
        if d >= m {
            return Err(SymDesignError::ElementOutOfRange { element: d, m });
        }
        if seen[d as usize] {
            return Err(SymDesignError::DuplicateElement(d));
        }
        seen[d as usize] = true;
    }
    let mut coverage = vec![0usize; m as usize];
    for &d1 in set {
        for &d2 in set {
            if d1 != d2 {
                coverage[((d1 + m - d2) % m) as usize] += 1;
            }
        }
    }
    let lambda = coverage[1];
    for residue in 2..m {
        if coverage[residue as usize] != lambda {
            return Err(SymDesignError::NotDifferenceSet {
                residue,
                got: coverage[residue as usize],
                first: 1,
                expected: lambda,
            });
        }
    }
    let rows: Vec<Vec<u8>> = (0..m)
        .map(|i| (0..m).map(|j| u8::from(seen[((i + j) % m) as usize])).collect())
        .collect();
    Ok(SymmetricDesignMatrix::from_rows(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symdesigns::SymParams;

    #[test]
    fn trivial_parameters() {
        let j3 = trivial(TrivialVariant::AllOnes, 3).unwrap();
        assert_eq!(j3.params(), SymParams { m: 3, kappa: 3, lambda: 3 });
        let jm_i = trivial(TrivialVariant::AllOnesMinusIdentity, 4).unwrap();
        assert_eq!(jm_i.params(), SymParams { m: 4, kappa: 3, lambda: 2 });
        assert_eq!(trivial(TrivialVariant::AllOnes, 1).unwrap_err(), SymDesignError::TooSmall(1));
    }

    #[test]
    fn null_polarity_15_7_3() {
        let a = null_polarity(2, 2).unwrap();
        assert_eq!(a.params(), SymParams { m: 15, kappa: 7, lambda: 3 });
        for i in 0..15 {
            assert_eq!(a.entry(i, i), 1);
        }
    }

    #[test]
    fn null_polarity_63_31_15() {
        let a = null_polarity(3, 2).unwrap();
        assert_eq!(a.params(), SymParams { m: 63, kappa: 31, lambda: 15 });
        for i in 0..63 {
            assert_eq!(a.entry(i, i), 1);
        }
    }

    #[test]
    fn null_polarity_over_gf3() {
        let a = null_polarity(2, 3).unwrap();
        assert_eq!(a.params(), SymParams { m: 40, kappa: 13, lambda: 4 });
        for i in 0..40 {
            assert_eq!(a.entry(i, i), 1);
        }
    }

    #[test]
    fn difference_set_designs() {
        let a = difference_set(7, &[1, 2, 4]).unwrap();
        assert_eq!(a.params(), SymParams { m: 7, kappa: 3, lambda: 1 });
        let b = difference_set(11, &[1, 3, 4, 5, 9]).unwrap();
        assert_eq!(b.params(), SymParams { m: 11, kappa: 5, lambda: 2 });
    }

    #[test]
    fn difference_set_rejections() {
        assert!(matches!(
            difference_set(7, &[1, 2, 3]).unwrap_err(),
            SymDesignError::NotDifferenceSet { .. }
        ));
        assert_eq!(
            difference_set(7, &[1, 1, 2]).unwrap_err(),
            SymDesignError::DuplicateElement(1)
        );
        assert_eq!(
            difference_set(7, &[9]).unwrap_err(),
            SymDesignError::ElementOutOfRange { element: 9, m: 7 }
        );
    }
}
