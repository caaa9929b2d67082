//! Hadamard matrices (Sylvester and Paley types) and the resolvable designs
//! they induce.

use super::{DesignError, ResolvableDesign};
use crate::algebra::is_prime;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HadamardMethod {
    Sylvester,
    Paley,
}

/// Square ±1 matrix with `H · Hᵀ = order · I`, checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    pub fn from_entries(order: usize, entries: Vec<i8>) -> Result<Self, DesignError> {
        if entries.len() != order * order {
            return Err(DesignError::InvalidHadamard(format!(
                "expected {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&e| e != 1 && e != -1) {
            return Err(DesignError::InvalidHadamard(format!(
                "entry at offset {pos} is {} rather than ±1",
                entries[pos]
            )));
        }
        let h = HadamardMatrix { order, entries };
        h.check_orthogonality()?;
        Ok(h)
    }

    fn check_orthogonality(&self) -> Result<(), DesignError> {
        let n = self.order;
        for i in 0..n {
            for j in i..n {
                let dot: i64 = (0..n)
                    .map(|k| self.entry(i, k) as i64 * self.entry(j, k) as i64)
                    .sum();
                let expected = if i == j { n as i64 } else { 0 };
                if dot != expected {
                    return Err(DesignError::InvalidHadamard(format!(
                        "rows {i} and {j} have inner product {dot}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    /// Column-normalized copy: first row all `+1`.
    pub fn normalized(&self) -> HadamardMatrix {
        let n = self.order;
        let mut entries = self.entries.clone();
        for j in 0..n {
            if self.entry(0, j) == -1 {
                for i in 0..n {
                    entries[i * n + j] = -entries[i * n + j];
                }
            }
        }
        HadamardMatrix { order: n, entries }
    }
}

/// Builds a Hadamard matrix of the given order.
///
/// Sylvester doubling needs a power-of-two order; the Paley construction
/// needs `order = p + 1` for a prime `p ≡ 3 (mod 4)`.
pub fn hadamard_matrix(order: usize, method: HadamardMethod) -> Result<HadamardMatrix, DesignError> {
    match method {
        HadamardMethod::Sylvester => {
            if order == 0 || !order.is_power_of_two() {
                return Err(DesignError::NotPowerOfTwo(order));
            }
            let mut entries = vec![1i8];
            let mut n = 1;
            while n < order {
                let m = 2 * n;
                let mut next = vec![0i8; m * m];
                for i in 0..n {
                    for j in 0..n {
                        let e = entries[i * n + j];
                        next[i * m + j] = e;
                        next[i * m + j + n] = e;
                        next[(i + n) * m + j] = e;
                        next[(i + n) * m + j + n] = -e;
                    }
                }
                entries = next;
                n = m;
            }
            HadamardMatrix::from_entries(order, entries)
        }
        HadamardMethod::Paley => {
            let p = order.checked_sub(1).filter(|&p| is_prime(p as u64) && p % 4 == 3);
            let p = p.ok_or(DesignError::NotPaleyOrder { order })? as i64;
            // H = I + C with the skew conference matrix C: index 0 is the
            // point at infinity, indices 1..=p are the residues, and the core
            // is the quadratic character of the difference.
            let chi = |x: i64| -> i8 {
                let x = x.rem_euclid(p);
                if x == 0 {
                    return 0;
                }
                let mut acc: i64 = 1;
                let mut base = x;
                let mut e = (p - 1) / 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                if acc == 1 {
                    1
                } else {
                    -1
                }
            };
            let n = order;
            let mut entries = vec![0i8; n * n];
            for i in 0..n {
                for j in 0..n {
                    let c = match (i, j) {
                        (0, 0) => 0,
                        (0, _) => 1,
                        (_, 0) => -1,
                        (i, j) => chi(i as i64 - j as i64),
                    };
                    entries[i * n + j] = c + if i == j { 1 } else { 0 };
                }
            }
            HadamardMatrix::from_entries(order, entries)
        }
    }
}

/// The resolvable design of a normalized Hadamard matrix of order `4t ≥ 8`:
/// points are columns, and each non-initial row contributes one parallel
/// class consisting of its `+1`-support and its `-1`-support. Gives
/// `q = 2`, `r = t`, `κ = 4t - 1`.
pub fn affine_from_hadamard(h: &HadamardMatrix) -> Result<ResolvableDesign, DesignError> {
    let n = h.order();
    if n < 8 {
        return Err(DesignError::DegenerateOrder(n));
    }
    if n % 4 != 0 {
        return Err(DesignError::InvalidHadamard(format!(
            "order {n} is not a multiple of 4"
        )));
    }
    let h = h.normalized();
    let mut class_blocks = Vec::with_capacity(n - 1);
    for i in 1..n {
        let plus: Vec<usize> = (0..n).filter(|&j| h.entry(i, j) == 1).collect();
        let minus: Vec<usize> = (0..n).filter(|&j| h.entry(i, j) == -1).collect();
        class_blocks.push(vec![plus, minus]);
    }
    Ok(ResolvableDesign::from_classes(n, class_blocks, 2, n / 4))
}
