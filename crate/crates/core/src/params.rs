//! Divisible-design-graph parameter tuples and the exact counting identity.

use serde::{Deserialize, Serialize};

/// Parameter tuple `(v, k, λ1, λ2; m, n)` of a divisible design graph: a
/// `k`-regular graph on `v` vertices whose vertex set splits into `m` classes
/// of size `n`, with `λ1` common neighbours for same-class pairs and `λ2` for
/// cross-class pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DdgParams {
    pub v: u64,
    pub k: u64,
    pub lambda1: u64,
    pub lambda2: u64,
    pub m: u64,
    pub n: u64,
}

impl DdgParams {
    /// Proper means the graph is not forced to be strongly regular:
    /// more than one class, classes bigger than one vertex, and `λ1 ≠ λ2`.
    pub fn is_proper(&self) -> bool {
        self.m > 1 && self.n > 1 && self.lambda1 != self.lambda2
    }
}

impl std::fmt::Display for DdgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{},{},{};{},{})",
            self.v, self.k, self.lambda1, self.lambda2, self.m, self.n
        )
    }
}

/// Outcome of the double-counting check on a parameter tuple: walks of length
/// two from a fixed vertex are counted once through `k(k-1)` and once through
/// the class structure, and the vertex count must factor as `m·n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    /// `λ1(n-1) + λ2·n·(m-1)`
    pub walks_lhs: u128,
    /// `k(k-1)`
    pub walks_rhs: u128,
    /// `m·n`
    pub product_mn: u128,
    /// `v`
    pub v: u128,
}

impl IdentityCheck {
    pub fn of(p: &DdgParams) -> Self {
        let (v, k, l1, l2, m, n) = (
            p.v as u128,
            p.k as u128,
            p.lambda1 as u128,
            p.lambda2 as u128,
            p.m as u128,
            p.n as u128,
        );
        IdentityCheck {
            walks_lhs: l1 * (n - 1) + l2 * n * (m - 1),
            walks_rhs: k * (k.saturating_sub(1)),
            product_mn: m * n,
            v,
        }
    }

    pub fn passes(&self) -> bool {
        self.walks_lhs == self.walks_rhs && self.product_mn == self.v
    }
}

impl std::fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "walks {} {} {}, v {} {} m*n",
            self.walks_lhs,
            if self.walks_lhs == self.walks_rhs { "=" } else { "!=" },
            self.walks_rhs,
            self.v,
            if self.v == self.product_mn { "=" } else { "!=" },
        )
    }
}
