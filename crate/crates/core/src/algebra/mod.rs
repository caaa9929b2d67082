//! Exact arithmetic: finite fields `GF(p^k)`, the two finite local-ring
//! families with a unique non-trivial ideal, and the projective-like classes
//! of vectors over such a ring.
//!
//! Everything here is table-driven or digit-wise modular arithmetic on small
//! integer element indices, so two runs always agree element by element. That
//! determinism is what makes graph vertex orders reproducible downstream.

mod classes;
mod field;
mod ring;

pub use classes::ProjectiveClasses;
pub use field::FiniteField;
pub use ring::{ring_make, LocalRing, RingKind};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field order {order} exceeds the bound {bound}")]
    OrderExceedsBound { order: u64, bound: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("class count {count} exceeds the bound {bound}")]
    ClassCountExceedsBound { count: u128, bound: u128 },
    #[error("vector space of {space} elements is too large to sweep")]
    EnumerationSpaceExceeded { space: u128 },
    #[error("dimension must be at least 2 (e >= 1)")]
    InvalidDimension,
}

/// Trial-division primality; inputs here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Writes `q = p^k` with `p` prime, if possible.
pub fn prime_power_decompose(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return (rest == 1).then_some((p, k));
        }
        p += 1;
    }
    Some((q, 1))
}
