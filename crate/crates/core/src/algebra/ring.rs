//! The two finite local-ring families with a unique non-trivial ideal:
//! integers modulo `p^2`, and `GF(q)[x]` modulo `x^2`.
//!
//! Both have `q^2` elements, `q^2 - q` units, and an ideal `J` of size `q`
//! with quotient `GF(q)`. Elements are integer indices: residues for the
//! first kind; `a + b*x` encoded as `a + b*q` (field element indices) for the
//! second, so in both kinds `x` lies in `J` exactly when `x % q == 0`.

use super::{is_prime, prime_power_decompose, AlgebraError, FiniteField};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    IntegersModPSquared,
    PolynomialsModXSquared,
}

#[derive(Clone)]
enum Repr {
    ModP2 { p: u64 },
    PolyX2 { field: FiniteField },
}

#[derive(Clone)]
pub struct LocalRing {
    repr: Repr,
}

/// Builds the ring of the requested kind over base `q`.
pub fn ring_make(kind: RingKind, q: u64) -> Result<LocalRing, AlgebraError> {
    match kind {
        RingKind::IntegersModPSquared => LocalRing::integers_mod_p_squared(q),
        RingKind::PolynomialsModXSquared => LocalRing::polynomials_mod_x_squared(q),
    }
}

impl LocalRing {
    /// `Z / p^2 Z` for prime `p`.
    pub fn integers_mod_p_squared(p: u64) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NonPrime(p));
        }
        Ok(LocalRing { repr: Repr::ModP2 { p } })
    }

    /// `GF(q)[x] / <x^2>` for a prime power `q`.
    pub fn polynomials_mod_x_squared(q: u64) -> Result<Self, AlgebraError> {
        if prime_power_decompose(q).is_none() {
            return Err(AlgebraError::NotPrimePower(q));
        }
        Ok(LocalRing { repr: Repr::PolyX2 { field: FiniteField::of_order(q)? } })
    }

    pub fn kind(&self) -> RingKind {
        match self.repr {
            Repr::ModP2 { .. } => RingKind::IntegersModPSquared,
            Repr::PolyX2 { .. } => RingKind::PolynomialsModXSquared,
        }
    }

    /// The base `q`: `|K| = q^2`, `|J| = q`, `K/J` is `GF(q)`.
    pub fn base(&self) -> u64 {
        match &self.repr {
            Repr::ModP2 { p } => *p,
            Repr::PolyX2 { field } => field.order(),
        }
    }

    pub fn size(&self) -> u64 {
        self.base() * self.base()
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.size()
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.repr {
            Repr::ModP2 { p } => (a + b) % (p * p),
            Repr::PolyX2 { field } => {
                let q = field.order();
                field.add(a % q, b % q) + field.add(a / q, b / q) * q
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        match &self.repr {
            Repr::ModP2 { p } => (p * p - a) % (p * p),
            Repr::PolyX2 { field } => {
                let q = field.order();
                field.neg(a % q) + field.neg(a / q) * q
            }
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.repr {
            Repr::ModP2 { p } => (a * b) % (p * p),
            Repr::PolyX2 { field } => {
                // (a0 + a1 x)(b0 + b1 x) = a0 b0 + (a0 b1 + a1 b0) x, x^2 = 0
                let q = field.order();
                let (a0, a1, b0, b1) = (a % q, a / q, b % q, b / q);
                field.mul(a0, b0)
                    + field.add(field.mul(a0, b1), field.mul(a1, b0)) * q
            }
        }
    }

    /// Units are exactly the elements outside the ideal.
    #[inline]
    pub fn is_unit(&self, a: u64) -> bool {
        a % self.base() != 0
    }

    #[inline]
    pub fn in_ideal(&self, a: u64) -> bool {
        a % self.base() == 0
    }

    pub fn units(&self) -> Vec<u64> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn ideal(&self) -> Vec<u64> {
        self.elements().filter(|&a| self.in_ideal(a)).collect()
    }

    /// Projection `K -> K/J` onto field-element indices of `GF(q)`.
    pub fn quotient_class(&self, a: u64) -> u64 {
        a % self.base()
    }

    pub fn label(&self) -> String {
        match &self.repr {
            Repr::ModP2 { p } => format!("Z/{}", p * p),
            Repr::PolyX2 { field } => format!("GF({})[x]/(x^2)", field.order()),
        }
    }
}

impl std::fmt::Debug for LocalRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}
