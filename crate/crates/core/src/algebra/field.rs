//! Finite fields `GF(p^k)` on integer element indices.
//!
//! An element index `n` stands for the polynomial whose coefficient of `x^i`
//! is the `i`-th base-`p` digit of `n`. Multiplication reduces modulo a fixed
//! irreducible polynomial: the monic degree-`k` polynomial over `GF(p)` whose
//! non-leading coefficient vector, read as a base-`p` integer, is smallest.
//! Fixing that choice makes every run of every binary produce identical
//! tables, hence identical designs and graphs downstream.

use super::{is_prime, AlgebraError};
use crate::bounds::DEFAULT_MAX_FIELD_ORDER;

/// Orders up to this get full add/mul lookup tables; larger fields compute
/// digit-wise on demand.
const TABLE_LIMIT: u64 = 512;

#[derive(Clone)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    /// Non-leading coefficients of the monic irreducible, `irr[i]` for `x^i`.
    irr: Vec<u64>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
}

impl FiniteField {
    pub fn new(p: u64, k: u32) -> Result<Self, AlgebraError> {
        Self::with_max_order(p, k, DEFAULT_MAX_FIELD_ORDER)
    }

    pub fn with_max_order(p: u64, k: u32, max_order: u64) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NonPrime(p));
        }
        if k < 1 {
            return Err(AlgebraError::InvalidDegree);
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= max_order)
            .ok_or(AlgebraError::OrderExceedsBound {
                order: p.saturating_pow(k),
                bound: max_order,
            })?;
        let irr = least_irreducible(p, k);
        let mut field = FiniteField { p, k, q, irr, add_table: None, mul_table: None };
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = field.add_slow(a, b) as u32;
                    mul[(a * q + b) as usize] = field.mul_slow(a, b) as u32;
                }
            }
            field.add_table = Some(add);
            field.mul_table = Some(mul);
        }
        Ok(field)
    }

    /// Convenience for a field of prime-power order `q`.
    pub fn of_order(q: u64) -> Result<Self, AlgebraError> {
        let (p, k) = super::prime_power_decompose(q).ok_or(AlgebraError::NotPrimePower(q))?;
        Self::new(p, k)
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Non-leading coefficients of the reduction polynomial.
    pub fn irreducible(&self) -> &[u64] {
        &self.irr
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.add_table {
            Some(t) => t[(a * self.q + b) as usize] as u64,
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.mul_table {
            Some(t) => t[(a * self.q + b) as usize] as u64,
            None => self.mul_slow(a, b),
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        let mut out = 0;
        let mut scale = 1;
        let mut a = a;
        for _ in 0..self.k {
            let d = a % self.p;
            out += ((self.p - d) % self.p) * scale;
            scale *= self.p;
            a /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.q - 2))
    }

    fn add_slow(&self, mut a: u64, mut b: u64) -> u64 {
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * scale;
            scale *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let k = self.k as usize;
        let da = digits(a, self.p, k);
        let db = digits(b, self.p, k);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce: x^k = -(irr[k-1] x^{k-1} + ... + irr[0])
        for i in (k..prod.len()).rev() {
            let t = prod[i];
            if t == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                prod[i - k + j] = (prod[i - k + j] + t * ((self.p - self.irr[j]) % self.p)) % self.p;
            }
        }
        undigits(&prod[..k], self.p)
    }
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn digits(mut n: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = n % p;
        n /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// The monic irreducible of degree `k` over `GF(p)` with the smallest
/// non-leading coefficient vector (read as a base-`p` integer). Found by
/// trial division, which is exhaustive and order-stable.
fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    if k == 1 {
        return vec![0]; // x itself; reduction never triggers for k = 1
    }
    let candidates = p.pow(k as u32);
    for n in 0..candidates {
        let mut coeffs = digits(n, p, k + 1);
        coeffs[k] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs[..k].to_vec();
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Monic `f` of degree >= 2 is irreducible iff no monic polynomial of degree
/// `1..=deg(f)/2` divides it.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for n in 0..p.pow(d as u32) {
            let mut g = digits(n, p, d + 1);
            g[d] = 1;
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    // g is monic, so each elimination step is a plain subtraction of a shift.
    while rem.len() > dg {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dg;
        if lead != 0 {
            for (j, &gc) in g.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = (rem[idx] + lead * ((p - gc) % p)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_characteristic_two() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf4_non_identity_units_multiply_to_one() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.order(), 4);
        // x * (x+1) = x^2 + x = 1 under x^2 + x + 1
        assert_eq!(f.irreducible(), &[1, 1]);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(3, 2), 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), AlgebraError::NonPrime(4));
        assert_eq!(FiniteField::new(2, 0).unwrap_err(), AlgebraError::InvalidDegree);
        assert!(matches!(
            FiniteField::with_max_order(2, 9, 256),
            Err(AlgebraError::OrderExceedsBound { order: 512, bound: 256 })
        ));
        assert_eq!(FiniteField::of_order(12).unwrap_err(), AlgebraError::NotPrimePower(12));
    }

    fn check_axioms(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // exactly q - 1 units
        let units = (0..q).filter(|&a| f.inv(a).is_some()).count() as u64;
        assert_eq!(units, q - 1);
    }

    #[test]
    fn axioms_exhaustive_small_orders() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (2, 5)] {
            check_axioms(&FiniteField::new(p, k).unwrap());
        }
    }

    #[test]
    fn axioms_exhaustive_order_64() {
        check_axioms(&FiniteField::new(2, 6).unwrap());
    }

    #[test]
    fn tables_and_slow_path_agree() {
        let small = FiniteField::new(5, 2).unwrap();
        assert!(small.add_table.is_some());
        for a in 0..25 {
            for b in 0..25 {
                assert_eq!(small.add(a, b), small.add_slow(a, b));
                assert_eq!(small.mul(a, b), small.mul_slow(a, b));
            }
        }
        // GF(625) is over the table limit; identities and inverses still hold.
        let big = FiniteField::new(5, 4).unwrap();
        assert!(big.add_table.is_none());
        for a in 0..big.order() {
            assert_eq!(big.add(a, big.neg(a)), 0);
            assert_eq!(big.mul(a, 1), a);
            if a != 0 {
                assert_eq!(big.mul(a, big.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn deterministic_tables() {
        let a = FiniteField::new(3, 2).unwrap();
        let b = FiniteField::new(3, 2).unwrap();
        assert_eq!(a.irreducible(), b.irreducible());
        for x in 0..9 {
            for y in 0..9 {
                assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }
}
