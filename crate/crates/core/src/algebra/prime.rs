use rand::{Rng, RngCore};

use super::field::{FiniteField, Field, FieldDescriptor, PrimeReduction};
use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;
pub const CROSS_CHECK_PRIME: u64 = 101;

/// The prime field 𝔽ₚ for an odd prime p < 2⁶³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= 1 << 63 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime below 2^63")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        inv_mod(*a, self.p)
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime { p: self.p }
    }
    fn parse_elem(&self, s: &str) -> Result<u64> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n = self.parse_elem(n)?;
            let d = self.parse_elem(d)?;
            return self
                .div(&n, &d)
                .ok_or_else(|| Error::Parse(format!("denominator of {t:?} vanishes mod {}", self.p)));
        }
        let v: i128 = t
            .parse()
            .map_err(|_| Error::Parse(format!("invalid residue {t:?}")))?;
        Ok(v.rem_euclid(self.p as i128) as u64)
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn pow(&self, a: &u64, e: u64) -> u64 {
        pow_mod(*a, e, self.p)
    }
}

impl FiniteField for PrimeField {
    fn prime(&self) -> u64 {
        self.p
    }
    fn ext_degree(&self) -> usize {
        1
    }
    fn coords(&self, a: &u64) -> Vec<u64> {
        vec![*a]
    }
}

impl PrimeReduction for PrimeField {
    fn working_prime(&self) -> u64 {
        self.p
    }
    fn reduce(&self, a: &u64, p: u64) -> Option<u64> {
        (p == self.p).then_some(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn inverse_and_parse() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.parse_elem("-1").unwrap(), 100);
        assert_eq!(f.parse_elem("1/2").unwrap(), 51);
        assert!(f.parse_elem("x").is_err());
    }

    #[test]
    fn large_prime_arithmetic() {
        let p = 9_223_372_036_854_775_783; // largest prime below 2^63
        let f = PrimeField::new(p).unwrap();
        let a = p - 1;
        assert_eq!(f.mul(&a, &a), 1);
        assert_eq!(f.add(&a, &a), p - 2);
    }
}
