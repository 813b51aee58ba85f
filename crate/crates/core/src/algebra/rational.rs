use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use super::field::{Field, FieldDescriptor, PrimeReduction};
use super::prime::{inv_mod, DEFAULT_PRIME};
use crate::error::{Error, Result};

/// ℚ with arbitrary-precision numerators and denominators. `BigRational`
/// keeps values in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rational
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid rational {t:?}"));
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_i64(rng.gen_range(-50..=50))
    }
}

impl PrimeReduction for RationalField {
    fn working_prime(&self) -> u64 {
        DEFAULT_PRIME
    }
    fn reduce(&self, a: &BigRational, p: u64) -> Option<u64> {
        let bp = BigInt::from(p);
        let n = a.numer().mod_floor(&bp).to_u64()?;
        let d = a.denom().mod_floor(&bp).to_u64()?;
        let di = inv_mod(d, p)?;
        Some(((n as u128 * di as u128) % p as u128) as u64)
    }
}

/// Reduce a rational modulo p, reporting which value failed.
pub fn reduce_rational(a: &BigRational, p: u64) -> Result<u64> {
    RationalField.reduce(a, p).ok_or_else(|| Error::BadReduction {
        p,
        reason: format!("{p} divides the denominator of {a}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn parse_lowest_terms() {
        let q = RationalField;
        let a = q.parse_elem("6/-4").unwrap();
        assert_eq!(q.format_elem(&a), "-3/2");
        assert!(q.parse_elem("1/0").is_err());
    }

    #[test]
    fn reduction() {
        let q = RationalField;
        let a = q.parse_elem("-3/2").unwrap();
        // -3 * 2^{-1} mod 7 = -3 * 4 = -12 = 2
        assert_eq!(q.reduce(&a, 7), Some(2));
        assert_eq!(q.reduce(&q.parse_elem("1/7").unwrap(), 7), None);
        assert!(a.is_negative());
    }
}
