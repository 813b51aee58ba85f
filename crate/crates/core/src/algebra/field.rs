use std::fmt;

use num_bigint::BigUint;
use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Serializable description of a coefficient field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldDescriptor {
    #[serde(rename = "QQ")]
    Rational,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
    /// `modulus` lists the coefficients of the monic minimal polynomial,
    /// lowest degree first, as base-field strings.
    #[serde(rename = "Fq")]
    Extension {
        p: u64,
        k: usize,
        base: Box<FieldDescriptor>,
        modulus: Vec<String>,
    },
    #[serde(rename = "CC")]
    Complex { eps: f64 },
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "QQ"),
            FieldDescriptor::Prime { p } => write!(f, "GF({p})"),
            FieldDescriptor::Extension { base, modulus, .. } => {
                write!(f, "{base}[z]/(")?;
                for (i, c) in modulus.iter().enumerate().rev() {
                    if c == "0" {
                        continue;
                    }
                    match i {
                        0 => write!(f, "{c}")?,
                        1 => write!(f, "{c}*z + ")?,
                        _ => write!(f, "{c}*z^{i} + ")?,
                    }
                }
                write!(f, ")")
            }
            FieldDescriptor::Complex { eps } => write!(f, "CC(eps={eps:e})"),
        }
    }
}

/// A coefficient field in context-passing style: the field value carries
/// runtime parameters (modulus, minimal polynomial, tolerance) and all
/// element arithmetic goes through it.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn characteristic(&self) -> u64;
    fn descriptor(&self) -> FieldDescriptor;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn is_exact(&self) -> bool {
        true
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, &self.one()))
    }

    fn elem_eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn random_nonzero(&self, rng: &mut dyn RngCore) -> Self::Elem {
        loop {
            let x = self.random_elem(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// A finite field of odd characteristic.
pub trait FiniteField: Field {
    fn prime(&self) -> u64;
    /// Degree over the prime field.
    fn ext_degree(&self) -> usize;
    /// Canonical integer coordinates over the prime field.
    fn coords(&self, a: &Self::Elem) -> Vec<u64>;

    fn order(&self) -> BigUint {
        BigUint::from(self.prime()).pow(self.ext_degree() as u32)
    }

    /// The unique `a` with `a^p = x`.
    fn pth_root(&self, x: &Self::Elem) -> Self::Elem {
        let k = self.ext_degree();
        if k == 1 {
            return x.clone();
        }
        let e = BigUint::from(self.prime()).pow(k as u32 - 1);
        self.pow_big(x, &e)
    }
}

/// Fields whose elements can be reduced into a prime field, used to hand
/// exact data to the Gröbner engine.
pub trait PrimeReduction: Field {
    /// Prime used when the field itself has characteristic zero.
    fn working_prime(&self) -> u64;
    fn reduce(&self, a: &Self::Elem, p: u64) -> Option<u64>;
}
