use std::sync::Arc;

use rand::RngCore;

use super::factor::is_irreducible;
use super::field::{FiniteField, Field, FieldDescriptor};
use super::univariate as up;
use crate::error::{Error, Result};

/// A finite extension `B[z]/(m(z))` of a finite field `B`, with `m` monic
/// irreducible of degree k. Elements are coefficient vectors of length k in
/// the power basis 1, z, …, z^(k−1).
#[derive(Debug, Clone, PartialEq)]
pub struct ExtField<B: FiniteField> {
    base: B,
    modulus: Arc<Vec<B::Elem>>,
}

impl<B: FiniteField> ExtField<B> {
    /// Builds the extension, verifying that `modulus` (lowest degree first)
    /// is monic and irreducible over `base`.
    pub fn new(base: B, modulus: Vec<B::Elem>) -> Result<Self> {
        let modulus = up::trim(&base, modulus);
        let Some(k) = up::degree::<B>(&modulus) else {
            return Err(Error::InvalidField("zero minimal polynomial".into()));
        };
        if k == 0 || !base.is_one(&modulus[k]) {
            return Err(Error::InvalidField("minimal polynomial must be monic of positive degree".into()));
        }
        if !is_irreducible(&base, &modulus) {
            return Err(Error::InvalidField("minimal polynomial is reducible".into()));
        }
        Ok(ExtField { base, modulus: Arc::new(modulus) })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[B::Elem] {
        &self.modulus
    }

    /// The class of z.
    pub fn generator(&self) -> Vec<B::Elem> {
        self.embed_poly(&[self.base.zero(), self.base.one()])
    }

    pub fn embed(&self, a: &B::Elem) -> Vec<B::Elem> {
        self.embed_poly(std::slice::from_ref(a))
    }

    fn embed_poly(&self, a: &[B::Elem]) -> Vec<B::Elem> {
        let r = up::rem(&self.base, a, &self.modulus);
        self.pad(r)
    }

    fn pad(&self, mut a: Vec<B::Elem>) -> Vec<B::Elem> {
        a.resize(self.degree(), self.base.zero());
        a
    }

    /// Components over the base field (the power-basis coordinates).
    pub fn components<'a>(&self, a: &'a [B::Elem]) -> &'a [B::Elem] {
        a
    }

    /// Base-field value if the element lies in the base field.
    pub fn as_base(&self, a: &[B::Elem]) -> Option<B::Elem> {
        a.iter()
            .skip(1)
            .all(|c| self.base.is_zero(c))
            .then(|| a[0].clone())
    }

    /// Frobenius a ↦ a^|B|.
    pub fn frobenius(&self, a: &[B::Elem]) -> Vec<B::Elem> {
        self.pow_big(&a.to_vec(), &self.base.order())
    }
}

impl<B: FiniteField> Field for ExtField<B> {
    type Elem = Vec<B::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.degree()]
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_i64(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let prod = up::mul(&self.base, &up::trim(&self.base, a.clone()), &up::trim(&self.base, b.clone()));
        self.pad(up::rem(&self.base, &prod, &self.modulus))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let a = up::trim(&self.base, a.clone());
        if a.is_empty() {
            return None;
        }
        let (g, s) = up::gcd_ext(&self.base, &a, &self.modulus);
        debug_assert!(up::is_one(&self.base, &g));
        Some(self.pad(up::rem(&self.base, &s, &self.modulus)))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.is_zero(c))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Extension {
            p: self.prime(),
            k: self.degree(),
            base: Box::new(self.base.descriptor()),
            modulus: self.modulus.iter().map(|c| self.base.format_elem(c)).collect(),
        }
    }
    /// Accepts `[c0, c1, …]` (power-basis coordinates) or a bare base-field
    /// element.
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coeffs = inner
                .split(',')
                .filter(|c| !c.trim().is_empty())
                .map(|c| self.base.parse_elem(c))
                .collect::<Result<Vec<_>>>()?;
            if coeffs.len() > self.degree() {
                return Err(Error::Parse(format!("too many coordinates in {t:?}")));
            }
            return Ok(self.pad(coeffs));
        }
        Ok(self.embed(&self.base.parse_elem(t)?))
    }
    fn format_elem(&self, a: &Self::Elem) -> String {
        match self.as_base(a) {
            Some(c) => self.base.format_elem(&c),
            None => {
                let parts: Vec<String> = a.iter().map(|c| self.base.format_elem(c)).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (0..self.degree()).map(|_| self.base.random_elem(rng)).collect()
    }
}

impl<B: FiniteField> FiniteField for ExtField<B> {
    fn prime(&self) -> u64 {
        self.base.prime()
    }
    fn ext_degree(&self) -> usize {
        self.base.ext_degree() * self.degree()
    }
    fn coords(&self, a: &Self::Elem) -> Vec<u64> {
        a.iter().flat_map(|c| self.base.coords(c)).collect()
    }
}
