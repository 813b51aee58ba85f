use std::cmp::Ordering;

use super::mono::{Mono, MonoOrder, MAX_VARS};
use crate::algebra::prime::{inv_mod, pow_mod};
use crate::algebra::{Field, MultiPoly, PrimeField};
use crate::error::{Error, Result};

/// Polynomial ring 𝔽ₚ[x₀, …, xₙ₋₁] with a monomial order, p < 2³¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring {
    pub nvars: usize,
    pub p: u64,
    pub order: MonoOrder,
}

impl Ring {
    pub fn new(nvars: usize, p: u64, order: MonoOrder) -> Result<Ring> {
        if nvars > MAX_VARS {
            return Err(Error::Dimension(format!("at most {MAX_VARS} variables supported")));
        }
        PrimeField::new(p)?;
        if p >= 1 << 31 {
            return Err(Error::InvalidField("Gröbner engine needs p < 2^31".into()));
        }
        Ok(Ring { nvars, p, order })
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.p).expect("nonzero")
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.order.cmp(a, b)
    }
}

/// Sparse polynomial over 𝔽ₚ, terms sorted strictly decreasing in the
/// ring's order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: Vec<(Mono, u64)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: u64) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::ONE, c)] }
        }
    }

    pub fn var(i: usize) -> Poly {
        Poly { terms: vec![(Mono::var(i), 1)] }
    }

    /// Builds from unsorted terms, merging duplicates.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Mono, u64)>) -> Poly {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % ring.p;
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Poly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.deg() == 0
    }

    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> u64 {
        self.terms[0].1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.deg()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.deg() == w[1].0.deg())
    }

    pub fn monic(&self, ring: &Ring) -> Poly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        let inv = ring.inv(self.lc());
        self.scale(ring, inv)
    }

    pub fn scale(&self, ring: &Ring, c: u64) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, ring.mul(*a, c))).collect() }
    }

    /// c · m · self; order is preserved by monomial multiplication.
    pub fn mul_term(&self, ring: &Ring, m: &Mono, c: u64) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), ring.mul(*a, c))).collect() }
    }

    pub fn add(&self, ring: &Ring, o: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match ring.cmp(&self.terms[i].0, &o.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(o.terms[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.add(self.terms[i].1, o.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, ring: &Ring, o: &Poly) -> Poly {
        self.add(ring, &o.scale(ring, ring.p - 1))
    }

    pub fn mul(&self, ring: &Ring, o: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &o.terms {
            acc = acc.add(ring, &self.mul_term(ring, m, *c));
        }
        acc
    }

    /// Re-sorts after an order change.
    pub fn resort(&self, ring: &Ring) -> Poly {
        Poly::from_terms(ring, self.terms.clone())
    }

    pub fn from_multipoly(ring: &Ring, f: &MultiPoly<PrimeField>) -> Result<Poly> {
        if f.field().p() != ring.p {
            return Err(Error::BackendMismatch(f.field().descriptor().to_string(), format!("GF({})", ring.p)));
        }
        if f.nvars() != ring.nvars {
            return Err(Error::VarCountMismatch(f.nvars(), ring.nvars));
        }
        let terms = f
            .terms()
            .map(|(m, c)| Ok((Mono::from_exps(&m.0)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_terms(ring, terms))
    }

    pub fn to_multipoly(&self, ring: &Ring) -> MultiPoly<PrimeField> {
        let k = PrimeField::new(ring.p).expect("valid prime");
        MultiPoly::from_terms(k, ring.nvars, self.terms.iter().map(|(m, c)| (m.exps(ring.nvars), *c)))
            .expect("matching variable count")
    }

    /// Sets xᵢ = c.
    pub fn specialize(&self, ring: &Ring, i: usize, c: u64) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.with_exp(i, 0), ring.mul(*a, ring.pow(c, m.exp(i) as u64))))
            .collect();
        Poly::from_terms(ring, terms)
    }

    pub fn eval(&self, ring: &Ring, x: &[u64]) -> u64 {
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = *c;
            for (i, &xi) in x.iter().enumerate().take(ring.nvars) {
                let e = m.exp(i);
                if e > 0 {
                    t = ring.mul(t, ring.pow(xi, e as u64));
                }
            }
            acc = ring.add(acc, t);
        }
        acc
    }

    /// Substitutes xᵢ = Σⱼ a[i][j] yⱼ (a linear change of variables).
    pub fn linear_change(&self, ring: &Ring, a: &[Vec<u64>]) -> Poly {
        let lin: Vec<Poly> = a
            .iter()
            .map(|row| Poly::from_terms(ring, row.iter().enumerate().map(|(j, &c)| (Mono::var(j), c)).collect()))
            .collect();
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(*c);
            for (i, l) in lin.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = t.mul(ring, l);
                }
            }
            acc = acc.add(ring, &t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_sorted_and_cancels() {
        let r = Ring::new(3, 101, MonoOrder::Grevlex).unwrap();
        let x = Poly::var(0);
        let y = Poly::var(1);
        let s = x.add(&r, &y);
        let d = x.sub(&r, &y);
        let prod = s.mul(&r, &d);
        // x^2 - y^2
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.terms[0].0.exps(3), vec![2, 0, 0]);
        assert_eq!(prod.terms[1].1, 100);
        assert!(prod.sub(&r, &prod).is_zero());
    }
}
