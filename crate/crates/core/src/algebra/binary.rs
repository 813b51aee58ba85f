use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::complex::{roots_with_multiplicity, ComplexField};
use super::factor;
use super::field::{Field, FiniteField};
use super::multipoly::MultiPoly;
use super::univariate as up;
use crate::error::{Error, Result};

/// Binary form of degree d in (s, t); `coeffs[i]` is the coefficient of
/// s^(d−i) t^i. The zero form keeps its nominal degree.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<K: Field> {
    field: K,
    coeffs: Vec<K::Elem>,
}

impl<K: Field> BinaryForm<K> {
    pub fn new(field: K, coeffs: Vec<K::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { field, coeffs }
    }

    pub fn zero(field: K, degree: usize) -> Self {
        let coeffs = vec![field.zero(); degree + 1];
        BinaryForm { field, coeffs }
    }

    /// The linear form a·s + b·t.
    pub fn linear(field: K, a: K::Elem, b: K::Elem) -> Self {
        BinaryForm { field, coeffs: vec![a, b] }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn eval(&self, s: &K::Elem, t: &K::Elem) -> K::Elem {
        let k = &self.field;
        let d = self.degree() as u64;
        self.coeffs.iter().enumerate().fold(k.zero(), |acc, (i, c)| {
            let i = i as u64;
            k.add(&acc, &k.mul(c, &k.mul(&k.pow(s, d - i), &k.pow(t, i))))
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        BinaryForm::new(k.clone(), out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BinaryForm::new(self.field.clone(), vec![self.field.one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Dimension(format!(
                "adding forms of degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        let k = &self.field;
        Ok(BinaryForm::new(
            k.clone(),
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| k.add(a, b)).collect(),
        ))
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        BinaryForm::new(self.field.clone(), self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    /// Number of leading zero coefficients, i.e. the power of t dividing
    /// the form. `None` for the zero form.
    pub fn t_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    /// The polynomial f(s, 1), lowest degree first.
    pub fn dehomogenize(&self) -> up::UPoly<K> {
        up::trim(&self.field, self.coeffs.iter().rev().cloned().collect())
    }

    /// Homogenizes a univariate polynomial in s to a form of degree `d`.
    pub fn from_dehomogenized(field: K, g: &[K::Elem], d: usize) -> Self {
        let mut coeffs = vec![field.zero(); d + 1];
        for (m, c) in g.iter().enumerate() {
            coeffs[d - m] = c.clone();
        }
        BinaryForm { field, coeffs }
    }

    /// Scales so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.t_valuation() {
            None => self.clone(),
            Some(i) => {
                let inv = self.field.inv(&self.coeffs[i]).expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Proportionality test (both forms of the same degree).
    pub fn proportional(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.normalized().coeffs == other.normalized().coeffs
    }

    /// Greatest common divisor, normalized; `gcd(f, 0) = f`.
    pub fn gcd(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.normalized();
        }
        if self.is_zero() {
            return other.normalized();
        }
        let k = &self.field;
        let j = self.t_valuation().unwrap().min(other.t_valuation().unwrap());
        let g = up::gcd(k, &self.dehomogenize(), &other.dehomogenize());
        let dg = up::degree::<K>(&g).unwrap_or(0);
        BinaryForm::from_dehomogenized(k.clone(), &g, dg + j).normalized()
    }

    /// The form as a polynomial in two variables (s, t).
    pub fn to_multipoly(&self) -> MultiPoly<K> {
        let d = self.degree() as u32;
        MultiPoly::from_terms(
            self.field.clone(),
            2,
            self.coeffs.iter().enumerate().map(|(i, c)| (vec![d - i as u32, i as u32], c.clone())),
        )
        .expect("two variables")
    }
}

impl<K: FiniteField> BinaryForm<K> {
    /// Factors into irreducible forms with multiplicities. Factors are
    /// monic in s, except the linear factor t, which is listed last.
    /// Deterministic for a given seed.
    pub fn factor(&self, seed: u64) -> Result<Vec<(BinaryForm<K>, usize)>> {
        let Some(j) = self.t_valuation() else {
            return Err(Error::ZeroForm);
        };
        let k = &self.field;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out: Vec<(BinaryForm<K>, usize)> = factor::factor(k, &self.dehomogenize(), &mut rng)
            .into_iter()
            .map(|(g, m)| {
                let d = g.len() - 1;
                (BinaryForm::from_dehomogenized(k.clone(), &g, d), m)
            })
            .collect();
        if j > 0 {
            out.push((BinaryForm::linear(k.clone(), k.zero(), k.one()), j));
        }
        Ok(out)
    }
}

impl BinaryForm<ComplexField> {
    /// Projective roots [s : t] with multiplicities, to the field tolerance.
    pub fn complex_roots(&self) -> Result<Vec<((Complex64, Complex64), usize)>> {
        let Some(j) = self.t_valuation() else {
            return Err(Error::ZeroForm);
        };
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let mut out: Vec<((Complex64, Complex64), usize)> = roots_with_multiplicity(&self.dehomogenize(), self.field.eps)
            .into_iter()
            .map(|(r, m)| ((r, one), m))
            .collect();
        if j > 0 {
            out.push(((one, zero), j));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn form(p: u64, c: &[u64]) -> BinaryForm<PrimeField> {
        BinaryForm::new(PrimeField::new(p).unwrap(), c.to_vec())
    }

    #[test]
    fn factor_s2t_over_f7() {
        let f = form(7, &[0, 1, 0, 0]);
        let fs = f.factor(0).unwrap();
        assert_eq!(fs, vec![(form(7, &[1, 0]), 2), (form(7, &[0, 1]), 1)]);
    }

    #[test]
    fn factor_sum_of_squares_mod_5() {
        let f = form(5, &[1, 0, 1]);
        let fs = f.factor(0).unwrap();
        assert_eq!(fs, vec![(form(5, &[1, 2]), 1), (form(5, &[1, 3]), 1)]);
    }

    #[test]
    fn irreducible_quadratic_mod_5() {
        let f = form(5, &[1, 1, 1]);
        assert_eq!(f.factor(9).unwrap(), vec![(f.clone(), 1)]);
        assert_eq!(form(5, &[0, 0]).factor(0), Err(Error::ZeroForm));
    }

    #[test]
    fn gcd_of_forms() {
        // s t^2 and s^2 t share s t
        let a = form(7, &[0, 1, 0, 0]);
        let b = form(7, &[0, 0, 1, 0]);
        let g = a.gcd(&b);
        assert_eq!(g, form(7, &[0, 1, 0]));
    }

    #[test]
    fn complex_roots_of_st_times_s_plus_t() {
        let c = ComplexField::default();
        let z = |x: f64| Complex64::new(x, 0.0);
        // s t (s + t) = s^2 t + s t^2
        let f = BinaryForm::new(c, vec![z(0.0), z(1.0), z(1.0), z(0.0)]);
        let roots = f.complex_roots().unwrap();
        let total: usize = roots.iter().map(|r| r.1).sum();
        assert_eq!(total, 3);
    }
}
