use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::binary::BinaryForm;
use super::field::Field;
use super::linalg;
use crate::error::{Error, Result};

/// Dense exponent vector, ordered by graded reverse lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    /// Multiply the first operand by the second, which must be a constant.
    ScalarMul,
}

/// Sparse multivariate polynomial over `K`. Zero coefficients are never
/// stored; terms are kept sorted in grevlex order.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<K: Field> {
    field: K,
    nvars: usize,
    terms: BTreeMap<Monomial, K::Elem>,
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(field: K, nvars: usize) -> Self {
        MultiPoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: K, nvars: usize, c: K::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(field: K, nvars: usize) -> Self {
        let one = field.one();
        Self::constant(field, nvars, one)
    }

    pub fn var(field: K, nvars: usize, i: usize) -> Self {
        let one = field.one();
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::var(nvars, i), one);
        p
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(field: K, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, K::Elem)>,
    {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VarCountMismatch(e.len(), nvars));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// Linear form Σ cᵢ xᵢ.
    pub fn linear(field: K, coeffs: &[K::Elem]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: K::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.field.add(old, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K::Elem)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn coeff(&self, exp: &[u32]) -> K::Elem {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> K::Elem {
        self.coeff(&vec![0; self.nvars])
    }

    /// Largest term in grevlex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &K::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms, or `None` for the zero polynomial or a
    /// non-homogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[v]).max()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::BackendMismatch(
                self.field.descriptor().to_string(),
                other.field.descriptor().to_string(),
            ));
        }
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.field.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        if self.field.is_zero(c) {
            return out;
        }
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.field.mul(a, c));
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &K::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.mul(mono), self.field.mul(a, c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so that the grevlex-leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.nvars {
            return Err(Error::VarIndex { index: i, nvars: self.nvars });
        }
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, self.field.mul(c, &self.field.from_i64(e as i64)));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Matrix of second partial derivatives.
    pub fn hessian_matrix(&self) -> Vec<Vec<Self>> {
        let g = self.gradient();
        g.iter().map(|gi| gi.gradient()).collect()
    }

    pub fn eval(&self, x: &[K::Elem]) -> Result<K::Elem> {
        if x.len() != self.nvars {
            return Err(Error::VarCountMismatch(x.len(), self.nvars));
        }
        let k = &self.field;
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(&m.0) {
                if e > 0 {
                    t = k.mul(&t, &k.pow(xi, e as u64));
                }
            }
            acc = k.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes `subs[i]` for xᵢ. All substitutes share a ring, which
    /// becomes the ring of the result.
    pub fn compose(&self, subs: &[MultiPoly<K>]) -> Result<MultiPoly<K>> {
        if subs.len() != self.nvars {
            return Err(Error::VarCountMismatch(subs.len(), self.nvars));
        }
        let target_vars = subs.first().map_or(0, |s| s.nvars);
        if let Some(s) = subs.iter().find(|s| s.nvars != target_vars) {
            return Err(Error::VarCountMismatch(s.nvars, target_vars));
        }
        let one = MultiPoly::one(self.field.clone(), target_vars);
        let mut powers: Vec<Vec<MultiPoly<K>>> = vec![vec![one.clone()]; self.nvars];
        let mut out = MultiPoly::zero(self.field.clone(), target_vars);
        for (m, c) in &self.terms {
            let mut t = one.scale(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().checked_mul(&subs[i])?;
                    powers[i].push(next);
                }
                t = t.checked_mul(&powers[i][e as usize])?;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// `p(A·y)`: substitutes xᵢ = Σⱼ A[i][j] yⱼ.
    pub fn substitute_linear(&self, a: &[Vec<K::Elem>]) -> Result<MultiPoly<K>> {
        let subs: Vec<MultiPoly<K>> = a
            .iter()
            .map(|row| MultiPoly::linear(self.field.clone(), row))
            .collect();
        self.compose(&subs)
    }

    /// `p(s·base + t·dir)` as a binary form of degree deg p.
    pub fn restrict_to_line(&self, base: &[K::Elem], dir: &[K::Elem]) -> Result<BinaryForm<K>> {
        if base.len() != self.nvars || dir.len() != self.nvars {
            return Err(Error::VarCountMismatch(base.len().max(dir.len()), self.nvars));
        }
        if linalg::rank(&self.field, &[base.to_vec(), dir.to_vec()]) < 2 {
            return Err(Error::CoincidentPoints);
        }
        let d = match self.homogeneous_degree() {
            Some(d) => d as usize,
            None if self.is_zero() => 0,
            None => return Err(Error::NonHomogeneous),
        };
        let subs: Vec<MultiPoly<K>> = base
            .iter()
            .zip(dir)
            .map(|(b, v)| MultiPoly::linear(self.field.clone(), &[b.clone(), v.clone()]))
            .collect();
        let r = self.compose(&subs)?;
        let mut coeffs = vec![self.field.zero(); d + 1];
        for (m, c) in r.terms() {
            coeffs[m.0[1] as usize] = c.clone();
        }
        Ok(BinaryForm::new(self.field.clone(), coeffs))
    }

    /// Sets xᵢ = c, keeping the variable count.
    pub fn specialize(&self, i: usize, c: &K::Elem) -> Self {
        let k = &self.field;
        let mut out = Self::zero(k.clone(), self.nvars);
        for (m, a) in &self.terms {
            let e = m.0[i];
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out.add_term(m2, k.mul(a, &k.pow(c, e as u64)));
        }
        out
    }

    /// Coefficients with respect to xᵥ: entry j is the coefficient of xᵥʲ,
    /// a polynomial free of xᵥ.
    pub fn coefficients_in(&self, v: usize) -> Vec<Self> {
        let d = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.field.clone(), self.nvars); d + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let j = m.0[v] as usize;
            let mut m2 = m.clone();
            m2.0[v] = 0;
            out[j].add_term(m2, c.clone());
        }
        out
    }

    /// Drops or permutes variables: variable i of `self` becomes variable
    /// `map[i]` of the result, which has `nvars` variables. Variables
    /// mapped to `None` must not occur.
    pub fn remap_vars(&self, nvars: usize, map: &[Option<usize>]) -> Result<Self> {
        let mut out = Self::zero(self.field.clone(), nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &ei) in m.0.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] += ei,
                    None => return Err(Error::Dimension(format!("variable x{i} occurs but is dropped"))),
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    pub fn map_field<L: Field>(&self, target: L, f: impl Fn(&K::Elem) -> L::Elem) -> MultiPoly<L> {
        let mut out = MultiPoly::zero(target, self.nvars);
        for (m, c) in &self.terms {
            let v = f(c);
            out.add_term(m.clone(), v);
        }
        out
    }

    /// Fallible coefficient map, e.g. reduction modulo a prime.
    pub fn try_map_field<L: Field>(
        &self,
        target: L,
        f: impl Fn(&K::Elem) -> Result<L::Elem>,
    ) -> Result<MultiPoly<L>> {
        let mut out = MultiPoly::zero(target, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading_term()?;
        let lc_inv = self.field.inv(lc)?;
        let mut r = self.clone();
        let mut q = Self::zero(self.field.clone(), self.nvars);
        while let Some((m, c)) = r.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = self.field.mul(c, &lc_inv);
            r = &r - &d.mul_monomial(&qm, &qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Multivariate division: returns quotients and the remainder, with
    /// no term of the remainder divisible by any leading monomial.
    pub fn divrem(&self, divisors: &[Self]) -> (Vec<Self>, Self) {
        let mut q: Vec<Self> = divisors.iter().map(|_| Self::zero(self.field.clone(), self.nvars)).collect();
        let mut rem = Self::zero(self.field.clone(), self.nvars);
        let mut p = self.clone();
        'outer: while let Some((m, c)) = p.leading_term() {
            let (m, c) = (m.clone(), c.clone());
            for (i, d) in divisors.iter().enumerate() {
                let Some((lm, lc)) = d.leading_term() else { continue };
                if lm.divides(&m) {
                    let qm = lm.quotient_of(&m);
                    let qc = self.field.div(&c, lc).expect("nonzero leading coefficient");
                    p = &p - &d.mul_monomial(&qm, &qc);
                    q[i].add_term(qm, qc);
                    continue 'outer;
                }
            }
            p.terms.remove(&m);
            rem.add_term(m, c);
        }
        (q, rem)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut cs = self.field.format_elem(c);
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            let complex = cs.contains(['+', ' ', '[']) || cs[1..].contains('-');
            if vars.is_empty() {
                out.push_str(&cs);
            } else {
                if cs != "1" {
                    if complex {
                        out.push_str(&format!("({cs})*"));
                    } else {
                        out.push_str(&cs);
                        out.push('*');
                    }
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

impl<K: Field> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&Self::default_names(self.nvars)))
    }
}

/// Checked arithmetic entry point.
pub fn poly_arith<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>, op: ArithOp) -> Result<MultiPoly<K>> {
    match op {
        ArithOp::Add => p.checked_add(q),
        ArithOp::Sub => p.checked_sub(q),
        ArithOp::Mul => p.checked_mul(q),
        ArithOp::ScalarMul => {
            p.check_compatible(q)?;
            if !q.is_constant() {
                return Err(Error::Dimension("scalar operand is not constant".into()));
            }
            Ok(p.scale(&q.constant_term()))
        }
    }
}

impl<K: Field> Add for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn add(self, rhs: Self) -> MultiPoly<K> {
        self.checked_add(rhs).expect("incompatible polynomial rings")
    }
}

impl<K: Field> Sub for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn sub(self, rhs: Self) -> MultiPoly<K> {
        self.checked_sub(rhs).expect("incompatible polynomial rings")
    }
}

impl<K: Field> Mul for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn mul(self, rhs: Self) -> MultiPoly<K> {
        self.checked_mul(rhs).expect("incompatible polynomial rings")
    }
}

impl<K: Field> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        self.scale(&self.field.neg(&self.field.one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, RationalField};

    fn klein() -> MultiPoly<RationalField> {
        let one = num_rational::BigRational::from_integer(1.into());
        let exps = [
            [2, 1, 0, 0, 0],
            [0, 2, 1, 0, 0],
            [0, 0, 2, 1, 0],
            [0, 0, 0, 2, 1],
            [1, 0, 0, 0, 2],
        ];
        MultiPoly::from_terms(RationalField, 5, exps.iter().map(|e| (e.to_vec(), one.clone()))).unwrap()
    }

    #[test]
    fn grevlex_order() {
        let a = Monomial(vec![1, 0, 1]);
        let b = Monomial(vec![0, 2, 0]);
        let c = Monomial(vec![2, 0, 0]);
        assert!(c > b && b > a);
        assert!(Monomial(vec![0, 0, 3]) > Monomial(vec![1, 0, 0]));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let k = RationalField;
        let x0 = MultiPoly::var(k, 2, 0);
        let x1 = MultiPoly::var(k, 2, 1);
        let s = &(&x0 + &x1) + &(-&x1);
        assert_eq!(s, x0);
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn square_over_f5() {
        let k = PrimeField::new(5).unwrap();
        let x0 = MultiPoly::var(k, 5, 0);
        let sq = &x0 * &x0;
        assert_eq!(sq.coeff(&[2, 0, 0, 0, 0]), 1);
        assert_eq!(sq.num_terms(), 1);
    }

    #[test]
    fn klein_partials() {
        let f = klein();
        let d0 = f.partial_derivative(0).unwrap();
        assert_eq!(d0.to_string(), "2*x0*x1 + x4^2");
        let d1 = f.partial_derivative(1).unwrap();
        assert_eq!(d1.to_string(), "x0^2 + 2*x1*x2");
        assert!(f.partial_derivative(5).is_err());
        let x0 = MultiPoly::var(RationalField, 5, 0);
        assert!(x0.pow(3).partial_derivative(2).unwrap().is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = MultiPoly::var(RationalField, 2, 0);
        let b = MultiPoly::var(RationalField, 3, 0);
        assert!(matches!(poly_arith(&a, &b, ArithOp::Add), Err(Error::VarCountMismatch(2, 3))));
        let f5 = MultiPoly::var(PrimeField::new(5).unwrap(), 2, 0);
        let f7 = MultiPoly::var(PrimeField::new(7).unwrap(), 2, 0);
        assert!(matches!(poly_arith(&f5, &f7, ArithOp::Mul), Err(Error::BackendMismatch(..))));
    }

    #[test]
    fn identity_scalar() {
        let f = klein();
        let one = MultiPoly::one(RationalField, 5);
        assert_eq!(poly_arith(&f, &one, ArithOp::ScalarMul).unwrap(), f);
        assert_eq!(poly_arith(&f, &one, ArithOp::Mul).unwrap(), f);
    }

    #[test]
    fn restriction_examples() {
        let k = RationalField;
        let e = |i: usize| -> Vec<num_rational::BigRational> {
            (0..5).map(|j| num_rational::BigRational::from_integer(((i == j) as i64).into())).collect()
        };
        let f = klein();
        assert!(f.restrict_to_line(&e(0), &e(2)).unwrap().is_zero());
        let x0 = MultiPoly::var(k, 5, 0);
        let r = x0.restrict_to_line(&e(0), &e(1)).unwrap();
        assert_eq!(r.degree(), 1);
        assert_eq!(r.coeffs()[0], k.one());
        assert!(k.is_zero(&r.coeffs()[1]));
        let x4 = MultiPoly::var(k, 5, 4);
        assert!(x4.pow(2).restrict_to_line(&e(0), &e(1)).unwrap().is_zero());
        assert_eq!(x0.restrict_to_line(&e(0), &e(0)), Err(Error::CoincidentPoints));
    }

    #[test]
    fn exact_division() {
        let k = PrimeField::new(101).unwrap();
        let x = MultiPoly::var(k, 3, 0);
        let y = MultiPoly::var(k, 3, 1);
        let z = MultiPoly::var(k, 3, 2);
        let a = &(&x + &y) * &(&y - &z);
        let b = &a * &(&x * &z);
        assert_eq!(b.exact_div(&a).unwrap(), &x * &z);
        assert!(b.exact_div(&(&x + &z)).is_none());
    }
}
