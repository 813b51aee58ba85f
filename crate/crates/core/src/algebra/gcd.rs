//! Multivariate gcd by recursive primitive polynomial remainder sequences,
//! and resultants via Sylvester determinants.

use super::det::det_poly_matrix;
use super::field::Field;
use super::multipoly::{Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Greatest common divisor normalized to grevlex-leading coefficient 1.
/// `gcd(p, 0) = p` normalized; coprime inputs give 1.
pub fn poly_gcd<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> Result<MultiPoly<K>> {
    if !p.field().is_exact() {
        return Err(Error::InexactBackend);
    }
    if p.field() != q.field() {
        return Err(Error::BackendMismatch(
            p.field().descriptor().to_string(),
            q.field().descriptor().to_string(),
        ));
    }
    if p.nvars() != q.nvars() {
        return Err(Error::VarCountMismatch(p.nvars(), q.nvars()));
    }
    Ok(gcd_rec(p, q).monic())
}

fn main_var<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> Option<usize> {
    (0..p.nvars())
        .rev()
        .find(|&v| p.degree_in(v).unwrap_or(0) > 0 || q.degree_in(v).unwrap_or(0) > 0)
}

fn gcd_rec<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> MultiPoly<K> {
    if q.is_zero() {
        return p.clone();
    }
    if p.is_zero() {
        return q.clone();
    }
    let Some(v) = main_var(p, q) else {
        return MultiPoly::one(p.field().clone(), p.nvars());
    };
    let (cp, pp) = content_and_primitive(p, v);
    let (cq, pq) = content_and_primitive(q, v);
    let c = gcd_rec(&cp, &cq);
    let (mut a, mut b) = if pp.degree_in(v) >= pq.degree_in(v) { (pp, pq) } else { (pq, pp) };
    while !b.is_zero() {
        if b.degree_in(v) == Some(0) {
            return c;
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { content_and_primitive(&r, v).1 };
    }
    &c * &a
}

/// Content (gcd of the coefficients in xᵥ) and primitive part.
fn content_and_primitive<K: Field>(p: &MultiPoly<K>, v: usize) -> (MultiPoly<K>, MultiPoly<K>) {
    let coeffs = p.coefficients_in(v);
    let mut c = MultiPoly::zero(p.field().clone(), p.nvars());
    for a in coeffs.iter().rev() {
        if c.is_constant() && !c.is_zero() {
            break;
        }
        c = gcd_rec(&c, a);
    }
    if c.is_constant() {
        c = MultiPoly::one(p.field().clone(), p.nvars());
    } else {
        c = c.monic();
    }
    let pp = p.exact_div(&c).expect("content divides");
    (c, pp)
}

/// Pseudo-remainder of a by b with respect to xᵥ.
fn pseudo_rem<K: Field>(a: &MultiPoly<K>, b: &MultiPoly<K>, v: usize) -> MultiPoly<K> {
    let db = b.degree_in(v).unwrap();
    let lcb = b.coefficients_in(v).pop().unwrap();
    let mut r = a.clone();
    let one = r.field().one();
    while let Some(dr) = r.degree_in(v) {
        if dr < db || r.is_zero() {
            break;
        }
        let lcr = r.coefficients_in(v).pop().unwrap();
        let mut shift = Monomial::one(a.nvars());
        shift.0[v] = dr - db;
        let t = (&lcr * b).mul_monomial(&shift, &one);
        r = &(&lcb * &r) - &t;
    }
    r
}

/// Resultant of p and q with respect to xᵥ via the Sylvester matrix.
pub fn resultant<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>, v: usize) -> Result<MultiPoly<K>> {
    if v >= p.nvars() {
        return Err(Error::VarIndex { index: v, nvars: p.nvars() });
    }
    if p.nvars() != q.nvars() {
        return Err(Error::VarCountMismatch(p.nvars(), q.nvars()));
    }
    let field = p.field().clone();
    let n = p.nvars();
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero(field, n));
    }
    let a = p.coefficients_in(v);
    let b = q.coefficients_in(v);
    let (m, l) = (a.len() - 1, b.len() - 1);
    if m + l == 0 {
        return Ok(MultiPoly::one(field, n));
    }
    let size = m + l;
    let zero = MultiPoly::zero(field, n);
    let mut rows = Vec::with_capacity(size);
    for i in 0..l {
        let mut row = vec![zero.clone(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det_poly_matrix(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, RationalField};

    #[test]
    fn gcd_examples() {
        let k = RationalField;
        let x0 = MultiPoly::var(k, 5, 0);
        let x1 = MultiPoly::var(k, 5, 1);
        assert_eq!(poly_gcd(&(&x0 * &x0), &(&x0 * &x1)).unwrap(), x0);
        let a2 = MultiPoly::var(k, 5, 2);
        let a3 = MultiPoly::var(k, 5, 3);
        let a4 = MultiPoly::var(k, 5, 4);
        let q = &a4 * &a4;
        let c = &(&(&a2 * &a2) * &a3) + &(&(&a3 * &a3) * &a4);
        assert!(poly_gcd(&q, &c).unwrap().is_constant());
        let p = &(&x0 + &x1).scale(&num_rational::BigRational::from_integer(3.into())) * &x1;
        let z = MultiPoly::zero(k, 5);
        assert_eq!(poly_gcd(&p, &z).unwrap(), p.monic());
    }

    #[test]
    fn gcd_finds_common_factor() {
        let k = PrimeField::new(32003).unwrap();
        let x = MultiPoly::var(k, 3, 0);
        let y = MultiPoly::var(k, 3, 1);
        let z = MultiPoly::var(k, 3, 2);
        let common = &(&(&x * &y) + &(&z * &z)) + &x;
        let a = &common * &(&(&x * &x) - &y);
        let b = &common * &(&(&y * &z) + &x.scale(&5));
        assert_eq!(poly_gcd(&a, &b).unwrap(), common.monic());
    }

    #[test]
    fn resultant_detects_common_root() {
        let k = RationalField;
        let x = MultiPoly::var(k, 2, 0);
        let y = MultiPoly::var(k, 2, 1);
        // x^2 - y^2 and x - y share x = y, so Res_x vanishes identically
        let r = resultant(&(&(&x * &x) - &(&y * &y)), &(&x - &y), 0).unwrap();
        assert!(r.is_zero());
        // Res_x(x^2 + y^2, x - 2y) = 5y^2
        let r = resultant(&(&(&x * &x) + &(&y * &y)), &(&x - &y.scale(&num_rational::BigRational::from_integer(2.into()))), 0).unwrap();
        assert_eq!(r, (&y * &y).scale(&num_rational::BigRational::from_integer(5.into())));
    }
}
