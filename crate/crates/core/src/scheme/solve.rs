//! Zero-dimensional affine ideals: quotient algebras, minimal polynomials
//! and rational points.

use std::collections::HashMap;

use rand::RngCore;

use super::groebner::normal_form;
use super::ideal::PolyIdeal;
use super::mono::Mono;
use super::poly::{Poly, Ring};
use crate::algebra::factor;
use crate::algebra::linalg;
use crate::algebra::univariate as up;
use crate::algebra::{Field, PrimeField};
use crate::error::{Error, Result};

/// Monomials outside the leading-term ideal, or None when there are
/// infinitely many.
pub fn standard_monomials(ring: &Ring, gb: &[Poly]) -> Option<Vec<Mono>> {
    let lms: Vec<Mono> = gb.iter().map(|g| *g.lm()).collect();
    for v in 0..ring.nvars {
        if !lms.iter().any(|m| m.support_len() == 1 && m.exp(v) > 0) && !lms.iter().any(|m| m.deg() == 0) {
            return None;
        }
    }
    let mut out = Vec::new();
    let mut frontier = vec![Mono::ONE];
    while let Some(m) = frontier.pop() {
        if out.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        out.push(m);
        for v in 0..ring.nvars {
            frontier.push(m.mul(&Mono::var(v)));
        }
    }
    out.sort_by(|a, b| ring.cmp(a, b));
    Some(out)
}

/// Minimal polynomial (monic, constant term first) of multiplication by f
/// on the quotient algebra of a zero-dimensional ideal.
pub fn minimal_polynomial(ideal: &PolyIdeal, f: &Poly) -> Result<Vec<u64>> {
    let ring = *ideal.ring();
    let gb = ideal.gb()?;
    let basis = standard_monomials(&ring, gb).ok_or_else(|| Error::Dimension("ideal is not zero-dimensional".into()))?;
    let index: HashMap<Mono, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let k = ideal.field();
    let to_vec = |p: &Poly| {
        let mut v = vec![0u64; basis.len()];
        for (m, c) in &p.terms {
            v[index[m]] = *c;
        }
        v
    };
    let mut power = normal_form(&ring, gb, &Poly::constant(1));
    let mut cols: Vec<Vec<u64>> = Vec::new();
    loop {
        cols.push(to_vec(&power));
        // a relation Σ cᵢ fⁱ = 0 is a kernel vector of the matrix with columns fⁱ
        let rows = linalg::transpose::<PrimeField>(&cols);
        let kernel = linalg::nullspace(&k, &rows, cols.len());
        if let Some(rel) = kernel.into_iter().next() {
            return Ok(up::monic(&k, &rel));
        }
        power = normal_form(&ring, gb, &power.mul(&ring, f));
    }
}

/// Distinct roots in 𝔽ₚ of a univariate polynomial (constant term first).
pub fn rational_roots(k: &PrimeField, f: &[u64], rng: &mut dyn RngCore) -> Vec<u64> {
    let f = up::trim(k, f.to_vec());
    if up::degree::<PrimeField>(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut roots: Vec<u64> = factor::factor(k, &f, rng)
        .into_iter()
        .filter(|(g, _)| g.len() == 2)
        .map(|(g, _)| k.neg(&k.div(&g[0], &g[1]).expect("nonzero leading coefficient")))
        .collect();
    roots.sort_unstable();
    roots
}

/// Up to `limit` 𝔽ₚ-rational points of a zero-dimensional affine ideal.
pub fn rational_points(ideal: &PolyIdeal, limit: usize, rng: &mut dyn RngCore) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    points_rec(ideal, 0, &mut Vec::new(), limit, rng, &mut out)?;
    Ok(out)
}

fn points_rec(
    ideal: &PolyIdeal,
    var: usize,
    prefix: &mut Vec<u64>,
    limit: usize,
    rng: &mut dyn RngCore,
    out: &mut Vec<Vec<u64>>,
) -> Result<()> {
    if out.len() >= limit || ideal.contains_one()? {
        return Ok(());
    }
    let ring = *ideal.ring();
    if var == ring.nvars {
        out.push(prefix.clone());
        return Ok(());
    }
    let mp = minimal_polynomial(ideal, &Poly::var(var))?;
    for r in rational_roots(&ideal.field(), &mp, rng) {
        let lin = Poly::var(var).sub(&ring, &Poly::constant(r));
        prefix.push(r);
        points_rec(&ideal.sum(&[lin]), var + 1, prefix, limit, rng, out)?;
        prefix.pop();
        if out.len() >= limit {
            break;
        }
    }
    Ok(())
}

/// Length and number of distinct geometric points of a zero-dimensional
/// affine ideal. The point count is the length of the radical, obtained by
/// adjoining the squarefree part of the minimal polynomial of every
/// variable; this needs p larger than the length.
pub fn length_and_distinct_points(ideal: &PolyIdeal) -> Result<(usize, usize)> {
    let ring = *ideal.ring();
    let len = standard_monomials(&ring, ideal.gb()?)
        .ok_or_else(|| Error::Dimension("ideal is not zero-dimensional".into()))?
        .len();
    if len as u64 >= ring.p {
        return Err(Error::InvalidField(format!("length {len} is not below the characteristic {}", ring.p)));
    }
    let k = ideal.field();
    let mut extra = Vec::new();
    for v in 0..ring.nvars {
        let mp = minimal_polynomial(ideal, &Poly::var(v))?;
        let g = up::gcd(&k, &mp, &up::derivative(&k, &mp));
        let sqfree = up::divrem(&k, &mp, &g).0;
        // Horner's rule keeps every intermediate result in normal form
        let mut r = Poly::zero();
        for c in sqfree.iter().rev() {
            r = normal_form(&ring, ideal.gb()?, &r.mul(&ring, &Poly::var(v))).add(&ring, &Poly::constant(*c));
        }
        let r = normal_form(&ring, ideal.gb()?, &r);
        if !r.is_zero() {
            extra.push(r);
        }
    }
    if extra.is_empty() {
        return Ok((len, len));
    }
    let mut gens = ideal.gb()?.to_vec();
    gens.extend(extra);
    let radical = PolyIdeal::from_polys(ring, gens);
    let distinct = standard_monomials(&ring, radical.gb()?).map_or(0, |b| b.len());
    Ok((len, distinct))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ideal(n: usize, gens: &[&str]) -> PolyIdeal {
        let k = PrimeField::new(101).unwrap();
        let g: Vec<_> = gens.iter().map(|s| parse_poly(k.clone(), n, s).unwrap()).collect();
        PolyIdeal::new(n, 101, &g).unwrap()
    }

    #[test]
    fn points_of_a_conic_and_line() {
        // x² + y² = 2, x = y → (1, 1), (−1, −1)
        let i = ideal(2, &["x0^2 + x1^2 - 2", "x0 - x1"]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let pts = rational_points(&i, 10, &mut rng).unwrap();
        assert_eq!(pts, vec![vec![1, 1], vec![100, 100]]);
        assert_eq!(length_and_distinct_points(&i).unwrap(), (2, 2));
    }

    #[test]
    fn non_reduced_point() {
        let i = ideal(2, &["x0^2", "x1"]);
        assert_eq!(length_and_distinct_points(&i).unwrap(), (2, 1));
        assert_eq!(minimal_polynomial(&i, &Poly::var(0)).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn irrational_points_are_skipped() {
        // x² = 2 has no root mod 101
        let i = ideal(1, &["x0^2 - 2"]);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert!(rational_points(&i, 10, &mut rng).unwrap().is_empty());
        assert_eq!(length_and_distinct_points(&i).unwrap(), (2, 2));
    }
}
