//! Random cubics, points and lines over finite fields.

use rand::{Rng, RngCore};

use super::{is_smooth, line_type, lines_through_point, CubicThreefold, LineType};
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{BinaryForm, Field, FiniteField, MultiPoly, PrimeField};
use crate::error::{Error, Result};
use crate::projlin::PluckerLine;

fn exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in exponents(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// A form of degree d in n variables with uniformly random coefficients.
pub fn random_form<K: Field>(k: &K, n: usize, d: u32, rng: &mut dyn RngCore) -> MultiPoly<K> {
    MultiPoly::from_terms(k.clone(), n, exponents(n, d).into_iter().map(|e| (e, k.random_elem(rng))))
        .expect("consistent variable count")
}

pub fn random_invertible<K: Field>(k: &K, n: usize, rng: &mut dyn RngCore) -> Matrix<K> {
    loop {
        let m: Matrix<K> = (0..n).map(|_| (0..n).map(|_| k.random_elem(rng)).collect()).collect();
        if !k.is_zero(&linalg::det(k, &m).expect("square")) {
            return m;
        }
    }
}

/// A random cubic that is smooth modulo p, by rejection.
pub fn random_smooth_cubic(k: &PrimeField, rng: &mut dyn RngCore) -> Result<CubicThreefold<PrimeField>> {
    for _ in 0..super::SAMPLING_BUDGET {
        let f = random_form(k, 5, 3, rng);
        if f.is_zero() {
            continue;
        }
        let x = CubicThreefold::new(f)?;
        if is_smooth(&x, k.p())?.is_smooth() {
            return Ok(x);
        }
    }
    Err(Error::SamplingExhausted("no smooth cubic sampled".into()))
}

/// A random rational point of X, found on random lines.
pub fn random_point<K: FiniteField>(x: &CubicThreefold<K>, rng: &mut dyn RngCore) -> Result<Vec<K::Elem>> {
    let k = x.field();
    for _ in 0..1000 {
        let p: Vec<K::Elem> = (0..5).map(|_| k.random_elem(rng)).collect();
        let q: Vec<K::Elem> = (0..5).map(|_| k.random_elem(rng)).collect();
        if linalg::rank(k, &[p.clone(), q.clone()]) < 2 {
            continue;
        }
        let form: BinaryForm<K> = x.f().restrict_to_line(&p, &q)?;
        if form.is_zero() {
            return Ok(p);
        }
        let roots: Vec<(K::Elem, K::Elem)> = form
            .factor(rng.gen())?
            .into_iter()
            .filter(|(h, _)| h.degree() == 1)
            .map(|(h, _)| {
                let c = h.coeffs();
                if k.is_zero(&c[0]) {
                    (k.one(), k.zero())
                } else {
                    (k.neg(&c[1]), c[0].clone())
                }
            })
            .collect();
        if roots.is_empty() {
            continue;
        }
        let (s, t) = &roots[rng.gen_range(0..roots.len())];
        return Ok(linalg::combine(k, &[s.clone(), t.clone()], &[p, q]));
    }
    Err(Error::SamplingExhausted("no rational point found on 1000 random lines".into()))
}

/// A random smooth cubic together with a line on it: a random member of
/// the ideal (x₂, x₃, x₄) moved by a random linear change of coordinates.
pub fn random_cubic_with_line(
    k: &PrimeField,
    rng: &mut dyn RngCore,
) -> Result<(CubicThreefold<PrimeField>, PluckerLine<PrimeField>)> {
    for _ in 0..super::SAMPLING_BUDGET {
        let mut f = MultiPoly::zero(k.clone(), 5);
        for i in 2..5 {
            let q = random_form(k, 5, 2, rng);
            f = f.checked_add(&q.checked_mul(&MultiPoly::var(k.clone(), 5, i))?)?;
        }
        let m = random_invertible(k, 5, rng);
        let g = f.substitute_linear(&m)?;
        if g.is_zero() {
            continue;
        }
        let x = CubicThreefold::new(g)?;
        if !is_smooth(&x, k.p())?.is_smooth() {
            continue;
        }
        // F(M y) vanishes on y ∈ ⟨e₀, e₁⟩, so the line is M⁻¹⟨e₀, e₁⟩
        let inv = linalg::inverse(k, &m).expect("invertible");
        let cols = linalg::transpose::<PrimeField>(&inv);
        let l = PluckerLine::from_points(k.clone(), &cols[0], &cols[1])?;
        debug_assert!(x.contains_line(&l)?);
        return Ok((x, l));
    }
    Err(Error::SamplingExhausted("no smooth cubic with a line sampled".into()))
}

/// Searches for a rational line of the second type through random points
/// of X.
pub fn find_second_type_line<K: FiniteField>(
    x: &CubicThreefold<K>,
    attempts: usize,
    rng: &mut dyn RngCore,
) -> Result<Option<PluckerLine<K>>> {
    for _ in 0..attempts {
        let pt = random_point(x, rng)?;
        let Ok(ltp) = lines_through_point(x, &pt, rng.gen()) else { continue };
        for o in &ltp.fiber {
            if let Some(l) = o.as_rational() {
                if line_type(x, l)? == LineType::Second {
                    return Ok(Some(l.clone()));
                }
            }
        }
    }
    Ok(None)
}

/// Second-type lines of X in the chart of lines spanned by rows
/// (1, 0, a, b, c) and (0, 1, d, e, f), cut by one random affine equation
/// in (a, …, f): the equations of the Fano surface and the vanishing
/// determinant of the normal quadrics define a finite set, whose rational
/// points are extracted. Repeats with fresh equations up to `attempts`
/// times.
pub fn find_second_type_line_by_elimination(
    x: &CubicThreefold<PrimeField>,
    attempts: usize,
    rng: &mut dyn RngCore,
) -> Result<Option<PluckerLine<PrimeField>>> {
    let k = x.field().clone();
    let var = |i: usize| MultiPoly::var(k.clone(), 8, i);
    // variables: s, t, a, b, c, d, e, f
    let subs = vec![
        var(0),
        var(1),
        var(0).checked_mul(&var(2))?.checked_add(&var(1).checked_mul(&var(5))?)?,
        var(0).checked_mul(&var(3))?.checked_add(&var(1).checked_mul(&var(6))?)?,
        var(0).checked_mul(&var(4))?.checked_add(&var(1).checked_mul(&var(7))?)?,
    ];
    let drop_st: Vec<Option<usize>> = vec![None, None, Some(0), Some(1), Some(2), Some(3), Some(4), Some(5)];
    let coefficients = |p: &MultiPoly<PrimeField>, deg: u32| -> Result<Vec<MultiPoly<PrimeField>>> {
        let composed = p.compose(&subs)?;
        (0..=deg)
            .map(|j| {
                let mut c = MultiPoly::zero(k.clone(), 8);
                for (m, v) in composed.terms() {
                    if m.0[1] == j && m.0[0] == deg - j {
                        let mut e = m.0.clone();
                        e[0] = 0;
                        e[1] = 0;
                        c.add_term(crate::algebra::Monomial(e), *v);
                    }
                }
                c.remap_vars(6, &drop_st)
            })
            .collect()
    };
    let mut gens = coefficients(x.f(), 3)?;
    let normal: Vec<Vec<MultiPoly<PrimeField>>> =
        (2..5).map(|j| coefficients(&x.gradient()[j], 2)).collect::<Result<_>>()?;
    gens.push(crate::algebra::det_poly_matrix(&normal)?);
    let base = crate::scheme::PolyIdeal::new(6, k.p(), &gens)?;
    for _ in 0..attempts {
        let mut coeffs: Vec<u64> = (0..6).map(|_| k.random_elem(rng)).collect();
        coeffs.push(k.random_nonzero(rng));
        let mut lin = MultiPoly::constant(k.clone(), 6, coeffs[6]);
        for (i, c) in coeffs[..6].iter().enumerate() {
            lin = lin.checked_add(&MultiPoly::var(k.clone(), 6, i).scale(c))?;
        }
        let ring = *base.ring();
        let section = base.sum(&[crate::scheme::Poly::from_multipoly(&ring, &lin)?]);
        if section.krull_dimension()? != Some(0) {
            continue;
        }
        for pt in crate::scheme::solve::rational_points(&section, 8, rng)? {
            let l = PluckerLine::from_points(k.clone(), &[1, 0, pt[0], pt[1], pt[2]], &[0, 1, pt[3], pt[4], pt[5]])?;
            if x.contains_line(&l)? && line_type(x, &l)? == LineType::Second {
                return Ok(Some(l));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cubic_with_line() {
        let k = PrimeField::new(32003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (x, l) = random_cubic_with_line(&k, &mut rng).unwrap();
        assert!(x.contains_line(&l).unwrap());
        let pt = random_point(&x, &mut rng).unwrap();
        assert!(x.contains_point(&pt).unwrap());
    }

    #[test]
    fn form_has_all_monomials() {
        assert_eq!(exponents(5, 3).len(), 35);
        assert_eq!(exponents(3, 2).len(), 6);
    }
}
