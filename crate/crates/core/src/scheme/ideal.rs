use std::sync::OnceLock;
use std::time::Duration;

use serde::Serialize;

use super::groebner::{groebner_basis, normal_form};
use super::hilbert::{dimension_and_degree, max_independent_set};
use super::mono::{Mono, MonoOrder};
use super::poly::{Poly, Ring};
use crate::algebra::{det_poly_matrix, MultiPoly, PrimeField};
use crate::error::{Error, Result};

/// An ideal of 𝔽ₚ[x₀, …, xₙ₋₁] with a lazily computed reduced Gröbner basis.
#[derive(Debug)]
pub struct PolyIdeal {
    ring: Ring,
    generators: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        PolyIdeal { ring: self.ring, generators: self.generators.clone(), gb }
    }
}

impl PolyIdeal {
    /// Grevlex ideal generated by the given polynomials.
    pub fn new(nvars: usize, p: u64, generators: &[MultiPoly<PrimeField>]) -> Result<PolyIdeal> {
        PolyIdeal::with_order(nvars, p, MonoOrder::Grevlex, generators)
    }

    pub fn with_order(nvars: usize, p: u64, order: MonoOrder, generators: &[MultiPoly<PrimeField>]) -> Result<PolyIdeal> {
        let ring = Ring::new(nvars, p, order)?;
        let generators = generators
            .iter()
            .map(|f| Poly::from_multipoly(&ring, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyIdeal::from_polys(ring, generators))
    }

    pub fn from_polys(ring: Ring, generators: Vec<Poly>) -> PolyIdeal {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        PolyIdeal { ring, generators, gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.ring.p).expect("ring prime is valid")
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn generators_multipoly(&self) -> Vec<MultiPoly<PrimeField>> {
        self.generators.iter().map(|g| g.to_multipoly(&self.ring)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn gb(&self) -> Result<&[Poly]> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = groebner_basis(&self.ring, &self.generators)?;
        Ok(self.gb.get_or_init(|| g))
    }

    pub fn contains_one(&self) -> Result<bool> {
        Ok(self.gb()?.iter().any(Poly::is_constant))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(normal_form(&self.ring, self.gb()?, f).is_zero())
    }

    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        Ok(normal_form(&self.ring, self.gb()?, f))
    }

    pub fn sum(&self, more: &[Poly]) -> PolyIdeal {
        let mut g = self.generators.clone();
        g.extend(more.iter().cloned());
        PolyIdeal::from_polys(self.ring, g)
    }

    pub fn leading_monomials(&self) -> Result<Vec<Mono>> {
        Ok(self.gb()?.iter().map(|g| *g.lm()).collect())
    }

    /// Krull dimension of the quotient ring, None for the unit ideal.
    /// Meaningful for degree-compatible orders.
    pub fn krull_dimension(&self) -> Result<Option<usize>> {
        let lms = self.leading_monomials()?;
        let hs = dimension_and_degree(self.ring.nvars, &lms);
        let indep = max_independent_set(self.ring.nvars, &lms);
        debug_assert_eq!(hs.map(|h| h.0), indep);
        Ok(hs.map(|h| h.0))
    }

    /// Applies xᵢ ↦ Σⱼ a[i][j] xⱼ to every generator.
    pub fn linear_change(&self, a: &[Vec<u64>]) -> PolyIdeal {
        let g = self.generators.iter().map(|f| f.linear_change(&self.ring, a)).collect();
        PolyIdeal::from_polys(self.ring, g)
    }
}

/// Reduced Gröbner basis as multivariate polynomials.
pub fn groebner(ideal: &PolyIdeal) -> Result<Vec<MultiPoly<PrimeField>>> {
    Ok(ideal.gb()?.iter().map(|g| g.to_multipoly(ideal.ring())).collect())
}

/// Dimension of the projective vanishing set; −1 when it is empty.
pub fn ideal_dimension(ideal: &PolyIdeal) -> Result<i64> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    Ok(match ideal.krull_dimension()? {
        None | Some(0) => -1,
        Some(d) => d as i64 - 1,
    })
}

/// Degree of the projective scheme (its length in dimension 0).
pub fn ideal_degree(ideal: &PolyIdeal) -> Result<u64> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let lms = ideal.leading_monomials()?;
    match dimension_and_degree(ideal.ring().nvars, &lms) {
        None | Some((0, _)) => Err(Error::EmptyScheme),
        Some((_, deg)) => Ok(deg),
    }
}

/// I plus the codim × codim minors of the Jacobian of its generators.
pub fn singular_locus_ideal(ideal: &PolyIdeal, codim: usize) -> Result<PolyIdeal> {
    let ring = *ideal.ring();
    let rows = ideal.generators().len();
    let cols = ring.nvars;
    if codim == 0 || codim > rows || codim > cols {
        return Err(Error::CodimTooLarge { codim, rows, cols });
    }
    let jac: Vec<Vec<MultiPoly<PrimeField>>> = ideal
        .generators_multipoly()
        .iter()
        .map(|g| g.gradient())
        .collect();
    let mut minors = Vec::new();
    for rs in subsets(rows, codim) {
        for cs in subsets(cols, codim) {
            let m: Vec<Vec<MultiPoly<PrimeField>>> =
                rs.iter().map(|&r| cs.iter().map(|&c| jac[r][c].clone()).collect()).collect();
            let d = det_poly_matrix(&m)?;
            if !d.is_zero() {
                minors.push(Poly::from_multipoly(&ring, &d)?);
            }
        }
    }
    Ok(ideal.sum(&minors))
}

/// All k-element subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeReport {
    pub projective_dimension: i64,
    pub degree: Option<u64>,
    pub prime: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub fn scheme_report(ideal: &PolyIdeal) -> Result<SchemeReport> {
    let start = std::time::Instant::now();
    let projective_dimension = ideal_dimension(ideal)?;
    let degree = if projective_dimension < 0 { None } else { Some(ideal_degree(ideal)?) };
    Ok(SchemeReport { projective_dimension, degree, prime: ideal.ring().p, elapsed: start.elapsed() })
}
