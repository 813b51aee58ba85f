use super::plucker::{lines_meet, PluckerLine};
use super::subspace::ProjSubspace;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{Field, MultiPoly};
use crate::error::{Error, Result};

/// The quadric surface through three pairwise skew lines spanning a 3-plane H.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricThroughLines<K: Field> {
    /// The common 3-plane; its stored basis gives coordinates y₀..y₃ on H.
    pub hyperplane: ProjSubspace<K>,
    /// The quadric in the coordinates y of H.
    pub quadric: MultiPoly<K>,
    /// Symmetric Gram matrix of `quadric`.
    pub matrix: Matrix<K>,
    pub smooth: bool,
    first: PluckerLine<K>,
}

/// Index pairs (i ≤ j) of the ten quadratic monomials in four variables.
fn quadratic_monomials() -> Vec<(usize, usize)> {
    (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect()
}

fn monomial_row<K: Field>(k: &K, y: &[K::Elem]) -> Vec<K::Elem> {
    quadratic_monomials().iter().map(|&(i, j)| k.mul(&y[i], &y[j])).collect()
}

pub fn quadric_through_skew_lines<K: Field>(
    l1: &PluckerLine<K>,
    l2: &PluckerLine<K>,
    l3: &PluckerLine<K>,
) -> Result<QuadricThroughLines<K>> {
    let lines = [l1, l2, l3];
    for i in 0..3 {
        for j in i + 1..3 {
            if lines_meet(lines[i], lines[j])? {
                return Err(Error::NotSkew);
            }
        }
    }
    let k = l1.field().clone();
    let h = l1.subspace().span(&l2.subspace())?.span(&l3.subspace())?;
    if h.dim() != 3 {
        return Err(Error::NotInCommonP3);
    }
    let mut conditions = Vec::with_capacity(9);
    for l in lines {
        let [p, q] = l.points();
        let yp = h.coordinates_of(p).expect("line inside its span");
        let yq = h.coordinates_of(q).expect("line inside its span");
        let ysum: Vec<K::Elem> = yp.iter().zip(&yq).map(|(a, b)| k.add(a, b)).collect();
        for y in [yp, yq, ysum] {
            conditions.push(monomial_row(&k, &y));
        }
    }
    let rank = linalg::rank(&k, &conditions);
    if rank < 9 {
        return Err(Error::DegeneratePencil(rank));
    }
    let sol = linalg::nullspace(&k, &conditions, 10).pop().expect("one-dimensional kernel");
    let sol = linalg::normalize_vec(&k, &sol);
    let mons = quadratic_monomials();
    let quadric = MultiPoly::from_terms(
        k.clone(),
        4,
        mons.iter().zip(&sol).map(|(&(i, j), c)| {
            let mut e = vec![0u32; 4];
            e[i] += 1;
            e[j] += 1;
            (e, c.clone())
        }),
    )?;
    let matrix = gram_matrix(&k, &quadric);
    let smooth = linalg::rank(&k, &matrix) == 4;
    Ok(QuadricThroughLines { hyperplane: h, quadric, matrix, smooth, first: l1.clone() })
}

/// Symmetric matrix S with q(y) = yᵀ S y (characteristic ≠ 2).
pub fn gram_matrix<K: Field>(k: &K, q: &MultiPoly<K>) -> Matrix<K> {
    let n = q.nvars();
    let half = k.inv(&k.from_i64(2)).expect("characteristic is not 2");
    let mut s = vec![vec![k.zero(); n]; n];
    for (m, c) in q.terms() {
        let idx: Vec<usize> = m.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize)).collect();
        if let [i, j] = idx[..] {
            if i == j {
                s[i][i] = c.clone();
            } else {
                let h = k.mul(c, &half);
                s[i][j] = h.clone();
                s[j][i] = h;
            }
        }
    }
    s
}

impl<K: Field> QuadricThroughLines<K> {
    /// True iff the line lies in H and on the quadric.
    pub fn contains_line(&self, l: &PluckerLine<K>) -> Result<bool> {
        if !self.hyperplane.contains(&l.subspace()) {
            return Ok(false);
        }
        let [p, q] = l.points();
        let yp = self.hyperplane.coordinates_of(p).unwrap();
        let yq = self.hyperplane.coordinates_of(q).unwrap();
        Ok(self.quadric.restrict_to_line(&yp, &yq)?.is_zero())
    }

    /// True iff the line belongs to the ruling of the three defining lines:
    /// it lies on the quadric and is disjoint from the first of them.
    pub fn same_ruling(&self, l: &PluckerLine<K>) -> Result<bool> {
        if *l == self.first {
            return Ok(true);
        }
        Ok(self.contains_line(l)? && !lines_meet(&self.first, l)?)
    }

    /// The quadric pulled back to the ambient coordinates through the
    /// projection x ↦ y that inverts the basis of H on H.
    pub fn ambient_quadric(&self) -> Result<MultiPoly<K>> {
        let k = self.hyperplane.field();
        let n = self.hyperplane.ambient() + 1;
        let basis = self.hyperplane.basis();
        // y = x C with B C = I: take C from pivot columns
        let (_, pivots) = linalg::rref(k, basis);
        let mut rows = vec![vec![k.zero(); n]; 4];
        for (r, &c) in pivots.iter().enumerate() {
            rows[r][c] = k.one();
        }
        self.quadric.substitute_linear(&rows)
    }
}
