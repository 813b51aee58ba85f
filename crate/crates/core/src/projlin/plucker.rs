use serde::{Deserialize, Serialize};

use super::subspace::ProjSubspace;
use crate::algebra::linalg;
use crate::algebra::Field;
use crate::error::{Error, Result};

/// Position of pᵢⱼ (i < j) in the lexicographic list p₀₁, p₀₂, …, p₍ₙ₋₁₎ₙ
/// of a line in Pⁿ.
pub fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j <= n);
    // pairs (a, b) with a < i come first: Σ_{a<i} (n − a)
    i * (2 * n + 1 - i) / 2 + (j - i - 1)
}

/// Number of Plücker coordinates of a line in Pⁿ.
pub fn plucker_len(n: usize) -> usize {
    (n + 1) * n / 2
}

fn entry<K: Field>(k: &K, p: &[K::Elem], i: usize, j: usize, n: usize) -> K::Elem {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Less => p[pair_index(i, j, n)].clone(),
        Greater => k.neg(&p[pair_index(j, i, n)]),
        Equal => k.zero(),
    }
}

/// Exterior product u ∧ v in lexicographic Plücker coordinates.
pub fn wedge<K: Field>(k: &K, u: &[K::Elem], v: &[K::Elem]) -> Vec<K::Elem> {
    let n = u.len() - 1;
    let mut out = Vec::with_capacity(plucker_len(n));
    for i in 0..=n {
        for j in i + 1..=n {
            out.push(k.sub(&k.mul(&u[i], &v[j]), &k.mul(&u[j], &v[i])));
        }
    }
    out
}

/// Values of the Grassmann–Plücker quadrics pᵢⱼpₖₗ − pᵢₖpⱼₗ + pᵢₗpⱼₖ over
/// all 4-subsets i < j < k < l.
pub fn plucker_relations<K: Field>(k: &K, p: &[K::Elem], n: usize) -> Vec<K::Elem> {
    pairing_impl(k, p, p, n, false)
}

/// The polarized Plücker quadrics, i.e. the coordinates of p ∧ q in Λ⁴;
/// all vanish iff the two lines meet.
pub fn plucker_pairing<K: Field>(k: &K, p: &[K::Elem], q: &[K::Elem], n: usize) -> Vec<K::Elem> {
    pairing_impl(k, p, q, n, true)
}

fn pairing_impl<K: Field>(k: &K, p: &[K::Elem], q: &[K::Elem], n: usize, polar: bool) -> Vec<K::Elem> {
    let mut out = Vec::new();
    let pi = |a, b| p[pair_index(a, b, n)].clone();
    let qi = |a, b| q[pair_index(a, b, n)].clone();
    for i in 0..=n {
        for j in i + 1..=n {
            for l in j + 1..=n {
                for m in l + 1..=n {
                    let mut v = k.add(
                        &k.sub(&k.mul(&pi(i, j), &qi(l, m)), &k.mul(&pi(i, l), &qi(j, m))),
                        &k.mul(&pi(i, m), &qi(j, l)),
                    );
                    if polar {
                        v = k.add(
                            &v,
                            &k.add(
                                &k.sub(&k.mul(&qi(i, j), &pi(l, m)), &k.mul(&qi(i, l), &pi(j, m))),
                                &k.mul(&qi(i, m), &pi(j, l)),
                            ),
                        );
                    }
                    out.push(v);
                }
            }
        }
    }
    out
}

/// A line in P³ or P⁴ given by normalized Plücker coordinates together
/// with two spanning points.
#[derive(Debug, Clone)]
pub struct PluckerLine<K: Field> {
    field: K,
    ambient: usize,
    plucker: Vec<K::Elem>,
    points: [Vec<K::Elem>; 2],
}

impl<K: Field> PartialEq for PluckerLine<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.ambient == other.ambient && self.plucker == other.plucker
    }
}

impl<K: Field> PluckerLine<K> {
    pub fn from_points(field: K, p: &[K::Elem], q: &[K::Elem]) -> Result<Self> {
        if p.len() != q.len() || !(4..=5).contains(&p.len()) {
            return Err(Error::Dimension(format!(
                "line points must both have 4 or 5 coordinates, got {} and {}",
                p.len(),
                q.len()
            )));
        }
        let w = wedge(&field, p, q);
        if w.iter().all(|c| field.is_zero(c)) {
            return Err(Error::CoincidentPoints);
        }
        let plucker = linalg::normalize_vec(&field, &w);
        Ok(PluckerLine { ambient: p.len() - 1, plucker, points: [p.to_vec(), q.to_vec()], field })
    }

    /// Line from Plücker coordinates; the Plücker relations must hold.
    pub fn from_plucker(field: K, coords: &[K::Elem]) -> Result<Self> {
        let n = match coords.len() {
            6 => 3,
            10 => 4,
            l => return Err(Error::Dimension(format!("{l} Plücker coordinates"))),
        };
        if coords.iter().all(|c| field.is_zero(c)) {
            return Err(Error::Dimension("zero Plücker vector".into()));
        }
        if plucker_relations(&field, coords, n).iter().any(|r| !field.is_zero(r)) {
            return Err(Error::Dimension("Plücker relations fail".into()));
        }
        let (i, j) = (0..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .find(|&(i, j)| !field.is_zero(&coords[pair_index(i, j, n)]))
            .unwrap();
        let p: Vec<K::Elem> = (0..=n).map(|c| entry(&field, coords, i, c, n)).collect();
        let q: Vec<K::Elem> = (0..=n).map(|c| entry(&field, coords, j, c, n)).collect();
        let line = Self::from_points(field.clone(), &p, &q)?;
        debug_assert_eq!(line.plucker, linalg::normalize_vec(&field, coords));
        Ok(line)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn plucker(&self) -> &[K::Elem] {
        &self.plucker
    }

    pub fn points(&self) -> &[Vec<K::Elem>; 2] {
        &self.points
    }

    pub fn subspace(&self) -> ProjSubspace<K> {
        ProjSubspace::new(self.field.clone(), self.ambient, &self.points).expect("valid points")
    }

    pub fn contains_point(&self, x: &[K::Elem]) -> bool {
        let rows = vec![self.points[0].clone(), self.points[1].clone(), x.to_vec()];
        linalg::rank(&self.field, &rows) == 2
    }

    /// Point s·p + t·q of the line.
    pub fn point_at(&self, s: &K::Elem, t: &K::Elem) -> Vec<K::Elem> {
        linalg::combine(&self.field, &[s.clone(), t.clone()], &self.points)
    }

    pub fn relations_hold(&self) -> bool {
        plucker_relations(&self.field, &self.plucker, self.ambient)
            .iter()
            .all(|r| self.field.is_zero(r))
    }

    pub fn format_coords(&self) -> Vec<String> {
        self.plucker.iter().map(|c| self.field.format_elem(c)).collect()
    }

    /// The reduced row echelon basis of the line, so equal lines print alike.
    pub fn to_json(&self) -> LineJson {
        let (basis, _) = linalg::rref(&self.field, &self.points);
        LineJson::Points {
            points: basis
                .iter()
                .take(2)
                .map(|p| p.iter().map(|c| self.field.format_elem(c)).collect())
                .collect(),
        }
    }

    pub fn to_plucker_json(&self) -> LineJson {
        LineJson::Plucker { plucker: self.format_coords() }
    }

    pub fn from_json(field: K, j: &LineJson) -> Result<Self> {
        match j {
            LineJson::Points { points } => {
                if points.len() != 2 {
                    return Err(Error::Parse(format!("a line needs 2 points, got {}", points.len())));
                }
                let p = parse_coords(&field, &points[0])?;
                let q = parse_coords(&field, &points[1])?;
                Self::from_points(field, &p, &q)
            }
            LineJson::Plucker { plucker } => {
                let c = parse_coords(&field, plucker)?;
                Self::from_plucker(field, &c)
            }
        }
    }
}

pub fn parse_coords<K: Field>(field: &K, c: &[String]) -> Result<Vec<K::Elem>> {
    c.iter().map(|s| field.parse_elem(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LineJson {
    Points { points: Vec<Vec<String>> },
    Plucker { plucker: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub basis: Vec<Vec<String>>,
}

/// True iff the two lines meet (the four spanning points are dependent).
pub fn lines_meet<K: Field>(a: &PluckerLine<K>, b: &PluckerLine<K>) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(Error::Dimension("lines in different ambient spaces".into()));
    }
    let rows = vec![a.points[0].clone(), a.points[1].clone(), b.points[0].clone(), b.points[1].clone()];
    Ok(linalg::rank(&a.field, &rows) < 4)
}

/// True iff the line meets the 2-plane K in P⁴.
pub fn line_meets_plane<K: Field>(l: &PluckerLine<K>, plane: &ProjSubspace<K>) -> Result<bool> {
    if l.ambient != 4 || plane.ambient() != 4 {
        return Err(Error::Dimension("line_meets_plane needs P^4".into()));
    }
    if plane.dim() != 2 {
        return Err(Error::Dimension(format!("expected a 2-plane, got dimension {}", plane.dim())));
    }
    let mut rows = l.points.to_vec();
    rows.extend(plane.basis().iter().cloned());
    Ok(l.field.is_zero(&linalg::det(&l.field, &rows)?))
}
