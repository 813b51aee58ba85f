use crate::algebra::linalg::{self, Matrix};
use crate::algebra::Field;
use crate::error::{Error, Result};

/// A projective linear subspace of Pⁿ, stored as the reduced row echelon
/// form of a basis, so equality does not depend on the chosen basis. The
/// empty subspace has no rows.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjSubspace<K: Field> {
    field: K,
    ambient: usize,
    basis: Matrix<K>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanMeet {
    Span,
    Meet,
}

impl<K: Field> ProjSubspace<K> {
    /// Row space of `rows` inside Pⁿ with n = `ambient`.
    pub fn new(field: K, ambient: usize, rows: &[Vec<K::Elem>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != ambient + 1) {
            return Err(Error::Dimension(format!(
                "vector of length {} in P^{ambient}",
                r.len()
            )));
        }
        let (basis, _) = linalg::rref(&field, rows);
        Ok(ProjSubspace { field, ambient, basis })
    }

    pub fn point(field: K, coords: &[K::Elem]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Dimension("empty coordinate vector".into()));
        }
        let s = Self::new(field, coords.len() - 1, &[coords.to_vec()])?;
        if s.is_empty() {
            return Err(Error::Dimension("the zero vector is not a projective point".into()));
        }
        Ok(s)
    }

    pub fn whole(field: K, ambient: usize) -> Self {
        let basis = linalg::identity(&field, ambient + 1);
        ProjSubspace { field, ambient, basis }
    }

    pub fn empty(field: K, ambient: usize) -> Self {
        ProjSubspace { field, ambient, basis: Vec::new() }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.basis
    }

    /// Projective dimension; −1 for the empty subspace.
    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains_point(&self, p: &[K::Elem]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(p.to_vec());
        linalg::rank(&self.field, &rows) == self.basis.len()
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.basis.iter().all(|r| self.contains_point(r))
    }

    /// Linear forms vanishing on the subspace.
    pub fn equations(&self) -> Matrix<K> {
        if self.basis.is_empty() {
            return linalg::identity(&self.field, self.ambient + 1);
        }
        linalg::nullspace(&self.field, &self.basis, self.ambient + 1)
    }

    pub fn span(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::new(self.field.clone(), self.ambient, &rows)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut eqs = self.equations();
        eqs.extend(other.equations());
        let rows = linalg::nullspace(&self.field, &eqs, self.ambient + 1);
        Self::new(self.field.clone(), self.ambient, &rows)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient spaces P^{} and P^{} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Coordinates of a point of the subspace with respect to the stored
    /// basis, or `None` if the point is outside.
    pub fn coordinates_of(&self, p: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let m = linalg::transpose::<K>(&self.basis);
        linalg::solve(&self.field, &m, p)
    }
}

pub fn span_meet<K: Field>(a: &ProjSubspace<K>, b: &ProjSubspace<K>, kind: SpanMeet) -> Result<ProjSubspace<K>> {
    match kind {
        SpanMeet::Span => a.span(b),
        SpanMeet::Meet => a.meet(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn e(i: usize) -> Vec<u64> {
        (0..5).map(|j| (i == j) as u64).collect()
    }

    #[test]
    fn span_and_meet_examples() {
        let k = PrimeField::new(101).unwrap();
        let l = ProjSubspace::new(k, 4, &[e(0), e(1)]).unwrap();
        let p = ProjSubspace::point(k, &e(2)).unwrap();
        let plane = ProjSubspace::new(k, 4, &[e(0), e(1), e(2)]).unwrap();
        assert_eq!(span_meet(&l, &p, SpanMeet::Span).unwrap(), plane);
        let other = ProjSubspace::new(k, 4, &[e(0), e(3), e(4)]).unwrap();
        let m = span_meet(&plane, &other, SpanMeet::Meet).unwrap();
        assert_eq!(m, ProjSubspace::point(k, &e(0)).unwrap());
        let a = ProjSubspace::new(k, 4, &[e(1), e(2)]).unwrap();
        let b = ProjSubspace::new(k, 4, &[e(3), e(4)]).unwrap();
        assert!(a.meet(&b).unwrap().is_empty());
        assert_eq!(a.meet(&b).unwrap().dim(), -1);
    }

    #[test]
    fn basis_independent_equality() {
        let k = PrimeField::new(101).unwrap();
        let a = ProjSubspace::new(k, 4, &[vec![1, 2, 3, 0, 0], vec![0, 1, 1, 1, 0]]).unwrap();
        let b = ProjSubspace::new(k, 4, &[vec![1, 3, 4, 1, 0], vec![2, 5, 7, 1, 0]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ambient_mismatch() {
        let k = PrimeField::new(101).unwrap();
        let a = ProjSubspace::point(k, &[1, 0, 0, 0]).unwrap();
        let b = ProjSubspace::point(k, &e(0)).unwrap();
        assert!(a.span(&b).is_err());
    }
}
