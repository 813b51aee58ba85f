//! Dense linear algebra over a field. Matrices are row-major `Vec<Vec<_>>`.

use super::field::Field;
use crate::error::{Error, Result};

pub type Matrix<K> = Vec<Vec<<K as Field>::Elem>>;

/// Reduced row echelon form and pivot columns. Zero rows are dropped.
pub fn rref<K: Field>(k: &K, m: &[Vec<K::Elem>]) -> (Matrix<K>, Vec<usize>) {
    let mut a: Matrix<K> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(pr) = (row..a.len()).find(|&r| !k.is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(row, pr);
        let inv = k.inv(&a[row][col]).expect("nonzero pivot");
        for x in a[row].iter_mut() {
            *x = k.mul(x, &inv);
        }
        let pivot_row = a[row].clone();
        for (r, other) in a.iter_mut().enumerate() {
            if r == row || k.is_zero(&other[col]) {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                *x = k.sub(x, &k.mul(&f, p));
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    (a, pivots)
}

pub fn rank<K: Field>(k: &K, m: &[Vec<K::Elem>]) -> usize {
    rref(k, m).1.len()
}

/// Basis of the right kernel {v : M v = 0}, given `cols` columns.
pub fn nullspace<K: Field>(k: &K, m: &[Vec<K::Elem>], cols: usize) -> Matrix<K> {
    let (r, pivots) = rref(k, m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![k.zero(); cols];
        v[free] = k.one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = k.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

pub fn det<K: Field>(k: &K, m: &[Vec<K::Elem>]) -> Result<K::Elem> {
    let n = m.len();
    if let Some(r) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: r.len() });
    }
    let mut a: Matrix<K> = m.to_vec();
    let mut d = k.one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !k.is_zero(&a[r][col])) else {
            return Ok(k.zero());
        };
        if pr != col {
            a.swap(pr, col);
            d = k.neg(&d);
        }
        d = k.mul(&d, &a[col][col]);
        let inv = k.inv(&a[col][col]).expect("nonzero pivot");
        for r in col + 1..n {
            if k.is_zero(&a[r][col]) {
                continue;
            }
            let f = k.mul(&a[r][col], &inv);
            for c in col..n {
                let t = k.mul(&f, &a[col][c]);
                a[r][c] = k.sub(&a[r][c], &t);
            }
        }
    }
    Ok(d)
}

/// Some solution of M x = b, or `None` if inconsistent.
pub fn solve<K: Field>(k: &K, m: &[Vec<K::Elem>], b: &[K::Elem]) -> Option<Vec<K::Elem>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: Matrix<K> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(k, &aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![k.zero(); cols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

pub fn inverse<K: Field>(k: &K, m: &[Vec<K::Elem>]) -> Option<Matrix<K>> {
    let n = m.len();
    let aug: Matrix<K> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { k.one() } else { k.zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(k, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul<K: Field>(k: &K, a: &[Vec<K::Elem>], b: &[Vec<K::Elem>]) -> Matrix<K> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(k.zero(), |acc, (x, brow)| k.add(&acc, &k.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<K: Field>(k: &K, a: &[Vec<K::Elem>], v: &[K::Elem]) -> Vec<K::Elem> {
    a.iter().map(|row| dot(k, row, v)).collect()
}

pub fn dot<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> K::Elem {
    a.iter().zip(b).fold(k.zero(), |acc, (x, y)| k.add(&acc, &k.mul(x, y)))
}

pub fn transpose<K: Field>(m: &[Vec<K::Elem>]) -> Matrix<K> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn identity<K: Field>(k: &K, n: usize) -> Matrix<K> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { k.one() } else { k.zero() }).collect())
        .collect()
}

/// Linear combination Σ cᵢ vᵢ.
pub fn combine<K: Field>(k: &K, coeffs: &[K::Elem], vecs: &[Vec<K::Elem>]) -> Vec<K::Elem> {
    let n = vecs.first().map_or(0, Vec::len);
    let mut out = vec![k.zero(); n];
    for (c, v) in coeffs.iter().zip(vecs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o = k.add(o, &k.mul(c, x));
        }
    }
    out
}

/// Scales so that the first nonzero entry is 1; zero vectors are unchanged.
pub fn normalize_vec<K: Field>(k: &K, v: &[K::Elem]) -> Vec<K::Elem> {
    match v.iter().find(|x| !k.is_zero(x)) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = k.inv(lead).expect("nonzero");
            v.iter().map(|x| k.mul(x, &inv)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn rank_nullspace_det() {
        let k = PrimeField::new(101).unwrap();
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&k, &m), 2);
        let ns = nullspace(&k, &m, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&k, &m, &ns[0]).iter().all(|x| *x == 0));
        assert_eq!(det(&k, &m).unwrap(), 0);
        let m2 = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(det(&k, &m2).unwrap(), 100);
        let inv = inverse(&k, &m2).unwrap();
        assert_eq!(mat_mul(&k, &m2, &inv), identity(&k, 2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let k = PrimeField::new(7).unwrap();
        let m = vec![vec![1, 1], vec![1, 1]];
        assert!(solve(&k, &m, &[1, 2]).is_none());
        let x = solve(&k, &m, &[3, 3]).unwrap();
        assert_eq!(mat_vec(&k, &m, &x), vec![3, 3]);
    }
}
