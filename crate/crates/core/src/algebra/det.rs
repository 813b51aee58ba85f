use super::field::Field;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials by Bareiss fraction-free
/// elimination; every division is exact.
pub fn det_poly_matrix<K: Field>(m: &[Vec<MultiPoly<K>>]) -> Result<MultiPoly<K>> {
    let n = m.len();
    if let Some(r) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: r.len() });
    }
    if n == 0 {
        return Err(Error::NonSquare { rows: 0, cols: 0 });
    }
    let field = m[0][0].field().clone();
    let nvars = m[0][0].nvars();
    for p in m.iter().flatten() {
        if p.nvars() != nvars {
            return Err(Error::VarCountMismatch(p.nvars(), nvars));
        }
    }
    let mut a: Vec<Vec<MultiPoly<K>>> = m.to_vec();
    let mut prev = MultiPoly::one(field.clone(), nvars);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(pr) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(MultiPoly::zero(field, nvars));
            };
            a.swap(k, pr);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero(field.clone(), nvars);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}
