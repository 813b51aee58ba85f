use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::CubicThreefold;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::univariate as up;
use crate::algebra::{poly_gcd, resultant, BinaryForm, ExtField, Field, FiniteField, MultiPoly};
use crate::error::{Error, Result};
use crate::projlin::quadric::gram_matrix;
use crate::projlin::{LineOrbit, OrbitJson, PluckerLine};

/// Retry budget for randomized general-position choices.
pub const SAMPLING_BUDGET: usize = 32;

/// The lines of X through a point x, as the intersection of a conic and a
/// cubic in the plane of tangent directions.
#[derive(Debug, Clone)]
pub struct LinesThroughPoint<K: FiniteField> {
    pub point: Vec<K::Elem>,
    /// Columns e₀ = x, e₁..e₃ spanning T_xX with x, and e₄ with ∇F(x)·e₄ = 1.
    pub frame: Matrix<K>,
    /// Q(a₁, a₂, a₃) where F(A·y) = y₀²y₄ + y₀Q + C, restricted to y₄ = 0.
    pub conic: MultiPoly<K>,
    /// C(a₁, a₂, a₃), restricted to y₄ = 0.
    pub cubic: MultiPoly<K>,
    pub eckardt: bool,
    pub on_hessian: bool,
    /// Empty at Eckardt points.
    pub fiber: Vec<LineOrbit<K>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinesThroughPointJson {
    pub point: Vec<String>,
    pub eckardt: bool,
    pub on_hessian: bool,
    pub conic: String,
    pub cubic: String,
    pub total: usize,
    pub fiber: Vec<OrbitJson>,
}

impl<K: FiniteField> LinesThroughPoint<K> {
    /// Number of lines over the closure, with multiplicity.
    pub fn total(&self) -> usize {
        self.fiber.iter().map(LineOrbit::weight).sum()
    }

    /// Direction coordinates (a₁, a₂, a₃) of a point w ≠ x of T_xX.
    pub fn direction_of(&self, w: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let k = self.conic.field();
        let y = linalg::solve(k, &self.frame, w)?;
        if !k.is_zero(&y[4]) || y[1..4].iter().all(|c| k.is_zero(c)) {
            return None;
        }
        Some(y[1..4].to_vec())
    }

    /// The point A·(0, a, 0) of P⁴ for a direction a.
    pub fn point_of_direction(&self, a: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.conic.field();
        let y = [k.zero(), a[0].clone(), a[1].clone(), a[2].clone(), k.zero()];
        linalg::mat_vec(k, &self.frame, &y)
    }

    pub fn to_json(&self) -> LinesThroughPointJson {
        let k = self.conic.field();
        let names: Vec<String> = (1..=3).map(|i| format!("a{i}")).collect();
        LinesThroughPointJson {
            point: self.point.iter().map(|c| k.format_elem(c)).collect(),
            eckardt: self.eckardt,
            on_hessian: self.on_hessian,
            conic: self.conic.format_with(&names),
            cubic: self.cubic.format_with(&names),
            total: self.total(),
            fiber: self.fiber.iter().map(LineOrbit::to_json).collect(),
        }
    }
}

/// Frame with x in column 0, a basis of ker g completing x in columns
/// 1..3, and a column with g-value 1 last.
fn adapted_frame<K: Field>(k: &K, x: &[K::Elem], g: &[K::Elem]) -> Matrix<K> {
    let kernel = linalg::nullspace(k, &[g.to_vec()], 5);
    let mut cols: Vec<Vec<K::Elem>> = vec![x.to_vec()];
    for v in kernel {
        let mut trial = cols.clone();
        trial.push(v.clone());
        if linalg::rank(k, &trial) == trial.len() {
            cols = trial;
        }
        if cols.len() == 4 {
            break;
        }
    }
    let j = g.iter().position(|c| !k.is_zero(c)).expect("nonzero gradient");
    let mut last = vec![k.zero(); 5];
    last[j] = k.inv(&g[j]).expect("nonzero");
    cols.push(last);
    linalg::transpose::<K>(&cols)
}

/// Coefficients (lowest first) of p(s₀, s₁, u) as a polynomial in u.
fn along_fiber<K: Field>(p: &MultiPoly<K>, s0: &K::Elem, s1: &K::Elem) -> Vec<K::Elem> {
    let k = p.field();
    let mut out = vec![k.zero(); 4];
    for (m, c) in p.terms() {
        let v = k.mul(c, &k.mul(&k.pow(s0, m.0[0] as u64), &k.pow(s1, m.0[1] as u64)));
        let e = m.0[2] as usize;
        out[e] = k.add(&out[e], &v);
    }
    up::trim(k, out)
}

/// The unique common zero of q and c on the line through [0:0:1] and
/// [s₀:s₁:0], or None when that line carries more than one.
fn point_above<K: Field>(q: &MultiPoly<K>, c: &MultiPoly<K>, s0: &K::Elem, s1: &K::Elem) -> Option<Vec<K::Elem>> {
    let k = q.field();
    let g = up::gcd(k, &along_fiber(q, s0, s1), &along_fiber(c, s0, s1));
    let rep = up::gcd(k, &g, &up::derivative(k, &g));
    let sq = up::monic(k, &up::divrem(k, &g, &rep).0);
    if up::degree::<K>(&sq) != Some(1) {
        return None;
    }
    Some(vec![s0.clone(), s1.clone(), k.neg(&sq[0])])
}

fn mat3_apply<K: Field>(k: &K, r: &Matrix<K>, u: &[K::Elem]) -> Vec<K::Elem> {
    linalg::mat_vec(k, r, u)
}

/// Lines through x in X with intersection multiplicities. Over the closure
/// the multiplicities sum to 6 unless x is an Eckardt point.
pub fn lines_through_point<K: FiniteField>(x: &CubicThreefold<K>, point: &[K::Elem], seed: u64) -> Result<LinesThroughPoint<K>> {
    let k = x.field().clone();
    if point.len() != 5 {
        return Err(Error::Dimension(format!("point has {} coordinates, expected 5", point.len())));
    }
    if point.iter().all(|c| k.is_zero(c)) {
        return Err(Error::Dimension("the zero vector is not a projective point".into()));
    }
    if !x.contains_point(point)? {
        return Err(Error::PointNotOnCubic);
    }
    let g = x.gradient_at(point)?;
    if g.iter().all(|c| k.is_zero(c)) {
        return Err(Error::SingularPoint);
    }
    let frame = adapted_frame(&k, point, &g);
    let gy = x.f().substitute_linear(&frame)?;
    let mut conic = MultiPoly::zero(k.clone(), 3);
    let mut cubic = MultiPoly::zero(k.clone(), 3);
    for (m, c) in gy.terms() {
        if m.0[4] != 0 {
            continue;
        }
        let e = crate::algebra::Monomial(m.0[1..4].to_vec());
        match m.0[0] {
            1 => conic.add_term(e, c.clone()),
            0 => cubic.add_term(e, c.clone()),
            _ => {}
        }
    }
    let on_hessian = k.is_zero(&linalg::det(&k, &gram_matrix(&k, &conic))?);
    let eckardt = conic.is_zero() || cubic.is_zero() || !poly_gcd(&conic, &cubic)?.is_constant();
    let mut result = LinesThroughPoint { point: point.to_vec(), frame, conic, cubic, eckardt, on_hessian, fiber: Vec::new() };
    if eckardt {
        return Ok(result);
    }
    result.fiber = intersect(&result, seed)?;
    Ok(result)
}

fn intersect<K: FiniteField>(ltp: &LinesThroughPoint<K>, seed: u64) -> Result<Vec<LineOrbit<K>>> {
    let k = ltp.conic.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..SAMPLING_BUDGET {
        let r: Matrix<K> = (0..3).map(|_| (0..3).map(|_| k.random_elem(&mut rng)).collect()).collect();
        if k.is_zero(&linalg::det(&k, &r)?) {
            continue;
        }
        let q = ltp.conic.substitute_linear(&r)?;
        let c = ltp.cubic.substitute_linear(&r)?;
        if k.is_zero(&q.coeff(&[0, 0, 2])) || k.is_zero(&c.coeff(&[0, 0, 3])) {
            continue;
        }
        let res = resultant(&q, &c, 2)?;
        let mut coeffs = vec![k.zero(); 7];
        for (m, v) in res.terms() {
            coeffs[m.0[1] as usize] = v.clone();
        }
        let form = BinaryForm::new(k.clone(), coeffs);
        if form.is_zero() {
            return Err(Error::EckardtPoint);
        }
        let mut out = Vec::new();
        for (h, mult) in form.factor(seed)? {
            if h.degree() == 1 {
                let hc = h.coeffs();
                let (s0, s1) = if k.is_zero(&hc[0]) { (k.one(), k.zero()) } else { (k.neg(&hc[1]), hc[0].clone()) };
                let Some(u) = point_above(&q, &c, &s0, &s1) else { continue 'attempt };
                let a = mat3_apply(&k, &r, &u);
                let v = ltp.point_of_direction(&a);
                out.push(LineOrbit::rational(mult, PluckerLine::from_points(k.clone(), &ltp.point, &v)?));
            } else {
                let ext = ExtField::new(k.clone(), h.dehomogenize())?;
                let lift = |p: &MultiPoly<K>| p.map_field(ext.clone(), |c| ext.embed(c));
                let Some(u) = point_above(&lift(&q), &lift(&c), &ext.generator(), &ext.one()) else { continue 'attempt };
                let r_ext: Matrix<ExtField<K>> = r.iter().map(|row| row.iter().map(|c| ext.embed(c)).collect()).collect();
                let a = mat3_apply(&ext, &r_ext, &u);
                let frame: Matrix<ExtField<K>> =
                    ltp.frame.iter().map(|row| row.iter().map(|c| ext.embed(c)).collect()).collect();
                let y = [ext.zero(), a[0].clone(), a[1].clone(), a[2].clone(), ext.zero()];
                let v = linalg::mat_vec(&ext, &frame, &y);
                let x: Vec<_> = ltp.point.iter().map(|c| ext.embed(c)).collect();
                out.push(LineOrbit::from_extension(mult, PluckerLine::from_points(ext.clone(), &x, &v)?)?);
            }
        }
        return Ok(out);
    }
    Err(Error::SamplingExhausted(format!("no separating projection found in {SAMPLING_BUDGET} attempts")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn k() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn line(p: &[u64], q: &[u64]) -> PluckerLine<PrimeField> {
        PluckerLine::from_points(k(), p, q).unwrap()
    }

    #[test]
    fn klein_at_e0() {
        let x = CubicThreefold::klein(k()).unwrap();
        let r = lines_through_point(&x, &[1, 0, 0, 0, 0], 0).unwrap();
        assert!(!r.eckardt);
        assert!(r.on_hessian);
        assert_eq!(r.total(), 6);
        let mult = |l: &PluckerLine<PrimeField>| r.fiber.iter().find(|o| o.is_line(l)).map(|o| o.multiplicity);
        assert_eq!(mult(&line(&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0])), Some(4));
        assert_eq!(mult(&line(&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0])), Some(2));
        assert_eq!(r.fiber.len(), 2);
    }

    #[test]
    fn fermat_eckardt_point() {
        let x = CubicThreefold::fermat(k()).unwrap();
        let r = lines_through_point(&x, &[1, 32002, 0, 0, 0], 0).unwrap();
        assert!(r.eckardt);
        assert!(r.fiber.is_empty());
    }

    #[test]
    fn errors() {
        let x = CubicThreefold::klein(k()).unwrap();
        assert_eq!(lines_through_point(&x, &[1, 1, 0, 0, 0], 0).unwrap_err(), Error::PointNotOnCubic);
        let cone = CubicThreefold::parse(k(), "x1^3 + x2^3 + x3^3 + x4^3").unwrap();
        assert_eq!(lines_through_point(&cone, &[1, 0, 0, 0, 0], 0).unwrap_err(), Error::SingularPoint);
    }

    #[test]
    fn fiber_lines_lie_on_the_cubic() {
        let x = CubicThreefold::parse(k(), "x0^2*x4 + x0*(x1^2 + x2^2 - x3^2 + x1*x4) + x1^3 + 2*x2^3 + 3*x3^3 + x1*x2*x3 + x4^3").unwrap();
        let r = lines_through_point(&x, &[1, 0, 0, 0, 0], 5).unwrap();
        assert_eq!(r.total(), 6);
        for o in &r.fiber {
            match &o.line {
                crate::projlin::OrbitLine::Rational(l) => assert!(x.contains_line(l).unwrap()),
                crate::projlin::OrbitLine::Extension(l) => {
                    let xe = x.lift(l.field()).unwrap();
                    assert!(xe.contains_line(l).unwrap());
                }
            }
        }
    }
}
