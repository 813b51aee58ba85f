use num_complex::Complex64;
use rand::{Rng, RngCore};

use super::field::{Field, FieldDescriptor};
use crate::error::{Error, Result};

pub const DEFAULT_EPS: f64 = 1e-9;

/// Floating-point complex numbers compared with relative tolerance `eps`.
/// Only for numeric cross-checks; never used on certification paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexField {
    pub eps: f64,
}

impl Default for ComplexField {
    fn default() -> Self {
        ComplexField { eps: DEFAULT_EPS }
    }
}

impl ComplexField {
    pub fn approx_eq(&self, a: &Complex64, b: &Complex64) -> bool {
        let scale = 1f64.max(a.norm()).max(b.norm());
        (a - b).norm() <= self.eps * scale
    }
}

impl Field for ComplexField {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(&self, n: i64) -> Complex64 {
        Complex64::new(n as f64, 0.0)
    }
    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }
    fn sub(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a - b
    }
    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }
    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }
    fn inv(&self, a: &Complex64) -> Option<Complex64> {
        (!self.is_zero(a)).then(|| a.inv())
    }
    fn is_zero(&self, a: &Complex64) -> bool {
        a.norm() <= self.eps
    }
    fn elem_eq(&self, a: &Complex64, b: &Complex64) -> bool {
        self.approx_eq(a, b)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Complex { eps: self.eps }
    }
    fn parse_elem(&self, s: &str) -> Result<Complex64> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid complex number {s:?}")))
    }
    fn format_elem(&self, a: &Complex64) -> String {
        a.to_string()
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> Complex64 {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }
}

/// Roots of a univariate polynomial (coefficients lowest degree first) by
/// Aberth–Ehrlich iteration, clustered into (root, multiplicity) pairs at
/// tolerance `eps`.
pub fn roots_with_multiplicity(coeffs: &[Complex64], eps: f64) -> Vec<(Complex64, usize)> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lc = c[n];
    let monic: Vec<Complex64> = c.iter().map(|x| x / lc).collect();
    let bound = 1.0 + monic[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| Complex64::from_polar(bound * 0.5, 0.4 + 2.0 * std::f64::consts::PI * i as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + a;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm());
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // Multiple roots converge only to about eps^(1/m); cluster loosely.
    let tol = eps.sqrt().max(1e-6);
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        let mut members = vec![z[i]];
        used[i] = true;
        for j in i + 1..n {
            if !used[j] && (z[i] - z[j]).norm() <= tol * 1f64.max(z[i].norm()) {
                used[j] = true;
                members.push(z[j]);
            }
        }
        let centre = members.iter().sum::<Complex64>() / members.len() as f64;
        out.push((centre, members.len()));
    }
    out
}
