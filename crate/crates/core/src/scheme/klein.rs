//! End-to-end scheme certification for the Hessian surface of a cubic
//! threefold: H, its singular curve, B = X ∩ V(H), the singular points of
//! B, and the patchwise smoothness of the resolution B̂ ⊂ P⁴ × P⁴.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::groebner::Groebner;
use super::ideal::{scheme_report, singular_locus_ideal, PolyIdeal, SchemeReport};
use super::mono::MonoOrder;
use super::poly::{Poly, Ring};
use super::solve::length_and_distinct_points;
use crate::algebra::{MultiPoly, PrimeField, PrimeReduction, RationalField};
use crate::cubic::random::random_invertible;
use crate::cubic::CubicThreefold;
use crate::error::{Error, Result};

pub const PRIMALITY_COMMAND: &str = "isPrime substitute(B, x_0=>1)";

/// Expected invariants of the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Targets {
    pub hessian_degree: u32,
    pub hessian_singular: (i64, u64),
    pub b: (i64, u64),
    pub b_singular: (i64, u64),
    pub hyperplane_section_dim: i64,
}

pub const KLEIN_TARGETS: Targets = Targets {
    hessian_degree: 5,
    hessian_singular: (1, 20),
    b: (2, 15),
    b_singular: (0, 60),
    hyperplane_section_dim: 1,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatchResult {
    pub x: usize,
    pub y: usize,
    pub empty: bool,
    /// Number of 6×6 minors that survive reduction modulo the patch ideal.
    pub minors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCount {
    pub length: usize,
    pub distinct: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCertificate {
    pub p: u64,
    pub hessian_degree: Option<u32>,
    pub hessian_singular: SchemeReport,
    pub b: SchemeReport,
    pub b_singular: SchemeReport,
    /// Length and geometric point count of Sing(B) when it is finite.
    pub b_singular_points: Option<PointCount>,
    pub hyperplane_section: SchemeReport,
    pub patches: Vec<PatchResult>,
    pub checks: Vec<Check>,
}

impl PrimeCertificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The prime-independent part, used to compare primes.
    fn invariants(&self) -> impl PartialEq + '_ {
        (
            self.hessian_degree,
            (&self.hessian_singular.projective_dimension, &self.hessian_singular.degree),
            (&self.b.projective_dimension, &self.b.degree),
            (&self.b_singular.projective_dimension, &self.b_singular.degree),
            &self.b_singular_points,
            &self.hyperplane_section.projective_dimension,
            self.patches.iter().map(|q| q.empty).collect::<Vec<_>>(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CertificateStatus {
    Certified,
    Failed,
    /// The invariants were computed but there is nothing to compare them with.
    Reported,
    NotApplicable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Primality {
    pub status: String,
    pub command: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub cubic: String,
    pub hessian: String,
    pub outcome: CertificateStatus,
    pub consistent_across_primes: bool,
    pub primes: Vec<PrimeCertificate>,
    pub primality: Primality,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.outcome == CertificateStatus::Certified
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "cubic: {}", self.cubic);
        let _ = writeln!(s, "hessian: {}", self.hessian);
        for pc in &self.primes {
            let _ = writeln!(s, "prime {}:", pc.p);
            let _ = writeln!(s, "  deg H = {}", opt(&pc.hessian_degree));
            let _ = writeln!(s, "  Sing(H): {}", scheme_text(&pc.hessian_singular));
            let _ = writeln!(s, "  B = (F, H): {}", scheme_text(&pc.b));
            let _ = writeln!(s, "  Sing(B): {}", scheme_text(&pc.b_singular));
            if let Some(pt) = &pc.b_singular_points {
                let _ = writeln!(s, "  Sing(B) points: length {}, distinct {}", pt.length, pt.distinct);
            }
            let _ = writeln!(s, "  B + (x0): {}", scheme_text(&pc.hyperplane_section));
            if !pc.patches.is_empty() {
                let empty = pc.patches.iter().filter(|q| q.empty).count();
                let _ = writeln!(s, "  resolution patches empty: {}/{}", empty, pc.patches.len());
            }
            for c in &pc.checks {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "  [{mark}] {}: expected {}, got {}", c.name, c.expected, c.actual);
            }
        }
        let _ = writeln!(s, "consistent across primes: {}", self.consistent_across_primes);
        let _ = writeln!(s, "primality of B: {} (run `{}` in a CAS)", self.primality.status, self.primality.command);
        let verdict = match &self.outcome {
            CertificateStatus::Certified => "CERTIFIED".to_string(),
            CertificateStatus::Failed => "FAILED".to_string(),
            CertificateStatus::Reported => "REPORTED (no targets)".to_string(),
            CertificateStatus::NotApplicable { reason } => format!("NOT APPLICABLE: {reason}"),
        };
        let _ = writeln!(s, "result: {verdict}");
        s
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("none".into(), T::to_string)
}

fn scheme_text(r: &SchemeReport) -> String {
    format!("dim {}, deg {}", r.projective_dimension, opt(&r.degree))
}

/// Certifies the Klein cubic modulo two primes against its known invariants.
pub fn klein_certify(p1: u64, p2: u64) -> Result<Certificate> {
    let x = CubicThreefold::klein(RationalField)?;
    certify(&x, p1, p2, Some(&KLEIN_TARGETS))
}

/// Runs the certification pipeline modulo p1 and p2. Without targets the
/// invariants are only reported. A Hessian that is zero or a single
/// monomial (a union of coordinate hyperplanes) makes the pipeline
/// inapplicable.
pub fn certify<K: PrimeReduction>(x: &CubicThreefold<K>, p1: u64, p2: u64, targets: Option<&Targets>) -> Result<Certificate> {
    if p1 == p2 {
        return Err(Error::InvalidField(format!("the two primes must differ, got {p1} twice")));
    }
    let hessian = x.hessian();
    let cubic = x.f().to_string();
    let hessian_text = hessian.to_string();
    let primality = Primality { status: "NOT CERTIFIED".into(), command: PRIMALITY_COMMAND.into() };
    if hessian.num_terms() <= 1 {
        let reason = if hessian.is_zero() {
            "the Hessian vanishes identically".to_string()
        } else {
            "the Hessian is a product of coordinate hyperplanes".to_string()
        };
        return Ok(Certificate {
            cubic,
            hessian: hessian_text,
            outcome: CertificateStatus::NotApplicable { reason },
            consistent_across_primes: true,
            primes: Vec::new(),
            primality,
        });
    }
    let xs = [x.reduce_mod(p1)?, x.reduce_mod(p2)?];
    let (a, b) = rayon::join(|| certify_mod_p(&xs[0], targets), || certify_mod_p(&xs[1], targets));
    let primes = vec![a?, b?];
    let consistent = primes[0].invariants() == primes[1].invariants();
    let outcome = match targets {
        None => CertificateStatus::Reported,
        Some(_) if consistent && primes.iter().all(PrimeCertificate::passed) => CertificateStatus::Certified,
        Some(_) => CertificateStatus::Failed,
    };
    Ok(Certificate { cubic, hessian: hessian_text, outcome, consistent_across_primes: consistent, primes, primality })
}

fn check(name: &str, expected: String, actual: String) -> Check {
    let pass = expected == actual;
    Check { name: name.into(), expected, actual, pass }
}

fn target_report(dim: i64, deg: u64) -> String {
    format!("dim {dim}, deg {deg}")
}

/// All invariants of the pipeline over a single prime field.
pub fn certify_mod_p(x: &CubicThreefold<PrimeField>, targets: Option<&Targets>) -> Result<PrimeCertificate> {
    let k = x.field().clone();
    let p = k.p();
    let h = x.hessian().clone();
    let hessian_degree = h.homogeneous_degree();
    let h_ideal = PolyIdeal::new(5, p, &[h.clone()])?;
    let b_ideal = PolyIdeal::new(5, p, &[x.f().clone(), h])?;

    let hessian_singular = scheme_report(&singular_locus_ideal(&h_ideal, 1)?)?;
    let b = scheme_report(&b_ideal)?;
    let sing_b_ideal = singular_locus_ideal(&b_ideal, 2)?;
    let b_singular = scheme_report(&sing_b_ideal)?;
    let b_singular_points = if b_singular.projective_dimension == 0 {
        Some(affine_point_count(&sing_b_ideal, p)?)
    } else {
        None
    };
    let hyperplane_section = scheme_report(&b_ideal.sum(&[Poly::var(0)]))?;
    let patches = resolution_patches(x)?;

    let mut checks = Vec::new();
    if let Some(t) = targets {
        checks.push(check("deg H", t.hessian_degree.to_string(), opt(&hessian_degree)));
        checks.push(check(
            "Sing(H)",
            target_report(t.hessian_singular.0, t.hessian_singular.1),
            scheme_text(&hessian_singular),
        ));
        checks.push(check("B", target_report(t.b.0, t.b.1), scheme_text(&b)));
        checks.push(check("Sing(B)", target_report(t.b_singular.0, t.b_singular.1), scheme_text(&b_singular)));
        checks.push(check(
            "dim B + (x0)",
            t.hyperplane_section_dim.to_string(),
            hyperplane_section.projective_dimension.to_string(),
        ));
        let empty = patches.iter().filter(|q| q.empty).count();
        checks.push(check("resolution patches empty", "25/25".into(), format!("{empty}/{}", patches.len())));
    }
    Ok(PrimeCertificate {
        p,
        hessian_degree,
        hessian_singular,
        b,
        b_singular,
        b_singular_points,
        hyperplane_section,
        patches,
        checks,
    })
}

/// Length and number of distinct points of a finite projective scheme,
/// read off on the affine chart ℓ = 1 of a random linear form ℓ.
fn affine_point_count(ideal: &PolyIdeal, p: u64) -> Result<PointCount> {
    let k = ideal.field();
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let n = ideal.ring().nvars;
    let a = random_invertible(&k, n, &mut rng);
    let ring = *ideal.ring();
    let chart = ideal
        .linear_change(&a)
        .sum(&[Poly::var(0).sub(&ring, &Poly::constant(1))]);
    let (length, distinct) = length_and_distinct_points(&chart)?;
    Ok(PointCount { length, distinct })
}

/// The generators of B̂ = (F(x)) + (M_x · y) in x₀, …, x₄, y₀, …, y₄, where
/// M_x is the matrix of second partials of F.
fn resolution_generators(x: &CubicThreefold<PrimeField>) -> Result<Vec<MultiPoly<PrimeField>>> {
    let k = x.field().clone();
    let xmap: Vec<Option<usize>> = (0..5).map(Some).collect();
    let mut gens = vec![x.f().remap_vars(10, &xmap)?];
    for row in x.hessian_matrix() {
        let mut g = MultiPoly::zero(k.clone(), 10);
        for (b, entry) in row.iter().enumerate() {
            let term = entry.remap_vars(10, &xmap)?.checked_mul(&MultiPoly::var(k.clone(), 10, 5 + b))?;
            g = g.checked_add(&term)?;
        }
        gens.push(g);
    }
    Ok(gens)
}

/// For each patch xᵢ = 1, yⱼ = 1: is B̂ plus the maximal minors of its
/// affine Jacobian the unit ideal?
pub fn resolution_patches(x: &CubicThreefold<PrimeField>) -> Result<Vec<PatchResult>> {
    let p = x.field().p();
    let gens = resolution_generators(x)?;
    let jac: Vec<Vec<MultiPoly<PrimeField>>> = gens.iter().map(MultiPoly::gradient).collect();
    let ring = Ring::new(10, p, MonoOrder::Grevlex)?;
    let to_poly = |f: &MultiPoly<PrimeField>| Poly::from_multipoly(&ring, f);
    let gens: Vec<Poly> = gens.iter().map(to_poly).collect::<Result<_>>()?;
    let jac: Vec<Vec<Poly>> = jac.iter().map(|r| r.iter().map(to_poly).collect()).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (0..5).map(move |j| (i, j))).collect();
    pairs
        .into_par_iter()
        .map(|(i, j)| patch(&ring, &gens, &jac, i, 5 + j))
        .collect()
}

fn patch(ring: &Ring, gens: &[Poly], jac: &[Vec<Poly>], xi: usize, yj: usize) -> Result<PatchResult> {
    let spec = |f: &Poly| f.specialize(ring, xi, 1).specialize(ring, yj, 1);
    let mut gb = Groebner::new(*ring);
    gb.add_all(&gens.iter().map(spec).collect::<Vec<_>>());
    gb.run()?;
    let result = |empty, minors| PatchResult { x: xi, y: yj - 5, empty, minors };
    if gb.contains_one() {
        return Ok(result(true, 0));
    }
    let cols: Vec<usize> = (0..10).filter(|&c| c != xi && c != yj).collect();
    let entries: Vec<Vec<Poly>> = jac.iter().map(|r| cols.iter().map(|&c| gb.reduce(&spec(&r[c]), true)).collect()).collect();
    let minors: Vec<Poly> = maximal_minors(ring, &entries, |f| gb.reduce(f, true)).into_iter().filter(|m| !m.is_zero()).collect();
    gb.add_all(&minors);
    gb.run()?;
    Ok(result(gb.contains_one(), minors.len()))
}

/// All maximal minors of a rows × cols matrix (rows ≤ cols ≤ 32) by Laplace
/// expansion along successive rows, reducing every partial minor.
fn maximal_minors(ring: &Ring, m: &[Vec<Poly>], reduce: impl Fn(&Poly) -> Poly) -> Vec<Poly> {
    let rows = m.len();
    let cols = m[0].len();
    let mut level: HashMap<u32, Poly> = HashMap::new();
    level.insert(0, Poly::constant(1));
    for (r, row) in m.iter().enumerate() {
        let mut next: HashMap<u32, Poly> = HashMap::new();
        for set in subsets_mask(cols, r + 1) {
            let mut acc = Poly::zero();
            for (pos, c) in (0..cols).filter(|c| set >> c & 1 == 1).enumerate() {
                let Some(sub) = level.get(&(set & !(1 << c))) else { continue };
                if sub.is_zero() || row[c].is_zero() {
                    continue;
                }
                let term = row[c].mul(ring, sub);
                acc = if (r + pos) % 2 == 0 { acc.add(ring, &term) } else { acc.sub(ring, &term) };
            }
            next.insert(set, reduce(&acc));
        }
        level = next;
    }
    let mut out: Vec<(u32, Poly)> = level.into_iter().filter(|(s, _)| s.count_ones() as usize == rows).collect();
    out.sort_by_key(|(s, _)| *s);
    out.into_iter().map(|(_, p)| p).collect()
}

fn subsets_mask(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |s| s.count_ones() as usize == k)
}
