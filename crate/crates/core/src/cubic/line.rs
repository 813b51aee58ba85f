use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::point::{lines_through_point, SAMPLING_BUDGET};
use super::CubicThreefold;
use crate::algebra::linalg;
use crate::algebra::{BinaryForm, ExtField, Field, FiniteField};
use crate::error::{Error, Result};
use crate::projlin::{lift_line, LineOrbit, OrbitJson, OrbitLine, PluckerLine, ProjSubspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineType {
    First,
    Second,
}

/// A line on X with its normal quadrics: the partials ∂F/∂y₂, ∂F/∂y₃,
/// ∂F/∂y₄ in a frame where the line is {y₂ = y₃ = y₄ = 0}, restricted to it.
#[derive(Debug, Clone, PartialEq)]
pub struct LineOnCubic<K: Field> {
    pub line: PluckerLine<K>,
    pub normal_quadrics: [BinaryForm<K>; 3],
    pub line_type: LineType,
}

impl<K: Field> LineOnCubic<K> {
    pub fn new(x: &CubicThreefold<K>, l: &PluckerLine<K>) -> Result<Self> {
        if !x.contains_line(l)? {
            return Err(Error::LineNotOnCubic);
        }
        let k = x.field();
        let [p, q] = l.points();
        let restricted: Vec<BinaryForm<K>> =
            x.gradient().iter().map(|g| g.restrict_to_line(p, q)).collect::<Result<_>>()?;
        let mut basis = vec![p.clone(), q.clone()];
        for i in 0..5 {
            let mut e = vec![k.zero(); 5];
            e[i] = k.one();
            let mut trial = basis.clone();
            trial.push(e);
            if linalg::rank(k, &trial) == trial.len() {
                basis = trial;
            }
        }
        let normal: Vec<BinaryForm<K>> = basis[2..]
            .iter()
            .map(|b| {
                let coeffs = (0..3)
                    .map(|d| {
                        let mut acc = k.zero();
                        for (bi, r) in b.iter().zip(&restricted) {
                            acc = k.add(&acc, &k.mul(bi, &r.coeffs()[d]));
                        }
                        acc
                    })
                    .collect();
                BinaryForm::new(k.clone(), coeffs)
            })
            .collect();
        let rows: Vec<Vec<K::Elem>> = normal.iter().map(|f| f.coeffs().to_vec()).collect();
        let line_type = match linalg::rank(k, &rows) {
            3 => LineType::First,
            2 => LineType::Second,
            r => return Err(Error::SingularAlongLine(r)),
        };
        let [a, b, c]: [BinaryForm<K>; 3] = normal.try_into().expect("three normal directions");
        Ok(LineOnCubic { line: l.clone(), normal_quadrics: [a, b, c], line_type })
    }
}

/// First or second type, from the rank of the normal quadrics.
pub fn line_type<K: Field>(x: &CubicThreefold<K>, l: &PluckerLine<K>) -> Result<LineType> {
    Ok(LineOnCubic::new(x, l)?.line_type)
}

/// Independent check: a plane containing the line lies in every tangent
/// hyperplane along it iff the tangent hyperplanes at three points of the
/// line share a plane.
pub fn line_type_oracle<K: Field>(x: &CubicThreefold<K>, l: &PluckerLine<K>) -> Result<LineType> {
    if !x.contains_line(l)? {
        return Err(Error::LineNotOnCubic);
    }
    let k = x.field();
    let [p, q] = l.points();
    let pq: Vec<K::Elem> = p.iter().zip(q).map(|(a, b)| k.add(a, b)).collect();
    let mut common = ProjSubspace::whole(k.clone(), 4);
    for pt in [p, q, &pq] {
        let g = x.gradient_at(pt)?;
        if g.iter().all(|c| k.is_zero(c)) {
            return Err(Error::SingularPoint);
        }
        let tangent = ProjSubspace::new(k.clone(), 4, &linalg::nullspace(k, &[g], 5))?;
        common = common.meet(&tangent)?;
    }
    Ok(if common.dim() >= 2 { LineType::Second } else { LineType::First })
}

/// The lines through a point x of L other than L, and L's multiplicity.
#[derive(Debug, Clone)]
pub struct IncidenceFiber<K: FiniteField> {
    pub field: K,
    pub point: Vec<K::Elem>,
    pub line_multiplicity: usize,
    pub residual: Vec<LineOrbit<K>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IncidenceFiberJson {
    pub point: Vec<String>,
    pub line_multiplicity: usize,
    pub residual_count: usize,
    pub residual: Vec<OrbitJson>,
}

impl<K: FiniteField> IncidenceFiber<K> {
    /// Residual lines over the closure, with multiplicity.
    pub fn residual_count(&self) -> usize {
        self.residual.iter().map(LineOrbit::weight).sum()
    }

    /// Residual lines over the closure, each counted once.
    pub fn distinct_residual(&self) -> usize {
        self.residual.iter().map(LineOrbit::ext_degree).sum()
    }

    pub fn to_json(&self) -> IncidenceFiberJson {
        IncidenceFiberJson {
            point: self.point.iter().map(|c| self.field.format_elem(c)).collect(),
            line_multiplicity: self.line_multiplicity,
            residual_count: self.residual_count(),
            residual: self.residual.iter().map(LineOrbit::to_json).collect(),
        }
    }
}

pub fn incidence_fiber<K: FiniteField>(
    x: &CubicThreefold<K>,
    l: &PluckerLine<K>,
    point: &[K::Elem],
    seed: u64,
) -> Result<IncidenceFiber<K>> {
    if !x.contains_line(l)? {
        return Err(Error::LineNotOnCubic);
    }
    if !l.contains_point(point) {
        return Err(Error::PointNotOnLine);
    }
    let ltp = lines_through_point(x, point, seed)?;
    if ltp.eckardt {
        return Err(Error::EckardtPoint);
    }
    let mut line_multiplicity = 0;
    let mut residual = Vec::new();
    for o in ltp.fiber {
        if o.is_line(l) {
            line_multiplicity = o.multiplicity;
        } else {
            residual.push(o);
        }
    }
    Ok(IncidenceFiber { field: x.field().clone(), point: point.to_vec(), line_multiplicity, residual })
}

/// Incidence fibers at `count` random points of L, skipping Eckardt points.
pub fn incidence_fibers_at_random_points<K: FiniteField>(
    x: &CubicThreefold<K>,
    l: &PluckerLine<K>,
    count: usize,
    seed: u64,
) -> Result<Vec<IncidenceFiber<K>>> {
    let k = x.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut misses = 0;
    while out.len() < count {
        let s = k.random_elem(&mut rng);
        let t = k.random_nonzero(&mut rng);
        let pt = l.point_at(&s, &t);
        match incidence_fiber(x, l, &pt, seed.wrapping_add(out.len() as u64)) {
            Ok(f) => out.push(f),
            Err(Error::EckardtPoint) => {
                misses += 1;
                if misses >= SAMPLING_BUDGET {
                    return Err(Error::SamplingExhausted("every sampled point was an Eckardt point".into()));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// The lines in the plane of a coplanar triple through a point of H ∩ L.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoplanarTriple {
    pub lines: Vec<OrbitJson>,
    /// Lines in the plane over the closure, with multiplicity.
    pub weight: usize,
    /// Rank of the Plücker vectors of all lines in the plane.
    pub plucker_rank: usize,
    pub collinear: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum RootCheck {
    /// Multiple roots are reported without a triple.
    MultipleRoot,
    Eckardt,
    /// The direction of L is the vertex of the singular conic.
    Vertex,
    Triple(CoplanarTriple),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceRoot {
    pub multiplicity: usize,
    pub ext_degree: usize,
    /// Coordinates over the field of definition of the root.
    pub point: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<Vec<String>>,
    #[serde(flatten)]
    pub check: RootCheck,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum HessianTrace {
    ContainedInHessian,
    Roots {
        /// Coefficients of H(s·p + t·q), from s⁵ down to t⁵.
        quintic: Vec<String>,
        total: usize,
        roots: Vec<TraceRoot>,
    },
}

/// Points of L on the Hessian with multiplicities; at each simple
/// non-Eckardt root, the coplanar triple of lines through it.
pub fn hessian_trace<K: FiniteField>(x: &CubicThreefold<K>, l: &PluckerLine<K>, seed: u64) -> Result<HessianTrace> {
    if !x.contains_line(l)? {
        return Err(Error::LineNotOnCubic);
    }
    let k = x.field();
    let [p, q] = l.points();
    let quintic = x.hessian().restrict_to_line(p, q)?;
    if quintic.is_zero() {
        return Ok(HessianTrace::ContainedInHessian);
    }
    let mut roots = Vec::new();
    for (h, mult) in quintic.factor(seed)? {
        if h.degree() == 1 {
            let hc = h.coeffs();
            let (s0, s1) = if k.is_zero(&hc[0]) { (k.one(), k.zero()) } else { (k.neg(&hc[1]), hc[0].clone()) };
            let pt = l.point_at(&s0, &s1);
            let check = if mult == 1 { examine_root(x, l, &pt, seed)? } else { RootCheck::MultipleRoot };
            roots.push(TraceRoot {
                multiplicity: mult,
                ext_degree: 1,
                point: pt.iter().map(|c| k.format_elem(c)).collect(),
                minpoly: None,
                check,
            });
        } else {
            let ext = ExtField::new(k.clone(), h.dehomogenize())?;
            let le = lift_line(&ext, l)?;
            let pt = le.point_at(&ext.generator(), &ext.one());
            let check = if mult == 1 { examine_root(&x.lift(&ext)?, &le, &pt, seed)? } else { RootCheck::MultipleRoot };
            roots.push(TraceRoot {
                multiplicity: mult,
                ext_degree: ext.degree(),
                point: pt.iter().map(|c| ext.format_elem(c)).collect(),
                minpoly: Some(ext.modulus().iter().map(|c| k.format_elem(c)).collect()),
                check,
            });
        }
    }
    let total = roots.iter().map(|r| r.multiplicity * r.ext_degree).sum();
    Ok(HessianTrace::Roots { quintic: quintic.coeffs().iter().map(|c| k.format_elem(c)).collect(), total, roots })
}

fn orbit_in_plane<F: FiniteField>(o: &LineOrbit<F>, plane: &ProjSubspace<F>) -> Result<bool> {
    Ok(match &o.line {
        OrbitLine::Rational(l) => plane.contains(&l.subspace()),
        OrbitLine::Extension(l) => {
            let ext = l.field();
            let rows: Vec<Vec<_>> = plane.basis().iter().map(|r| r.iter().map(|c| ext.embed(c)).collect()).collect();
            ProjSubspace::new(ext.clone(), 4, &rows)?.contains(&l.subspace())
        }
    })
}

fn examine_root<F: FiniteField>(x: &CubicThreefold<F>, l: &PluckerLine<F>, pt: &[F::Elem], seed: u64) -> Result<RootCheck> {
    let k = x.field();
    let ltp = lines_through_point(x, pt, seed)?;
    if ltp.eckardt {
        return Ok(RootCheck::Eckardt);
    }
    let w = l
        .points()
        .iter()
        .find(|w| linalg::rank(k, &[pt.to_vec(), w.to_vec()]) == 2)
        .expect("a line has two independent points")
        .clone();
    let a = ltp.direction_of(&w).expect("L lies in the tangent hyperplane");
    let grad: Vec<F::Elem> = ltp.conic.gradient().iter().map(|g| g.eval(&a)).collect::<Result<_>>()?;
    if grad.iter().all(|c| k.is_zero(c)) {
        return Ok(RootCheck::Vertex);
    }
    let mut rows = vec![pt.to_vec()];
    for b in linalg::nullspace(k, &[grad], 3) {
        rows.push(ltp.point_of_direction(&b));
    }
    let plane = ProjSubspace::new(k.clone(), 4, &rows)?;
    let mut members = Vec::new();
    for o in &ltp.fiber {
        if orbit_in_plane(o, &plane)? {
            members.push(o);
        }
    }
    let vectors: Vec<Vec<F::Elem>> = members.iter().flat_map(|o| o.plucker_components()).collect();
    let plucker_rank = linalg::rank(k, &vectors);
    let weight = members.iter().map(|o| o.weight()).sum();
    Ok(RootCheck::Triple(CoplanarTriple {
        lines: members.iter().map(|o| o.to_json()).collect(),
        weight,
        plucker_rank,
        collinear: plucker_rank == 2,
    }))
}
