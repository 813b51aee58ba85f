//! Cubic threefolds in P⁴: lines through points, the Hessian, line types,
//! incidence fibers and Hessian traces.

mod line;
mod point;
pub mod random;
mod smooth;

use std::sync::OnceLock;

use crate::algebra::{det_poly_matrix, parse_poly, ExtField, Field, FiniteField, MultiPoly, PrimeField, PrimeReduction};
use crate::error::{Error, Result};
use crate::projlin::PluckerLine;

pub use line::{
    hessian_trace, incidence_fiber, incidence_fibers_at_random_points, line_type, line_type_oracle, CoplanarTriple,
    HessianTrace, IncidenceFiber, IncidenceFiberJson, LineOnCubic, LineType, RootCheck, TraceRoot,
};
pub use point::{lines_through_point, LinesThroughPoint, LinesThroughPointJson, SAMPLING_BUDGET};
pub use smooth::{is_smooth, is_smooth_two_primes, SmoothnessVerdict};

pub const KLEIN: &str = "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0";
pub const FERMAT: &str = "x0^3 + x1^3 + x2^3 + x3^3 + x4^3";

/// A cubic hypersurface X = V(F) ⊂ P⁴ with its derivatives.
#[derive(Debug, Clone)]
pub struct CubicThreefold<K: Field> {
    f: MultiPoly<K>,
    gradient: Vec<MultiPoly<K>>,
    hessian_matrix: Vec<Vec<MultiPoly<K>>>,
    hessian: OnceLock<MultiPoly<K>>,
}

impl<K: Field> PartialEq for CubicThreefold<K> {
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f
    }
}

impl<K: Field> CubicThreefold<K> {
    pub fn new(f: MultiPoly<K>) -> Result<Self> {
        if f.nvars() != 5 {
            return Err(Error::VarCountMismatch(f.nvars(), 5));
        }
        if f.is_zero() {
            return Err(Error::Dimension("the zero polynomial is not a cubic".into()));
        }
        if f.homogeneous_degree() != Some(3) {
            return Err(Error::NonHomogeneous);
        }
        let ch = f.field().characteristic();
        if ch == 2 || ch == 3 {
            return Err(Error::InvalidField(format!("characteristic {ch} is not supported")));
        }
        let gradient = f.gradient();
        let hessian_matrix = f.hessian_matrix();
        Ok(CubicThreefold { f, gradient, hessian_matrix, hessian: OnceLock::new() })
    }

    pub fn parse(field: K, s: &str) -> Result<Self> {
        Self::new(parse_poly(field, 5, s)?)
    }

    /// x₀²x₁ + x₁²x₂ + x₂²x₃ + x₃²x₄ + x₄²x₀.
    pub fn klein(field: K) -> Result<Self> {
        Self::parse(field, KLEIN)
    }

    /// Σ xᵢ³.
    pub fn fermat(field: K) -> Result<Self> {
        Self::parse(field, FERMAT)
    }

    pub fn field(&self) -> &K {
        self.f.field()
    }

    pub fn f(&self) -> &MultiPoly<K> {
        &self.f
    }

    pub fn gradient(&self) -> &[MultiPoly<K>] {
        &self.gradient
    }

    pub fn hessian_matrix(&self) -> &[Vec<MultiPoly<K>>] {
        &self.hessian_matrix
    }

    /// det of the matrix of second partials: a quintic form, or zero.
    pub fn hessian(&self) -> &MultiPoly<K> {
        self.hessian
            .get_or_init(|| det_poly_matrix(&self.hessian_matrix).expect("5×5 matrix of linear forms"))
    }

    pub fn eval(&self, x: &[K::Elem]) -> Result<K::Elem> {
        self.f.eval(x)
    }

    pub fn gradient_at(&self, x: &[K::Elem]) -> Result<Vec<K::Elem>> {
        self.gradient.iter().map(|g| g.eval(x)).collect()
    }

    pub fn contains_point(&self, x: &[K::Elem]) -> Result<bool> {
        Ok(self.field().is_zero(&self.eval(x)?))
    }

    /// True iff F vanishes identically on the line.
    pub fn contains_line(&self, l: &PluckerLine<K>) -> Result<bool> {
        if l.ambient() != 4 {
            return Err(Error::Dimension(format!("line lives in P{}, expected P4", l.ambient())));
        }
        let [p, q] = l.points();
        Ok(self.f.restrict_to_line(p, q)?.is_zero())
    }

    /// Same cubic over another field via a coefficient map.
    pub fn map_field<L: Field>(&self, target: L, f: impl Fn(&K::Elem) -> L::Elem) -> Result<CubicThreefold<L>> {
        CubicThreefold::new(self.f.map_field(target, f))
    }

    /// Reduction modulo p.
    pub fn reduce_mod(&self, p: u64) -> Result<CubicThreefold<PrimeField>>
    where
        K: PrimeReduction,
    {
        let fp = PrimeField::new(p)?;
        let k = self.field().clone();
        let g = self.f.try_map_field(fp, |c| {
            k.reduce(c, p).ok_or_else(|| Error::BadReduction { p, reason: format!("coefficient {} has a denominator divisible by p", k.format_elem(c)) })
        })?;
        if g.homogeneous_degree() != Some(3) {
            return Err(Error::BadReduction { p, reason: "the cubic vanishes modulo p".into() });
        }
        CubicThreefold::new(g)
    }
}

impl<K: FiniteField> CubicThreefold<K> {
    pub fn lift(&self, ext: &ExtField<K>) -> Result<CubicThreefold<ExtField<K>>> {
        self.map_field(ext.clone(), |c| ext.embed(c))
    }
}
