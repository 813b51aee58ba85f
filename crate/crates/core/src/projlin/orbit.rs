use serde::Serialize;

use super::plucker::{lines_meet, LineJson, PluckerLine};
use crate::algebra::{ExtField, Field, FieldDescriptor, FiniteField};
use crate::error::Result;

/// A line defined over K, or one representative of a Galois orbit of
/// conjugate lines defined over a proper extension of K.
#[derive(Debug, Clone, PartialEq)]
pub enum OrbitLine<K: FiniteField> {
    Rational(PluckerLine<K>),
    Extension(PluckerLine<ExtField<K>>),
}

/// A line orbit counted with multiplicity. The orbit contributes
/// `multiplicity · ext_degree` to counts over the algebraic closure.
#[derive(Debug, Clone, PartialEq)]
pub struct LineOrbit<K: FiniteField> {
    pub multiplicity: usize,
    pub line: OrbitLine<K>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitJson {
    pub line: LineJson,
    pub mult: usize,
    pub ext_degree: usize,
    /// Minimal polynomial of the extension generator z, constant term first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<Vec<String>>,
}

/// Embeds a K-line into an extension.
pub fn lift_line<K: FiniteField>(ext: &ExtField<K>, l: &PluckerLine<K>) -> Result<PluckerLine<ExtField<K>>> {
    let [p, q] = l.points();
    let lift = |v: &Vec<K::Elem>| v.iter().map(|c| ext.embed(c)).collect::<Vec<_>>();
    PluckerLine::from_points(ext.clone(), &lift(p), &lift(q))
}

impl<K: FiniteField> LineOrbit<K> {
    pub fn rational(multiplicity: usize, line: PluckerLine<K>) -> Self {
        LineOrbit { multiplicity, line: OrbitLine::Rational(line) }
    }

    /// Wraps a line over an extension, collapsing to a rational line when
    /// all its Plücker coordinates lie in K.
    pub fn from_extension(multiplicity: usize, line: PluckerLine<ExtField<K>>) -> Result<Self> {
        let ext = line.field().clone();
        let base: Option<Vec<K::Elem>> = line.plucker().iter().map(|c| ext.as_base(c)).collect();
        Ok(match base {
            Some(p) => LineOrbit::rational(multiplicity, PluckerLine::from_plucker(ext.base().clone(), &p)?),
            None => LineOrbit { multiplicity, line: OrbitLine::Extension(line) },
        })
    }

    pub fn ext_degree(&self) -> usize {
        match &self.line {
            OrbitLine::Rational(_) => 1,
            OrbitLine::Extension(l) => l.field().degree(),
        }
    }

    /// Number of lines over the closure, with multiplicity.
    pub fn weight(&self) -> usize {
        self.multiplicity * self.ext_degree()
    }

    pub fn as_rational(&self) -> Option<&PluckerLine<K>> {
        match &self.line {
            OrbitLine::Rational(l) => Some(l),
            OrbitLine::Extension(_) => None,
        }
    }

    /// K-vectors spanning the same space as the Plücker points of all
    /// conjugates: the coordinate vectors of the representative in the
    /// power basis of the extension.
    pub fn plucker_components(&self) -> Vec<Vec<K::Elem>> {
        match &self.line {
            OrbitLine::Rational(l) => vec![l.plucker().to_vec()],
            OrbitLine::Extension(l) => {
                let ext = l.field();
                (0..ext.degree())
                    .map(|j| l.plucker().iter().map(|c| ext.components(c)[j].clone()).collect())
                    .collect()
            }
        }
    }

    /// Whether the orbit meets a K-line (one conjugate does iff all do).
    pub fn meets(&self, other: &PluckerLine<K>) -> Result<bool> {
        match &self.line {
            OrbitLine::Rational(l) => lines_meet(l, other),
            OrbitLine::Extension(l) => lines_meet(l, &lift_line(l.field(), other)?),
        }
    }

    pub fn is_line(&self, other: &PluckerLine<K>) -> bool {
        self.as_rational() == Some(other)
    }

    pub fn field_descriptor(&self) -> FieldDescriptor {
        match &self.line {
            OrbitLine::Rational(l) => l.field().descriptor(),
            OrbitLine::Extension(l) => l.field().descriptor(),
        }
    }

    pub fn coords(&self) -> Vec<String> {
        match &self.line {
            OrbitLine::Rational(l) => l.format_coords(),
            OrbitLine::Extension(l) => l.format_coords(),
        }
    }

    pub fn to_json(&self) -> OrbitJson {
        match &self.line {
            OrbitLine::Rational(l) => OrbitJson { line: l.to_json(), mult: self.multiplicity, ext_degree: 1, minpoly: None },
            OrbitLine::Extension(l) => {
                let ext = l.field();
                OrbitJson {
                    line: l.to_json(),
                    mult: self.multiplicity,
                    ext_degree: ext.degree(),
                    minpoly: Some(ext.modulus().iter().map(|c| ext.base().format_elem(c)).collect()),
                }
            }
        }
    }
}
