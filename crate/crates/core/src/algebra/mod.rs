//! Exact fields, univariate factorization and sparse multivariate
//! polynomials.

pub mod binary;
pub mod complex;
pub mod det;
pub mod ext;
pub mod factor;
pub mod field;
pub mod gcd;
pub mod io;
pub mod linalg;
pub mod multipoly;
pub mod prime;
pub mod rational;
pub mod univariate;

pub use binary::BinaryForm;
pub use complex::ComplexField;
pub use det::det_poly_matrix;
pub use ext::ExtField;
pub use field::{Field, FieldDescriptor, FiniteField, PrimeReduction};
pub use gcd::{poly_gcd, resultant};
pub use io::{parse_poly, AnyPoly, PolyJson};
pub use multipoly::{poly_arith, ArithOp, Monomial, MultiPoly};
pub use prime::{PrimeField, CROSS_CHECK_PRIME, DEFAULT_PRIME};
pub use rational::RationalField;
