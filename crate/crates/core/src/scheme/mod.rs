//! Gröbner bases over prime fields, Hilbert series, and scheme invariants.

pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod klein;
pub mod mono;
pub mod poly;
pub mod solve;

pub use groebner::{groebner_basis, normal_form, pair_cap, Groebner, DEFAULT_PAIR_CAP};
pub use ideal::{
    groebner, ideal_degree, ideal_dimension, scheme_report, singular_locus_ideal, subsets, PolyIdeal,
    SchemeReport,
};
pub use mono::{Mono, MonoOrder, MAX_VARS};
pub use poly::{Poly, Ring};
