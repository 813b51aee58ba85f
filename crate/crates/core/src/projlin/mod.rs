//! Projective linear algebra: subspaces, Plücker lines, incidences,
//! common transversals and quadrics through skew lines.

pub mod orbit;
pub mod plucker;
pub mod quadric;
pub mod subspace;
pub mod transversal;

pub use plucker::{line_meets_plane, lines_meet, plucker_pairing, plucker_relations, LineJson, PluckerLine, SubspaceJson};
pub use quadric::{quadric_through_skew_lines, QuadricThroughLines};
pub use subspace::{span_meet, ProjSubspace, SpanMeet};
pub use transversal::{common_transversals, transversal_count, InfiniteFamily, TransversalResult};
pub use orbit::{lift_line, LineOrbit, OrbitJson, OrbitLine};
