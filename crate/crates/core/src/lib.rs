//! Exact computational geometry of cubic threefolds in P⁴ and their lines.

pub mod algebra;
pub mod cubic;
pub mod error;
pub mod projlin;
pub mod scheme;
pub mod specialpos;

pub use error::{Error, Result};
