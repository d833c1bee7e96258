//! Multiqubit entanglement measures and numerical checks of tightened
//! monogamy and polygamy inequalities.
//!
//! Qubit 0 is the most significant bit of an amplitude index. Bounds are
//! evaluated on pure global states; pairwise reductions use the two-qubit
//! closed forms.

pub mod bounds;
mod error;
pub mod figures;
pub mod gallery;
pub mod measures;
pub mod qcore;
pub mod report;
pub mod runner;

pub use error::{Error, Result};
