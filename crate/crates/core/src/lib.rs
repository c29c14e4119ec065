//! Numerical laboratory for the Fefferman surface measure on strongly
//! pseudoconvex hypersurfaces in C^2.
//!
//! The crate is organized around the pipeline
//! `calculus` (pointwise jets and densities) -> `quad` (grids) ->
//! `measures` (surface functionals F, V, Q) -> `variation` (first and
//! second variation) -> `families` (special families and inequality
//! studies), with `sphere` providing exact polynomial algebra on S^3.

pub mod calculus;
pub mod error;
pub mod exact;
pub mod families;
pub mod fit;
pub mod measures;
pub mod quad;
pub mod sphere;
pub mod variation;

pub use error::{Error, Result};
