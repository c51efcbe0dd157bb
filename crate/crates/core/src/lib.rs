//! Brauer algebras of dihedral type I₂ⁿ realized inside Brauer diagram
//! algebras of type A_{n−1}.
//!
//! - [`diagram`]: Brauer diagrams, multiplication with loop counting, monoid closure.
//! - [`roots`]: positive roots of A_t, admissible sets and the monoid action on them.
//! - [`dihedral`]: the dihedral group W(I₂ⁿ) in reduced-word normal form.
//! - [`presentation`]: the defining relations of BrM(I₂ⁿ) and its normal forms.
//! - [`embedding`]: the map φ, the δ-exponent solver, rank and orbit checks.
//! - [`particle`]: the billiard in a `2m × 2k` box that selects the ξ relations.
//! - [`render`]: ASCII and SVG pictures of diagrams.

pub mod diagram;
pub mod dihedral;
pub mod embedding;
pub mod error;
pub mod particle;
pub mod presentation;
pub mod render;
pub mod roots;

pub use diagram::{BrauerDiagram, DiagramSet};
pub use error::{Error, Result};
