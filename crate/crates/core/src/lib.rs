//! Exact computations for contour algebras: bead-decorated Temperley-Lieb
//! diagram algebras with cyclic decorations restricted by depth.
//!
//! The crate is layered bottom-up: [`arith`] (exact scalars and
//! polynomials), [`diagram`] (planar diagrams and composition), [`algebra`]
//! (structure constants, idempotents, sections), [`modules`] (standard
//! modules and Gram matrices) and [`tower`] (localisation, globalisation and
//! the tower axiom checks).

pub mod algebra;
pub mod arith;
pub mod diagram;
pub mod error;
pub mod modules;
pub mod tower;

pub use error::{ContourError, Result};
