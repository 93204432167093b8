//! Planar bead diagrams: depth, composition, reflection and enumeration.

mod arrow;
mod enumerate;
mod planar;

pub use arrow::{arrow_word_to_bead, ArrowGenerator};
pub use enumerate::{catalan, enumerate_basis, enumerate_pairings};
pub use planar::{LoopMonomial, Node, PlanarDiagram, Side};

/// Maximum depth at which lines may carry beads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DepthBound {
    Finite(usize),
    Infinite,
}
