//! Translation from the arrow presentation to bead diagrams.
//!
//! An arrow on strand i points one way on odd strands and the other way on
//! even ones once the strands are straightened, so `T(i)` becomes one bead on
//! odd strands and `m - 1` beads on even strands.

use serde::{Deserialize, Serialize};

use super::planar::{LoopMonomial, PlanarDiagram};
use super::DepthBound;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArrowGenerator {
    E(usize),
    T(usize),
}

impl ArrowGenerator {
    /// Bead-diagram image of a single generator.
    pub fn to_bead(self, n: usize, order: u32, d: DepthBound) -> Result<PlanarDiagram> {
        match self {
            ArrowGenerator::E(i) => PlanarDiagram::generator_e(n, i, order),
            ArrowGenerator::T(i) => {
                let t = PlanarDiagram::generator_tbar_checked(n, i, order, d)?;
                Ok(if i % 2 == 1 {
                    t
                } else {
                    t.with_bead(t.line_of(i - 1), order - 1)
                })
            }
        }
    }
}

/// Multiplies out the image of a word (leftmost factor on top).
pub fn arrow_word_to_bead(
    n: usize,
    order: u32,
    d: DepthBound,
    word: &[ArrowGenerator],
) -> Result<(LoopMonomial, PlanarDiagram)> {
    let mut loops = LoopMonomial::empty(order);
    let mut acc = PlanarDiagram::identity(n, order);
    for g in word {
        let (l, next) = acc.compose(&g.to_bead(n, order, d)?)?;
        loops = loops.combine(&l);
        acc = next;
    }
    Ok((loops, acc))
}
