//! Idempotents kept as (pre-idempotent, normalizer) pairs.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::context::{AlgebraContext, AlgebraElement};
use crate::arith::{CycPolynomial, CyclotomicNumber, Field, Ring};
use crate::diagram::{Node, PlanarDiagram, Side};
use crate::error::{ContourError, Result};

/// `element / normalizer` is idempotent; `element^2 = normalizer * element`.
#[derive(Clone, Debug)]
pub struct PreIdempotent {
    pub element: AlgebraElement,
    pub normalizer: CycPolynomial,
}

impl PreIdempotent {
    pub fn is_idempotent(&self) -> Result<bool> {
        let sq = self.element.mul(&self.element)?;
        Ok(sq == self.element.scale(&self.normalizer))
    }

    /// Coefficients of the idempotent itself at a parameter point.
    pub fn specialize(&self, point: &[CyclotomicNumber]) -> Result<BTreeMap<usize, CyclotomicNumber>> {
        let norm = self.normalizer.evaluate(point)?;
        let inv = norm.inv().ok_or(ContourError::DivisionByZero)?;
        Ok(self
            .element
            .evaluate(point)?
            .into_iter()
            .map(|(i, c)| (i, c.mul(&inv)))
            .collect())
    }
}

/// i cup-caps on the 2i westernmost columns, `pivot` beads on each southern
/// arc, remaining strands straight.
pub fn cup_cap_diagram(n: usize, i: usize, pivot: u32, order: u32) -> PlanarDiagram {
    let mut lines: Vec<(Node, Node, u32)> = Vec::new();
    for k in 0..i {
        lines.push(((Side::North, 2 * k), (Side::North, 2 * k + 1), 0));
        lines.push(((Side::South, 2 * k), (Side::South, 2 * k + 1), pivot % order));
    }
    for c in 2 * i..n {
        lines.push(((Side::North, c), (Side::South, c), 0));
    }
    PlanarDiagram::from_lines(n, n, order, lines)
}

pub(crate) fn check_pivot(order: u32, pivot: u32) -> Result<()> {
    if pivot >= order {
        return Err(ContourError::InvalidPivot {
            pivot,
            reason: format!("must be below m = {}", order),
        });
    }
    Ok(())
}

/// e_{n,i} with the given pivot: the cup-cap diagram over d_pivot^i.
pub fn idempotent_e(ctx: &Arc<AlgebraContext>, i: usize, pivot: u32) -> Result<PreIdempotent> {
    let n = ctx.n();
    if 2 * i > n {
        return Err(ContourError::IdempotentOutOfRange { i, n });
    }
    check_pivot(ctx.order(), pivot)?;
    let diag = cup_cap_diagram(n, i, pivot, ctx.order());
    if !diag.is_depth_legal(ctx.depth()) {
        return Err(ContourError::InvalidPivot {
            pivot,
            reason: format!(
                "decorated arcs would have depth {} > d = {}",
                n - 2 * i + 1,
                ctx.depth()
            ),
        });
    }
    let mut exps = vec![0u32; ctx.order() as usize];
    exps[pivot as usize] = i as u32;
    Ok(PreIdempotent {
        element: ctx.from_diagram(&diag)?,
        normalizer: CycPolynomial::monomial(CyclotomicNumber::one(ctx.order()), exps),
    })
}

/// The character sum over powers of Tbar(j) with weights v^(i t); normalizer m.
pub fn epsilon(ctx: &Arc<AlgebraContext>, i: u32, j: usize) -> Result<PreIdempotent> {
    let (n, m) = (ctx.n(), ctx.order());
    if i < 1 || i > m {
        return Err(ContourError::Module(format!("label {} outside 1..={}", i, m)));
    }
    let t1 = PlanarDiagram::generator_tbar_checked(n, j, m, ctx.depth())?;
    let line = t1.line_of(j - 1);
    let mut elem = ctx.zero();
    for t in 0..m {
        let d = t1.with_bead(line, t);
        let idx = ctx
            .index_of(&d)
            .ok_or_else(|| ContourError::InvalidDiagram(d.to_string()))?;
        let c = CyclotomicNumber::nu_pow(m, i as i64 * t as i64);
        elem.add_term(idx, &CycPolynomial::constant(c));
    }
    Ok(PreIdempotent {
        element: elem,
        normalizer: CycPolynomial::from_integer(m, m as i64),
    })
}
