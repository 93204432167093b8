//! The corner isomorphism e A_n e with A_{n-2}.
//!
//! With P the single cup-cap on columns 0 and 1 (pivot beads on the southern
//! arc), the map sends D to (P beside D) / d_pivot.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::context::{AlgebraContext, AlgebraElement};
use super::idempotent::{check_pivot, cup_cap_diagram, PreIdempotent};
use crate::arith::{CycPolynomial, Ring};
use crate::diagram::{PlanarDiagram, Side};
use crate::error::{ContourError, Result};

/// Pair counts above this switch multiplicativity checks to generators times basis.
pub const PAIR_GUARD: usize = 2_000_000;

pub struct CornerIso {
    big: Arc<AlgebraContext>,
    small: Arc<AlgebraContext>,
    pivot: u32,
    forward: Vec<usize>,
    backward: HashMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerReport {
    pub n: usize,
    pub pivot: u32,
    pub corner_dim: usize,
    pub small_dim: usize,
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub bijective: bool,
    pub closed: bool,
    pub multiplicative: bool,
    pub mismatches: Vec<String>,
}

impl CornerReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.closed && self.multiplicative
    }
}

pub fn corner_iso(big: &Arc<AlgebraContext>, small: &Arc<AlgebraContext>, pivot: u32) -> Result<CornerIso> {
    let n = big.n();
    if n < 2
        || small.n() + 2 != n
        || small.order() != big.order()
        || small.depth() != big.depth()
    {
        return Err(ContourError::ContextMismatch);
    }
    check_pivot(big.order(), pivot)?;
    let p = cup_cap_diagram(n, 1, pivot, big.order());
    if !p.is_depth_legal(big.depth()) {
        return Err(ContourError::InvalidPivot {
            pivot,
            reason: format!("southern arc has depth {} > d = {}", n - 1, big.depth()),
        });
    }
    let cap = cup_cap_diagram(2, 1, pivot, big.order());
    let mut forward = Vec::with_capacity(small.dim());
    for d in small.basis() {
        let x = cap.tensor(d);
        let i = big
            .index_of(&x)
            .ok_or_else(|| ContourError::InvalidDiagram(format!("{} not in the big basis", x)))?;
        forward.push(i);
    }
    let backward = forward.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    Ok(CornerIso {
        big: big.clone(),
        small: small.clone(),
        pivot,
        forward,
        backward,
    })
}

impl CornerIso {
    pub fn pivot(&self) -> u32 {
        self.pivot
    }

    fn pivot_exps(&self) -> Vec<u32> {
        let mut e = vec![0; self.big.order() as usize];
        e[self.pivot as usize] = 1;
        e
    }

    /// Index in A_n of the diagram representing basis element `i` of A_{n-2}.
    pub fn forward_index(&self, i: usize) -> usize {
        self.forward[i]
    }

    pub fn backward_index(&self, j: usize) -> Option<usize> {
        self.backward.get(&j).copied()
    }

    /// Image in e A_n e, as an element over the normalizer d_pivot.
    pub fn map(&self, x: &AlgebraElement) -> Result<PreIdempotent> {
        if !x.context().same_parameters(&self.small) {
            return Err(ContourError::ContextMismatch);
        }
        let elem = AlgebraElement::from_terms(
            &self.big,
            x.terms().map(|(i, c)| (self.forward[i], c.clone())),
        );
        Ok(PreIdempotent {
            element: elem,
            normalizer: super::context::monomial(self.big.order(), &self.pivot_exps()),
        })
    }

    /// Inverse map: an element of e A_n e (given by its diagram expansion)
    /// goes to A_{n-2}, each corner diagram contributing d_pivot times its preimage.
    pub fn inverse(&self, y: &AlgebraElement) -> Result<AlgebraElement> {
        if !y.context().same_parameters(&self.big) {
            return Err(ContourError::ContextMismatch);
        }
        let dp = super::context::monomial(self.big.order(), &self.pivot_exps());
        let mut out = self.small.zero();
        for (j, c) in y.terms() {
            let i = self.backward_index(j).ok_or_else(|| {
                ContourError::Module(format!("{} is not in the corner", self.big.diagram(j)))
            })?;
            out.add_term(i, &c.mul(&dp));
        }
        Ok(out)
    }

    /// Checks the bijection with the corner basis, closure of P A P, and
    /// multiplicativity with exact loop bookkeeping.
    pub fn verify(&self) -> CornerReport {
        let n = self.big.n();
        let m = self.big.order();
        let mut mismatches = Vec::new();

        // Corner basis: northern arc (0,1) bare, southern arc (0,1) with pivot beads.
        let in_corner = |d: &PlanarDiagram| {
            let n0 = d.index((Side::North, 0));
            let s0 = d.index((Side::South, 0));
            d.partner(n0) == d.index((Side::North, 1))
                && d.bead(n0) == 0
                && d.partner(s0) == d.index((Side::South, 1))
                && d.bead(d.line_of(s0)) == self.pivot
        };
        let corner: BTreeSet<usize> = (0..self.big.dim())
            .filter(|&i| in_corner(self.big.diagram(i)))
            .collect();
        let image: BTreeSet<usize> = self.forward.iter().copied().collect();
        let bijective = image.len() == self.forward.len() && image == corner;
        if !bijective {
            mismatches.push(format!(
                "corner has {} diagrams, image has {}",
                corner.len(),
                image.len()
            ));
        }

        let p = cup_cap_diagram(n, 1, self.pivot, m);
        let mut closed = true;
        for d in self.big.basis() {
            let (_, a) = p.compose_unchecked(d);
            let (_, b) = a.compose_unchecked(&p);
            if !self.big.index_of(&b).is_some_and(|i| corner.contains(&i)) {
                closed = false;
                if mismatches.len() < 5 {
                    mismatches.push(format!("P D P leaves the corner for D = {}", d));
                }
            }
        }

        let dim = self.small.dim();
        let exhaustive = dim.saturating_mul(dim) <= PAIR_GUARD;
        let left: Vec<usize> = if exhaustive {
            (0..dim).collect()
        } else {
            self.small
                .generators()
                .into_iter()
                .filter_map(|g| g.diagram(self.small.n(), m).ok())
                .filter_map(|d| self.small.index_of(&d))
                .collect()
        };
        let pe = self.pivot_exps();
        let mut multiplicative = true;
        let mut pairs = 0;
        for &a in &left {
            for b in 0..dim {
                pairs += 1;
                let (e1, k1) = self.small.product(a, b);
                let (e2, k2) = self.big.product(self.forward[a], self.forward[b]);
                let expected: Vec<u32> = e1.iter().zip(&pe).map(|(x, y)| x + y).collect();
                if k2 != self.forward[k1] || e2 != expected {
                    multiplicative = false;
                    if mismatches.len() < 5 {
                        mismatches.push(format!(
                            "product of {} and {} disagrees",
                            self.small.diagram(a),
                            self.small.diagram(b)
                        ));
                    }
                }
            }
        }
        CornerReport {
            n,
            pivot: self.pivot,
            corner_dim: corner.len(),
            small_dim: dim,
            pairs_checked: pairs,
            exhaustive,
            bijective,
            closed,
            multiplicative,
            mismatches,
        }
    }
}

/// Convenience: d_pivot as a polynomial.
pub fn pivot_parameter(order: u32, pivot: u32) -> CycPolynomial {
    CycPolynomial::var(order, pivot as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DepthBound;

    fn check(n: usize, m: u32, d: DepthBound, pivot: u32) -> CornerReport {
        let big = AlgebraContext::new(n, m, d).unwrap();
        let small = AlgebraContext::new(n - 2, m, d).unwrap();
        corner_iso(&big, &small, pivot).unwrap().verify()
    }

    #[test]
    fn small_corners() {
        let r = check(2, 2, DepthBound::Infinite, 0);
        assert!(r.passed());
        assert_eq!(r.corner_dim, 1);
        let r = check(3, 1, DepthBound::Finite(0), 0);
        assert!(r.passed());
        assert_eq!(r.corner_dim, 1);
        let r = check(4, 2, DepthBound::Finite(1), 0);
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.corner_dim, 6);
    }

    #[test]
    fn decorated_pivot() {
        assert!(check(4, 3, DepthBound::Infinite, 2).passed());
        let big = AlgebraContext::new(4, 3, DepthBound::Finite(1)).unwrap();
        let small = AlgebraContext::new(2, 3, DepthBound::Finite(1)).unwrap();
        assert!(corner_iso(&big, &small, 1).is_err());
    }

    #[test]
    fn map_and_inverse() {
        let big = AlgebraContext::new(4, 2, DepthBound::Infinite).unwrap();
        let small = AlgebraContext::new(2, 2, DepthBound::Infinite).unwrap();
        let iso = corner_iso(&big, &small, 0).unwrap();
        let x = small.generator(crate::algebra::Generator::E(1)).unwrap();
        let img = iso.map(&x).unwrap();
        let back = iso.inverse(&img.element).unwrap();
        assert_eq!(back, x.scale(&pivot_parameter(2, 0)));
    }
}
