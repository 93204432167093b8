//! Sections of the ideal filtration and the tensor-product bijection test.
//!
//! Inside A = A_n modulo diagrams with fewer than l = n - 2i propagating
//! lines, with e the cup-cap idempotent, the tensor product Ae (x)_{eAe} eA
//! is computed as a quotient of pairs of diagrams: each relation
//! (x g) (x) y = x (x) (g y) for a generator g of eAe identifies two pairs up
//! to a monomial in the loop parameters. A weighted union-find tracks those
//! ratios; a cycle with a nontrivial ratio would kill its component.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::context::AlgebraContext;
use super::idempotent::{check_pivot, cup_cap_diagram};
use crate::diagram::PlanarDiagram;
use crate::error::{ContourError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HereditySection {
    pub i: usize,
    pub prop: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    pub corner_generators: usize,
    pub tensor_dim: usize,
    pub section_dim: usize,
    pub surjective: bool,
    pub bijective: bool,
}

/// Basis diagrams with propagating number n - 2i.
pub fn section_basis(ctx: &AlgebraContext, i: usize) -> Vec<usize> {
    let n = ctx.n();
    if 2 * i > n {
        return Vec::new();
    }
    let l = n - 2 * i;
    (0..ctx.dim())
        .filter(|&k| ctx.diagram(k).propagating_number() == l)
        .collect()
}

struct WeightedUnionFind {
    parent: Vec<usize>,
    weight: Vec<Vec<i64>>,
    dead: Vec<bool>,
}

impl WeightedUnionFind {
    fn new(size: usize, vars: usize) -> Self {
        WeightedUnionFind {
            parent: (0..size).collect(),
            weight: vec![vec![0; vars]; size],
            dead: vec![false; size],
        }
    }

    /// Root r and w with node = d^w * r.
    fn find(&mut self, v: usize) -> (usize, Vec<i64>) {
        let mut path = Vec::new();
        let mut cur = v;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // Compress from the top down so each weight becomes relative to root.
        for &node in path.iter().rev() {
            let p = self.parent[node];
            if p != root {
                let pw = self.weight[p].clone();
                for (a, b) in self.weight[node].iter_mut().zip(pw) {
                    *a += b;
                }
            }
            self.parent[node] = root;
        }
        (root, self.weight[v].clone())
    }

    /// Records u = d^w * v.
    fn relate(&mut self, u: usize, v: usize, w: &[i64]) {
        let (ru, wu) = self.find(u);
        let (rv, wv) = self.find(v);
        // ru = d^(w + wv - wu) * rv
        let rel: Vec<i64> = (0..w.len()).map(|k| w[k] + wv[k] - wu[k]).collect();
        if ru == rv {
            if rel.iter().any(|&x| x != 0) {
                self.dead[ru] = true;
            }
            return;
        }
        self.parent[ru] = rv;
        self.weight[ru] = rel;
        if self.dead[ru] {
            self.dead[rv] = true;
        }
    }

    fn kill(&mut self, v: usize) {
        let (r, _) = self.find(v);
        self.dead[r] = true;
    }

    fn live_components(&mut self) -> usize {
        let n = self.parent.len();
        let mut roots = BTreeSet::new();
        for v in 0..n {
            let (r, _) = self.find(v);
            roots.insert(r);
        }
        roots.into_iter().filter(|&r| !self.dead[r]).count()
    }
}

fn diff(a: &[u32], b: &[u32]) -> Vec<i64> {
    a.iter().zip(b).map(|(&x, &y)| x as i64 - y as i64).collect()
}

/// Tests that multiplication Ae (x)_{eAe} eA -> AeA is bijective in the i-th section.
pub fn heredity_section_check(ctx: &Arc<AlgebraContext>, i: usize, pivot: u32) -> Result<HereditySection> {
    let n = ctx.n();
    let m = ctx.order();
    if 2 * i > n {
        return Err(ContourError::IdempotentOutOfRange { i, n });
    }
    check_pivot(m, pivot)?;
    let l = n - 2 * i;
    let p = cup_cap_diagram(n, i, pivot, m);
    if !p.is_depth_legal(ctx.depth()) {
        return Err(ContourError::InvalidPivot {
            pivot,
            reason: format!("decorated arcs would have depth {} > d = {}", l + 1, ctx.depth()),
        });
    }
    let section = section_basis(ctx, i);
    let left: Vec<&PlanarDiagram> = section
        .iter()
        .map(|&k| ctx.diagram(k))
        .filter(|x| &x.compose_unchecked(&p).1 == *x)
        .collect();
    let right: Vec<&PlanarDiagram> = section
        .iter()
        .map(|&k| ctx.diagram(k))
        .filter(|y| &p.compose_unchecked(y).1 == *y)
        .collect();
    let gens: Vec<PlanarDiagram> = if m > 1 {
        (2 * i..n)
            .filter(|&c| ctx.depth().allows(n - c))
            .map(|c| p.add_bead(p.line_of(c), 1))
            .collect()
    } else {
        Vec::new()
    };

    let left_pos: HashMap<&PlanarDiagram, usize> = left.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let right_pos: HashMap<&PlanarDiagram, usize> = right.iter().enumerate().map(|(k, &y)| (y, k)).collect();
    let left_index = |d: &PlanarDiagram| left_pos.get(d).copied();
    let right_index = |d: &PlanarDiagram| right_pos.get(d).copied();
    // x g and g y, each as (loop exponents, index) or None when it drops into the lower ideal.
    let xg: Vec<Vec<Option<(Vec<u32>, usize)>>> = left
        .iter()
        .map(|x| {
            gens.iter()
                .map(|g| {
                    let (lp, r) = x.compose_unchecked(g);
                    (r.propagating_number() == l).then(|| (lp.counts, left_index(&r).expect("stays in Ae")))
                })
                .collect()
        })
        .collect();
    let gy: Vec<Vec<Option<(Vec<u32>, usize)>>> = gens
        .iter()
        .map(|g| {
            right
                .iter()
                .map(|y| {
                    let (lp, r) = g.compose_unchecked(y);
                    (r.propagating_number() == l).then(|| (lp.counts, right_index(&r).expect("stays in eA")))
                })
                .collect()
        })
        .collect();

    let rn = right.len();
    let node = |a: usize, b: usize| a * rn + b;
    let mut uf = WeightedUnionFind::new(left.len() * rn, m as usize);
    for (a, row) in xg.iter().enumerate() {
        for (gi, lhs) in row.iter().enumerate() {
            for b in 0..rn {
                match (lhs, &gy[gi][b]) {
                    (Some((alpha, a2)), Some((beta, b2))) => {
                        uf.relate(node(*a2, b), node(a, *b2), &diff(beta, alpha));
                    }
                    (Some((_, a2)), None) => uf.kill(node(*a2, b)),
                    (None, Some((_, b2))) => uf.kill(node(a, *b2)),
                    (None, None) => {}
                }
            }
        }
    }
    let tensor_dim = uf.live_components();

    let section_set: BTreeSet<usize> = section.iter().copied().collect();
    let mut hit = BTreeSet::new();
    for x in &left {
        for y in &right {
            let (_, r) = x.compose_unchecked(y);
            if let Some(k) = ctx.index_of(&r) {
                if section_set.contains(&k) {
                    hit.insert(k);
                }
            }
        }
    }
    let surjective = hit.len() == section.len();
    Ok(HereditySection {
        i,
        prop: l,
        left_dim: left.len(),
        right_dim: rn,
        corner_generators: gens.len(),
        tensor_dim,
        section_dim: section.len(),
        surjective,
        bijective: surjective && tensor_dim == section.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DepthBound;

    #[test]
    fn blob_top_section() {
        let ctx = AlgebraContext::new(2, 2, DepthBound::Infinite).unwrap();
        let s = heredity_section_check(&ctx, 1, 0).unwrap();
        assert_eq!((s.tensor_dim, s.section_dim), (4, 4));
        assert!(s.bijective);
        assert_eq!(section_basis(&ctx, 1).len(), 4);
        assert_eq!(section_basis(&ctx, 0).len(), 4);
    }

    #[test]
    fn shallow_middle_section() {
        let ctx = AlgebraContext::new(3, 2, DepthBound::Finite(1)).unwrap();
        for i in 0..=1 {
            assert!(heredity_section_check(&ctx, i, 0).unwrap().bijective);
        }
    }

    #[test]
    fn union_find_detects_bad_cycle() {
        let mut uf = WeightedUnionFind::new(3, 2);
        uf.relate(0, 1, &[1, 0]);
        uf.relate(1, 2, &[0, 1]);
        assert_eq!(uf.live_components(), 1);
        uf.relate(0, 2, &[1, 1]);
        assert_eq!(uf.live_components(), 1);
        uf.relate(2, 0, &[1, 0]);
        assert_eq!(uf.live_components(), 0);
    }
}
