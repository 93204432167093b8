//! Localisation M -> eM and globalisation N -> Ae (x)_{eAe} N at a parameter point.
//!
//! The idempotent is e = C_j / d_j with C_j the cup-cap on the two western
//! strands carrying j beads on its southern arc. The corner algebra acts on
//! eM through y -> (C_j beside y) / d_j.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{cup_cap_diagram, generators, AlgebraContext, Generator};
use crate::arith::{axpy, CyclotomicNumber, EchelonBasis, Field, Matrix, Ring, SparseVec};
use crate::diagram::{DepthBound, PlanarDiagram, Side};
use crate::error::{ContourError, Result};
use crate::modules::ModulePresentation;

type Presentation = ModulePresentation<CyclotomicNumber>;

/// Solves for coordinates against a fixed set of independent columns.
pub(crate) struct Coordinates {
    rows: Vec<usize>,
    inv: Matrix<CyclotomicNumber>,
}

impl Coordinates {
    /// `columns` are vectors of a common length, assumed independent.
    pub(crate) fn new(columns: &[Vec<CyclotomicNumber>], zero: &CyclotomicNumber) -> Result<Self> {
        let k = columns.len();
        let len = columns.first().map_or(0, Vec::len);
        let mut t = Matrix::zeros(k, len, zero);
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                t[(j, i)] = x.clone();
            }
        }
        let (_, rows) = t.rref();
        if rows.len() != k {
            return Err(ContourError::Module("columns are dependent".into()));
        }
        let mut sq = Matrix::zeros(k, k, zero);
        for (r, &i) in rows.iter().enumerate() {
            for (j, c) in columns.iter().enumerate() {
                sq[(r, j)] = c[i].clone();
            }
        }
        let inv = sq.inverse().ok_or_else(|| ContourError::Module("columns are dependent".into()))?;
        Ok(Coordinates { rows, inv })
    }

    pub(crate) fn solve(&self, v: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
        let rhs: Vec<CyclotomicNumber> = self.rows.iter().map(|&i| v[i].clone()).collect();
        self.inv.mul_vec(&rhs)
    }
}

fn pivot_value(params: &[CyclotomicNumber], pivot: u32) -> Result<CyclotomicNumber> {
    let p = params
        .get(pivot as usize)
        .ok_or_else(|| ContourError::InvalidPivot {
            pivot,
            reason: format!("must be below m = {}", params.len()),
        })?;
    if p.is_zero() {
        return Err(ContourError::PivotVanishes(pivot));
    }
    Ok(p.clone())
}

fn check_pivot_depth(n: usize, pivot: u32, d: DepthBound) -> Result<()> {
    if pivot > 0 && !d.allows(n - 1) {
        return Err(ContourError::InvalidPivot {
            pivot,
            reason: format!("southern arc has depth {} > d = {}", n - 1, d),
        });
    }
    Ok(())
}

/// eM as a module over the algebra on n - 2 strands.
pub fn localise(module: &Presentation, pivot: u32) -> Result<Presentation> {
    let n = module.n();
    if n < 2 {
        return Err(ContourError::Module("localisation needs at least two strands".into()));
    }
    let (m, d) = (module.order(), module.depth());
    check_pivot_depth(n, pivot, d)?;
    let dj = pivot_value(module.params(), pivot)?;
    let inv_dj = dj.inv().expect("nonzero pivot");
    let zero = CyclotomicNumber::zero(m);
    let mut c = module.matrix(Generator::E(1)).expect("E(1) exists").clone();
    if pivot > 0 {
        let t = module.matrix(Generator::Tbar(2)).expect("pivot strand is decorated");
        for _ in 0..pivot {
            c = c.mul(t);
        }
    }
    let e = c.scale(&inv_dj);
    let (_, pivots) = e.rref();
    let columns: Vec<Vec<CyclotomicNumber>> = pivots.iter().map(|&j| e.column(j)).collect();
    let k = columns.len();
    let coords = Coordinates::new(&columns, &zero)?;
    let small_gens = generators(n - 2, m, d);
    let mut matrices = Vec::with_capacity(small_gens.len());
    for g in &small_gens {
        let big = module
            .matrix(g.shifted(2))
            .ok_or_else(|| ContourError::Module(format!("missing generator {}", g.shifted(2))))?;
        let act = e.mul(big);
        let mut a = Matrix::zeros(k, k, &zero);
        for (j, col) in columns.iter().enumerate() {
            for (r, x) in coords.solve(&act.mul_vec(col)).into_iter().enumerate() {
                a[(r, j)] = x;
            }
        }
        matrices.push(a);
    }
    ModulePresentation::new(n - 2, m, d, module.params().to_vec(), small_gens, matrices, k)
}

fn loop_value(params: &[CyclotomicNumber], exps: &[u32]) -> CyclotomicNumber {
    let mut out = params[0].one_like();
    for (k, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            out = out.mul(&params[k]);
        }
    }
    out
}

/// Ae (x)_{eAe} N as a module over the algebra on n + 2 strands.
pub fn globalise(module: &Presentation, pivot: u32) -> Result<Presentation> {
    let n = module.n();
    let (m, d) = (module.order(), module.depth());
    let params = module.params();
    check_pivot_depth(n + 2, pivot, d)?;
    let dj = pivot_value(params, pivot)?;
    let inv_dj = dj.inv().expect("nonzero pivot");
    let big = AlgebraContext::new(n + 2, m, d)?;
    let in_ae = |x: &PlanarDiagram| {
        let s0 = x.index((Side::South, 0));
        x.partner(s0) == x.index((Side::South, 1)) && x.bead(x.line_of(s0)) == pivot % m
    };
    let ae: Vec<usize> = (0..big.dim()).filter(|&i| in_ae(big.diagram(i))).collect();
    let pos: std::collections::HashMap<usize, usize> = ae.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let nd = module.dim();
    let node = |a: usize, v: usize| a * nd + v;
    let cap = cup_cap_diagram(2, 1, pivot, m);

    let mut relations = EchelonBasis::new();
    for (g, ng) in module.generators().iter().zip(module.matrices()) {
        let y = cap.tensor(&g.diagram(n, m)?);
        for (a, &i) in ae.iter().enumerate() {
            let (loops, r) = big.diagram(i).compose(&y)?;
            let a2 = big
                .index_of(&r)
                .and_then(|k| pos.get(&k).copied())
                .ok_or_else(|| ContourError::Module(format!("{} left the corner", r)))?;
            let coef = loop_value(params, &loops.counts).mul(&inv_dj);
            for v in 0..nd {
                let mut row = SparseVec::new();
                axpy(&mut row, node(a2, v), &coef);
                for w in 0..nd {
                    axpy(&mut row, node(a, w), &ng[(w, v)].neg());
                }
                relations.insert(row);
            }
        }
    }
    let pivots: std::collections::BTreeSet<usize> = relations.pivots().collect();
    let free: Vec<usize> = (0..ae.len() * nd).filter(|c| !pivots.contains(c)).collect();
    let free_pos: std::collections::HashMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let zero = CyclotomicNumber::zero(m);
    let big_gens = generators(n + 2, m, d);
    let mut matrices = Vec::with_capacity(big_gens.len());
    for g in &big_gens {
        let gi = big
            .index_of(&g.diagram(n + 2, m)?)
            .expect("generators are basis diagrams");
        let mut a = Matrix::zeros(free.len(), free.len(), &zero);
        for (col, &f) in free.iter().enumerate() {
            let (ai, v) = (f / nd, f % nd);
            let (loops, k) = big.product(gi, ae[ai]);
            let a2 = *pos.get(&k).expect("left multiplication preserves Ae");
            let mut w = SparseVec::new();
            w.insert(node(a2, v), loop_value(params, &loops));
            for (c, x) in relations.reduce(w) {
                a[(free_pos[&c], col)] = x;
            }
        }
        matrices.push(a);
    }
    ModulePresentation::new(n + 2, m, d, params.to_vec(), big_gens, matrices, free.len())
}

/// Basis of the intertwiners X with X A(g) = B(g) X for every generator.
pub fn intertwiners(a: &Presentation, b: &Presentation) -> Result<Vec<Matrix<CyclotomicNumber>>> {
    if a.generators() != b.generators() || a.params() != b.params() {
        return Err(ContourError::ContextMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let var = |r: usize, c: usize| r * da + c;
    let mut rows = EchelonBasis::new();
    for (ga, gb) in a.matrices().iter().zip(b.matrices()) {
        for r in 0..db {
            for c in 0..da {
                let mut row = SparseVec::new();
                for k in 0..da {
                    axpy(&mut row, var(r, k), &ga[(k, c)]);
                }
                for k in 0..db {
                    axpy(&mut row, var(k, c), &gb[(r, k)].neg());
                }
                rows.insert(row);
            }
        }
    }
    let one = CyclotomicNumber::one(a.order());
    let zero = CyclotomicNumber::zero(a.order());
    Ok(rows
        .null_space(da * db, &one)
        .into_iter()
        .map(|v| {
            let mut x = Matrix::zeros(db, da, &zero);
            for (i, c) in v {
                x[(i / da, i % da)] = c;
            }
            x
        })
        .collect())
}

/// An invertible intertwiner, found as a seeded random combination of the
/// intertwiner basis.
pub fn isomorphism(a: &Presentation, b: &Presentation, seed: u64) -> Result<Option<Matrix<CyclotomicNumber>>> {
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let basis = intertwiners(a, b)?;
    if basis.is_empty() {
        return Ok((a.dim() == 0).then(|| Matrix::zeros(0, 0, &CyclotomicNumber::zero(a.order()))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let mut x = basis[0].scale(&CyclotomicNumber::zero(a.order()));
        for b in &basis {
            let c = CyclotomicNumber::from_integer(a.order(), rng.gen_range(-50..=50));
            x = x.add(&b.scale(&c));
        }
        if x.inverse().is_some() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::random_point;
    use crate::modules::{StandardModule, Weight};

    fn standard(n: usize, m: u32, d: DepthBound, w: Weight, point: &[CyclotomicNumber]) -> Presentation {
        StandardModule::new(n, m, d, w).unwrap().presentation_at(point).unwrap()
    }

    #[test]
    fn localise_standard_modules() {
        let d = DepthBound::Infinite;
        let point = random_point(2, 2, 21);
        let big = standard(4, 2, d, Weight::empty(), &point);
        let small = standard(2, 2, d, Weight::empty(), &point);
        let loc = localise(&big, 0).unwrap();
        assert!(loc.relation_defects().is_empty());
        assert!(isomorphism(&loc, &small, 1).unwrap().is_some());
        let top = standard(2, 2, d, Weight::new(2, vec![1, 2]), &point);
        assert_eq!(localise(&top, 1).unwrap().dim(), 0);
    }

    #[test]
    fn globalise_then_localise() {
        let d = DepthBound::Finite(1);
        let point = random_point(2, 2, 4);
        let n0 = standard(1, 2, d, Weight::new(1, vec![2]), &point);
        let g = globalise(&n0, 0).unwrap();
        assert_eq!(g.dim(), StandardModule::new(3, 2, d, Weight::new(1, vec![2])).unwrap().dim());
        assert!(g.relation_defects().is_empty());
        let back = localise(&g, 0).unwrap();
        assert!(isomorphism(&back, &n0, 2).unwrap().is_some());
    }

    #[test]
    fn temperley_lieb_trivial_module() {
        let point = vec![CyclotomicNumber::from_integer(1, 3)];
        let triv = standard(0, 1, DepthBound::Finite(0), Weight::empty(), &point);
        assert_eq!(globalise(&triv, 0).unwrap().dim(), 1);
        let zero_point = vec![CyclotomicNumber::zero(1)];
        let triv0 = standard(0, 1, DepthBound::Finite(0), Weight::empty(), &zero_point);
        assert!(matches!(globalise(&triv0, 0), Err(ContourError::PivotVanishes(0))));
    }
}
