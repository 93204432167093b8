//! Standard modules realized on half diagrams.
//!
//! A basis element has n northern nodes and l southern nodes, every southern
//! node on a propagating line. Arcs carry depth-legal beads and propagating
//! lines carry none: beads arriving on a labeled line are traded for the
//! character value v^(-label * count). The algebra acts by stacking from
//! above; results with fewer than l propagating lines are zero.

use std::collections::HashMap;
use std::sync::Arc;

use super::presentation::ModulePresentation;
use super::weight::Weight;
use crate::algebra::{generators, AlgebraContext, AlgebraElement, Generator};
use crate::arith::{axpy, CycPolynomial, CyclotomicNumber, Matrix, Ring, SparseVec};
use crate::diagram::{enumerate_pairings, DepthBound, LoopMonomial, PlanarDiagram};
use crate::error::{ContourError, Result};

pub type ModuleVector = SparseVec<CycPolynomial>;

/// Half diagrams with `n` northern and `l` southern nodes, all southern
/// nodes propagating, bead-free propagating lines, depth-legal arc beads.
pub fn half_diagrams(n: usize, l: usize, order: u32, d: DepthBound) -> Vec<PlanarDiagram> {
    let mut out = Vec::new();
    if l > n || (n - l) % 2 != 0 {
        return out;
    }
    for partner in enumerate_pairings(n + l) {
        if (n..n + l).any(|s| partner[s] >= n) {
            continue;
        }
        let pairs: Vec<(usize, usize)> = (0..partner.len())
            .filter(|&i| partner[i] > i)
            .map(|i| (i, partner[i]))
            .collect();
        let bare = PlanarDiagram::new(n, l, order, &pairs, &[]).expect("valid pairing");
        let depths = bare.depths();
        let free: Vec<usize> = if order > 1 {
            bare.lines()
                .filter(|&a| !bare.is_propagating(a) && d.allows(depths[a]))
                .collect()
        } else {
            Vec::new()
        };
        let mut counts = vec![0u32; free.len()];
        loop {
            let mut diag = bare.clone();
            for (k, &line) in free.iter().enumerate() {
                diag = diag.with_bead(line, counts[k]);
            }
            out.push(diag);
            let Some(k) = (0..free.len()).rev().find(|&k| counts[k] + 1 < order) else {
                break;
            };
            counts[k] += 1;
            counts[k + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }
    out.sort();
    out
}

/// Number of half diagrams without building them.
pub fn half_diagram_count(n: usize, l: usize, order: u32, d: DepthBound) -> u128 {
    if l > n || (n - l) % 2 != 0 {
        return 0;
    }
    let mut total = 0u128;
    for partner in enumerate_pairings(n + l) {
        if (n..n + l).any(|s| partner[s] >= n) {
            continue;
        }
        let pairs: Vec<(usize, usize)> = (0..partner.len())
            .filter(|&i| partner[i] > i)
            .map(|i| (i, partner[i]))
            .collect();
        let bare = PlanarDiagram::new(n, l, order, &pairs, &[]).expect("valid pairing");
        let depths = bare.depths();
        let free = if order > 1 {
            bare.lines()
                .filter(|&a| !bare.is_propagating(a) && d.allows(depths[a]))
                .count()
        } else {
            0
        };
        total += (order as u128).pow(free as u32);
    }
    total
}

#[derive(Clone, Debug)]
pub struct StandardModule {
    n: usize,
    order: u32,
    depth: DepthBound,
    weight: Weight,
    basis: Vec<PlanarDiagram>,
    index: HashMap<PlanarDiagram, usize>,
}

impl StandardModule {
    pub fn new(n: usize, order: u32, depth: DepthBound, weight: Weight) -> Result<Self> {
        weight.validate(n, order, depth)?;
        let basis = half_diagrams(n, weight.prop(), order, depth);
        let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        Ok(StandardModule {
            n,
            order,
            depth,
            weight,
            basis,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn depth(&self) -> DepthBound {
        self.depth
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn prop(&self) -> usize {
        self.weight.prop()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PlanarDiagram] {
        &self.basis
    }

    pub fn index_of(&self, d: &PlanarDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn basis_vector(&self, i: usize) -> ModuleVector {
        let mut v = ModuleVector::new();
        v.insert(i, CycPolynomial::one(self.order));
        v
    }

    /// Character factor v^(-sum label * beads) for beads on the propagating
    /// lines of an l-strand result, and the result with those beads removed.
    /// Unlabeled propagating lines never receive beads in depth-legal products.
    pub(crate) fn strip_labels(&self, r: &PlanarDiagram) -> (i64, PlanarDiagram) {
        let labels = self.weight.labels();
        let props = r.propagating_lines();
        let first_labeled = props.len() - labels.len();
        let mut exp = 0i64;
        let mut out = r.clone();
        for (k, &line) in props.iter().enumerate() {
            let c = r.bead(line);
            if c == 0 {
                continue;
            }
            assert!(
                k >= first_labeled,
                "beads reached an unlabeled propagating line in {}",
                r
            );
            exp -= labels[k - first_labeled] as i64 * c as i64;
            out = out.with_bead(line, 0);
        }
        (exp, out)
    }

    fn monomial(&self, nu_exp: i64, loops: &LoopMonomial) -> CycPolynomial {
        CycPolynomial::monomial(CyclotomicNumber::nu_pow(self.order, nu_exp), loops.counts.clone())
    }

    /// A diagram on n strands applied to basis element `j`.
    pub fn act_diagram(&self, x: &PlanarDiagram, j: usize) -> Option<(CycPolynomial, usize)> {
        let (loops, r) = x.compose_unchecked(&self.basis[j]);
        if r.propagating_number() < self.prop() {
            return None;
        }
        let (exp, bare) = self.strip_labels(&r);
        let k = *self
            .index
            .get(&bare)
            .unwrap_or_else(|| panic!("{} is not a half-diagram basis element", bare));
        Some((self.monomial(exp, &loops), k))
    }

    fn check_element(&self, x: &AlgebraElement) -> Result<()> {
        let c = x.context();
        if (c.n(), c.order(), c.depth()) != (self.n, self.order, self.depth) {
            return Err(ContourError::ContextMismatch);
        }
        Ok(())
    }

    pub fn act(&self, x: &AlgebraElement, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_element(x)?;
        if let Some((&j, _)) = v.iter().next_back() {
            if j >= self.dim() {
                return Err(ContourError::Module(format!(
                    "vector index {} beyond dimension {}",
                    j,
                    self.dim()
                )));
            }
        }
        let ctx = x.context();
        let mut out = ModuleVector::new();
        for (i, c) in x.terms() {
            for (&j, a) in v {
                if let Some((coef, k)) = self.act_diagram(ctx.diagram(i), j) {
                    axpy(&mut out, k, &c.mul(a).mul(&coef));
                }
            }
        }
        Ok(out)
    }

    /// Action of a diagram as a matrix: column j is the image of basis element j.
    pub fn diagram_matrix(&self, x: &PlanarDiagram) -> Result<Matrix<CycPolynomial>> {
        if x.n_north() != self.n || x.n_south() != self.n || x.order() != self.order {
            return Err(ContourError::InterfaceMismatch {
                upper: x.n_south(),
                lower: self.n,
            });
        }
        let zero = CycPolynomial::zero(self.order);
        let mut m = Matrix::zeros(self.dim(), self.dim(), &zero);
        for j in 0..self.dim() {
            if let Some((c, k)) = self.act_diagram(x, j) {
                m[(k, j)] = m[(k, j)].add(&c);
            }
        }
        Ok(m)
    }

    pub fn generator_matrix(&self, g: Generator) -> Result<Matrix<CycPolynomial>> {
        let x = match g {
            Generator::E(i) => PlanarDiagram::generator_e(self.n, i, self.order)?,
            Generator::Tbar(i) => {
                PlanarDiagram::generator_tbar_checked(self.n, i, self.order, self.depth)?
            }
        };
        self.diagram_matrix(&x)
    }

    /// Generator action matrices with symbolic loop parameters.
    pub fn presentation(&self) -> Result<ModulePresentation<CycPolynomial>> {
        let gens = generators(self.n, self.order, self.depth);
        let matrices = gens
            .iter()
            .map(|&g| self.generator_matrix(g))
            .collect::<Result<Vec<_>>>()?;
        let params = (0..self.order as usize)
            .map(|k| CycPolynomial::var(self.order, k))
            .collect();
        ModulePresentation::new(self.n, self.order, self.depth, params, gens, matrices, self.dim())
    }

    /// Generator action matrices at a parameter point.
    pub fn presentation_at(&self, point: &[CyclotomicNumber]) -> Result<ModulePresentation<CyclotomicNumber>> {
        self.presentation()?.evaluate(point)
    }

    /// Whether the module's parameters match an algebra context.
    pub fn matches(&self, ctx: &Arc<AlgebraContext>) -> bool {
        (ctx.n(), ctx.order(), ctx.depth()) == (self.n, self.order, self.depth)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycPolynomial as P;

    fn d(m: u32, k: usize) -> P {
        P::var(m, k)
    }

    #[test]
    fn blob_two_strands() {
        let m = StandardModule::new(2, 2, DepthBound::Infinite, Weight::empty()).unwrap();
        assert_eq!(m.dim(), 2);
        let t = m.generator_matrix(Generator::Tbar(1)).unwrap();
        assert_eq!(t[(1, 0)], P::one(2));
        assert_eq!(t[(0, 1)], P::one(2));
        let e = m.generator_matrix(Generator::E(1)).unwrap();
        assert_eq!(e[(0, 0)], d(2, 0));
        assert_eq!(e[(0, 1)], d(2, 1));
        assert!(e[(1, 0)].is_zero() && e[(1, 1)].is_zero());
    }

    #[test]
    fn top_weight_character() {
        let m = StandardModule::new(2, 2, DepthBound::Infinite, Weight::new(2, vec![1, 1])).unwrap();
        assert_eq!(m.dim(), 1);
        for i in 1..=2 {
            let t = m.generator_matrix(Generator::Tbar(i)).unwrap();
            assert_eq!(t[(0, 0)], P::from_integer(2, -1));
        }
        let e = m.generator_matrix(Generator::E(1)).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn dimensions_ignore_labels() {
        for (n, l) in [(3, 1), (4, 2), (5, 3)] {
            let a = StandardModule::new(n, 3, DepthBound::Infinite, Weight::new(l, vec![1; l])).unwrap();
            let b = StandardModule::new(n, 3, DepthBound::Infinite, Weight::new(l, vec![3; l])).unwrap();
            assert_eq!(a.basis(), b.basis());
            assert_eq!(a.dim() as u128, half_diagram_count(n, l, 3, DepthBound::Infinite));
        }
        let m = StandardModule::new(3, 2, DepthBound::Infinite, Weight::new(1, vec![1])).unwrap();
        assert_eq!(m.dim(), 4);
    }

    #[test]
    fn act_matches_matrices() {
        let ctx = AlgebraContext::new(3, 2, DepthBound::Infinite).unwrap();
        let m = StandardModule::new(3, 2, DepthBound::Infinite, Weight::new(1, vec![2])).unwrap();
        let e = ctx.generator(Generator::E(2)).unwrap();
        let mat = m.generator_matrix(Generator::E(2)).unwrap();
        for j in 0..m.dim() {
            let v = m.act(&e, &m.basis_vector(j)).unwrap();
            for k in 0..m.dim() {
                assert_eq!(v.get(&k).cloned().unwrap_or_else(|| P::zero(2)), mat[(k, j)]);
            }
        }
        assert!(m.act(&AlgebraContext::new(2, 2, DepthBound::Infinite).unwrap().one(), &ModuleVector::new()).is_err());
    }
}
