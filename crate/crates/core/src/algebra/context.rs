//! The diagram basis of an algebra and its structure constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::arith::{CycPolynomial, CyclotomicNumber, Ring};
use crate::diagram::{enumerate_basis, DepthBound, PlanarDiagram};
use crate::error::{ContourError, Result};

/// Largest basis the library will enumerate.
pub const DIMENSION_GUARD: u128 = 400_000;

/// Algebra generators in the bead presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    E(usize),
    Tbar(usize),
}

impl Generator {
    pub fn diagram(self, n: usize, order: u32) -> Result<PlanarDiagram> {
        match self {
            Generator::E(i) => PlanarDiagram::generator_e(n, i, order),
            Generator::Tbar(i) => PlanarDiagram::generator_tbar(n, i, order),
        }
    }

    /// The same generator one strand further east.
    pub fn shifted(self, by: usize) -> Generator {
        match self {
            Generator::E(i) => Generator::E(i + by),
            Generator::Tbar(i) => Generator::Tbar(i + by),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "E({})", i),
            Generator::Tbar(i) => write!(f, "T({})", i),
        }
    }
}

/// All generators legal for (n, m, d): every E(i), and Tbar(i) whenever the
/// strand has depth n + 1 - i within the bound.
pub fn generators(n: usize, order: u32, d: DepthBound) -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..n).map(Generator::E).collect();
    if order > 1 {
        out.extend((1..=n).filter(|&i| d.allows(n + 1 - i)).map(Generator::Tbar));
    }
    out
}

pub(crate) fn monomial(order: u32, exps: &[u32]) -> CycPolynomial {
    CycPolynomial::monomial(CyclotomicNumber::one(order), exps.to_vec())
}

type Product = (Vec<u32>, usize);

pub struct AlgebraContext {
    n: usize,
    order: u32,
    depth: DepthBound,
    basis: Vec<PlanarDiagram>,
    index: HashMap<PlanarDiagram, usize>,
    products: RwLock<HashMap<(usize, usize), Product>>,
}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraContext(n={}, m={}, d={}, dim={})",
            self.n,
            self.order,
            self.depth,
            self.basis.len()
        )
    }
}

impl AlgebraContext {
    pub fn new(n: usize, order: u32, depth: DepthBound) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(ContourError::InvalidDiagram("order must be positive".into()));
        }
        let dim = super::dimension(n, order, depth);
        if dim > DIMENSION_GUARD {
            return Err(ContourError::GuardExceeded(format!(
                "algebra dimension {} exceeds {}",
                dim, DIMENSION_GUARD
            )));
        }
        let basis = enumerate_basis(n, n, order, depth);
        let index = basis.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        Ok(Arc::new(AlgebraContext {
            n,
            order,
            depth,
            basis,
            index,
            products: RwLock::new(HashMap::new()),
        }))
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

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PlanarDiagram] {
        &self.basis
    }

    pub fn diagram(&self, i: usize) -> &PlanarDiagram {
        &self.basis[i]
    }

    pub fn index_of(&self, d: &PlanarDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn same_parameters(&self, other: &AlgebraContext) -> bool {
        (self.n, self.order, self.depth) == (other.n, other.order, other.depth)
    }

    pub fn generators(&self) -> Vec<Generator> {
        generators(self.n, self.order, self.depth)
    }

    /// Product of two basis diagrams as (loop exponents, result index).
    pub fn product(&self, i: usize, j: usize) -> (Vec<u32>, usize) {
        if let Some(p) = self.products.read().expect("memo poisoned").get(&(i, j)) {
            return p.clone();
        }
        let (loops, r) = self.basis[i].compose_unchecked(&self.basis[j]);
        let k = *self
            .index
            .get(&r)
            .expect("products of normal-form diagrams stay in the basis");
        let entry = (loops.counts, k);
        // Concurrent writers compute the same value, so last-wins is harmless.
        self.products
            .write()
            .expect("memo poisoned")
            .insert((i, j), entry.clone());
        entry
    }

    pub(crate) fn memoized_products(&self) -> Vec<(usize, usize, Product)> {
        let map = self.products.read().expect("memo poisoned");
        let mut out: Vec<_> = map.iter().map(|(&(i, j), p)| (i, j, p.clone())).collect();
        out.sort_by_key(|&(i, j, _)| (i, j));
        out
    }

    pub(crate) fn seed_product(&self, i: usize, j: usize, p: Product) {
        self.products.write().expect("memo poisoned").insert((i, j), p);
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement {
            ctx: self.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> AlgebraElement {
        let id = PlanarDiagram::identity(self.n, self.order);
        self.from_diagram(&id).expect("identity is a basis diagram")
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> AlgebraElement {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, CycPolynomial::one(self.order));
        AlgebraElement {
            ctx: self.clone(),
            coeffs,
        }
    }

    pub fn from_diagram(self: &Arc<Self>, d: &PlanarDiagram) -> Result<AlgebraElement> {
        let i = self.index_of(d).ok_or_else(|| {
            ContourError::InvalidDiagram(format!("{} is not a basis diagram here", d))
        })?;
        Ok(self.basis_element(i))
    }

    pub fn generator(self: &Arc<Self>, g: Generator) -> Result<AlgebraElement> {
        let d = match g {
            Generator::E(i) => PlanarDiagram::generator_e(self.n, i, self.order)?,
            Generator::Tbar(i) => {
                PlanarDiagram::generator_tbar_checked(self.n, i, self.order, self.depth)?
            }
        };
        self.from_diagram(&d)
    }
}

/// A linear combination of basis diagrams with polynomial coefficients.
#[derive(Clone)]
pub struct AlgebraElement {
    ctx: Arc<AlgebraContext>,
    coeffs: BTreeMap<usize, CycPolynomial>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_parameters(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&i, c)| format!("({}) [{}]", c, self.ctx.basis[i]))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl AlgebraElement {
    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn from_terms(ctx: &Arc<AlgebraContext>, terms: impl IntoIterator<Item = (usize, CycPolynomial)>) -> Self {
        let mut out = ctx.zero();
        for (i, c) in terms {
            out.add_term(i, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &CycPolynomial)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, i: usize) -> CycPolynomial {
        self.coeffs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| CycPolynomial::zero(self.ctx.order))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, i: usize, c: &CycPolynomial) {
        if c.is_zero() {
            return;
        }
        let s = match self.coeffs.get(&i) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if s.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, s);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx.same_parameters(&other.ctx) {
            Ok(())
        } else {
            Err(ContourError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &CycPolynomial) -> Self {
        let mut out = self.ctx.zero();
        for (&i, x) in &self.coeffs {
            out.add_term(i, &x.mul(c));
        }
        out
    }

    pub fn scale_number(&self, c: &CyclotomicNumber) -> Self {
        self.scale(&CycPolynomial::constant(c.clone()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.ctx.zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let (exps, k) = self.ctx.product(i, j);
                out.add_term(k, &a.mul(b).shift(&exps));
            }
        }
        Ok(out)
    }

    /// Coefficients evaluated at a parameter point.
    pub fn evaluate(&self, point: &[CyclotomicNumber]) -> Result<BTreeMap<usize, CyclotomicNumber>> {
        let mut out = BTreeMap::new();
        for (&i, c) in &self.coeffs {
            let v = c.evaluate(point)?;
            if !v.is_zero() {
                out.insert(i, v);
            }
        }
        Ok(out)
    }

    /// Image under the map adding an undecorated strand on the west.
    pub fn embed_left(&self, target: &Arc<AlgebraContext>) -> Result<AlgebraElement> {
        if target.n != self.ctx.n + 1
            || target.order != self.ctx.order
            || target.depth != self.ctx.depth
        {
            return Err(ContourError::ContextMismatch);
        }
        let mut out = target.zero();
        for (&i, c) in &self.coeffs {
            let d = self.ctx.basis[i].pad_left(1);
            let j = target
                .index_of(&d)
                .ok_or_else(|| ContourError::InvalidDiagram(format!("{} not in target basis", d)))?;
            out.add_term(j, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d0(m: u32) -> CycPolynomial {
        CycPolynomial::var(m, 0)
    }

    #[test]
    fn e_squared_and_unit() {
        let ctx = AlgebraContext::new(2, 2, DepthBound::Infinite).unwrap();
        let e = ctx.generator(Generator::E(1)).unwrap();
        assert_eq!(e.mul(&e).unwrap(), e.scale(&d0(2)));
        let one = ctx.one();
        assert_eq!(one.mul(&e).unwrap(), e);
        let t = ctx.generator(Generator::Tbar(1)).unwrap();
        assert_eq!(t.mul(&t).unwrap(), one);
    }

    #[test]
    fn context_mismatch() {
        let a = AlgebraContext::new(2, 2, DepthBound::Infinite).unwrap();
        let b = AlgebraContext::new(2, 3, DepthBound::Infinite).unwrap();
        assert_eq!(a.one().mul(&b.one()), Err(ContourError::ContextMismatch));
    }

    #[test]
    fn embedding_shifts_generators() {
        let a2 = AlgebraContext::new(2, 2, DepthBound::Infinite).unwrap();
        let a3 = AlgebraContext::new(3, 2, DepthBound::Infinite).unwrap();
        assert_eq!(a2.one().embed_left(&a3).unwrap(), a3.one());
        assert_eq!(
            a2.generator(Generator::E(1)).unwrap().embed_left(&a3).unwrap(),
            a3.generator(Generator::E(2)).unwrap()
        );
        assert_eq!(
            a2.generator(Generator::Tbar(2)).unwrap().embed_left(&a3).unwrap(),
            a3.generator(Generator::Tbar(3)).unwrap()
        );
    }

    #[test]
    fn generator_ranges() {
        let g = generators(3, 2, DepthBound::Finite(1));
        assert_eq!(g, vec![Generator::E(1), Generator::E(2), Generator::Tbar(3)]);
        assert_eq!(generators(3, 1, DepthBound::Infinite).len(), 2);
    }
}
