//! A second construction of standard modules inside the algebra itself.
//!
//! The cyclic left module generated by P * prod eps(i_k, j_k), with P the
//! cup-cap diagram on the western strands and the character sums on the
//! labeled strands, is computed at a parameter point modulo diagrams with
//! fewer propagating lines. Cutting each diagram along its southern arcs
//! gives an explicit base change to the half-diagram module.

use std::collections::{BTreeSet, VecDeque};

use super::presentation::ModulePresentation;
use super::standard::StandardModule;
use super::weight::Weight;
use crate::algebra::{cup_cap_diagram, epsilon, generators, AlgebraContext};
use crate::arith::{axpy, CyclotomicNumber, EchelonBasis, Matrix, Ring, SparseVec};
use crate::diagram::{DepthBound, PlanarDiagram, Side};
use crate::error::{ContourError, Result};

/// Largest strand count the oracle accepts.
pub const ORACLE_GUARD: usize = 6;

pub struct RegularRealization {
    pub presentation: ModulePresentation<CyclotomicNumber>,
    /// Column j is the image of the j-th realization vector in the half-diagram basis.
    pub base_change: Matrix<CyclotomicNumber>,
    pub vectors: Vec<SparseVec<CyclotomicNumber>>,
}

impl RegularRealization {
    /// Whether the base change is invertible and intertwines the two actions.
    pub fn conjugates(&self, standard: &ModulePresentation<CyclotomicNumber>) -> bool {
        let x = &self.base_change;
        if x.rows() != standard.dim() || x.cols() != self.presentation.dim() || x.inverse().is_none() {
            return false;
        }
        self.presentation
            .matrices()
            .iter()
            .zip(standard.matrices())
            .all(|(a, b)| x.mul(a) == b.mul(x))
    }
}

fn loop_value(point: &[CyclotomicNumber], exps: &[u32], order: u32) -> CyclotomicNumber {
    let mut out = CyclotomicNumber::one(order);
    for (k, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            out = out.mul(&point[k]);
        }
    }
    out
}

/// The half diagram above the southern arcs of a full diagram.
fn cut(d: &PlanarDiagram, l: usize) -> PlanarDiagram {
    let n = d.n_north();
    let south_ends: Vec<usize> = d
        .propagating_lines()
        .iter()
        .map(|&a| match d.node(d.partner(a)) {
            (Side::South, c) => c,
            _ => unreachable!("propagating lines end on the south edge"),
        })
        .collect();
    let lines = d.line_nodes().into_iter().filter_map(|(a, b, bead)| match (a, b) {
        ((Side::North, _), (Side::North, _)) => Some((a, b, bead)),
        ((Side::North, _), (Side::South, c)) => {
            let k = south_ends.iter().filter(|&&s| s < c).count();
            Some((a, (Side::South, k), bead))
        }
        _ => None,
    });
    PlanarDiagram::from_lines(n, l, d.order(), lines)
}

pub fn oracle_regular_realization(
    n: usize,
    order: u32,
    d: DepthBound,
    weight: &Weight,
    point: &[CyclotomicNumber],
) -> Result<RegularRealization> {
    if n > ORACLE_GUARD {
        return Err(ContourError::GuardExceeded(format!(
            "regular realization on {} strands (limit {})",
            n, ORACLE_GUARD
        )));
    }
    if point.len() != order as usize {
        return Err(ContourError::PointDimension {
            expected: order as usize,
            got: point.len(),
        });
    }
    weight.validate(n, order, d)?;
    let ctx = AlgebraContext::new(n, order, d)?;
    let l = weight.prop();
    let t = (n - l) / 2;
    let mut gen = ctx.from_diagram(&cup_cap_diagram(n, t, 0, order))?;
    let labels = weight.labels();
    for (k, &i) in labels.iter().enumerate() {
        let strand = n - labels.len() + k + 1;
        gen = gen.mul(&epsilon(&ctx, i, strand)?.element)?;
    }
    let keep = |i: usize| ctx.diagram(i).propagating_number() >= l;
    let start: SparseVec<CyclotomicNumber> = gen
        .evaluate(point)?
        .into_iter()
        .filter(|(i, _)| keep(*i))
        .collect();

    let gens = generators(n, order, d);
    let gen_idx: Vec<usize> = gens
        .iter()
        .map(|&g| {
            let x = ctx.generator(g)?;
            let i = x.terms().next().expect("generator is a diagram").0;
            Ok(i)
        })
        .collect::<Result<_>>()?;
    let apply = |gi: usize, v: &SparseVec<CyclotomicNumber>| {
        let mut out = SparseVec::new();
        for (&j, c) in v {
            let (exps, k) = ctx.product(gi, j);
            if keep(k) {
                axpy(&mut out, k, &c.mul(&loop_value(point, &exps, order)));
            }
        }
        out
    };

    let mut span = EchelonBasis::new();
    let mut vectors = Vec::new();
    let mut queue = VecDeque::new();
    if span.insert(start.clone()) {
        vectors.push(start.clone());
        queue.push_back(start);
    }
    while let Some(v) = queue.pop_front() {
        for &gi in &gen_idx {
            let w = apply(gi, &v);
            if span.insert(w.clone()) {
                vectors.push(w.clone());
                queue.push_back(w);
            }
        }
    }

    // Coordinates: restrict to k support rows on which the vectors are independent.
    let k = vectors.len();
    let support: Vec<usize> = vectors
        .iter()
        .flat_map(|v| v.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let zero = CyclotomicNumber::zero(order);
    let mut rows_t = Matrix::zeros(k, support.len(), &zero);
    for (j, v) in vectors.iter().enumerate() {
        for (col, s) in support.iter().enumerate() {
            if let Some(c) = v.get(s) {
                rows_t[(j, col)] = c.clone();
            }
        }
    }
    let (_, pivots) = rows_t.rref();
    let chosen: Vec<usize> = pivots.iter().map(|&p| support[p]).collect();
    let mut square = Matrix::zeros(k, k, &zero);
    for (r, s) in chosen.iter().enumerate() {
        for (j, v) in vectors.iter().enumerate() {
            if let Some(c) = v.get(s) {
                square[(r, j)] = c.clone();
            }
        }
    }
    let inv = square
        .inverse()
        .ok_or_else(|| ContourError::Module("realization vectors are dependent".into()))?;
    let coords = |w: &SparseVec<CyclotomicNumber>| -> Vec<CyclotomicNumber> {
        let rhs: Vec<CyclotomicNumber> = chosen.iter().map(|s| w.get(s).cloned().unwrap_or_else(|| zero.clone())).collect();
        inv.mul_vec(&rhs)
    };
    let mut matrices = Vec::with_capacity(gens.len());
    for &gi in &gen_idx {
        let mut a = Matrix::zeros(k, k, &zero);
        for (j, v) in vectors.iter().enumerate() {
            for (r, c) in coords(&apply(gi, v)).into_iter().enumerate() {
                a[(r, j)] = c;
            }
        }
        matrices.push(a);
    }
    let presentation = ModulePresentation::new(n, order, d, point.to_vec(), gens, matrices, k)?;

    let standard = StandardModule::new(n, order, d, weight.clone())?;
    let mut base_change = Matrix::zeros(standard.dim(), k, &zero);
    for (j, v) in vectors.iter().enumerate() {
        for (&i, c) in v {
            let (exp, bare) = standard.strip_labels(&cut(ctx.diagram(i), l));
            let row = standard
                .index_of(&bare)
                .ok_or_else(|| ContourError::Module(format!("{} does not cut to a basis element", ctx.diagram(i))))?;
            let val = c.mul(&CyclotomicNumber::nu_pow(order, exp));
            base_change[(row, j)] = base_change[(row, j)].add(&val);
        }
    }
    Ok(RegularRealization {
        presentation,
        base_change,
        vectors,
    })
}
