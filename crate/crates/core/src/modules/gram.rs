//! Gram matrices of the contravariant pairing on standard modules.
//!
//! The pairing of half diagrams a, b stacks the reflection of a on top of b.
//! An l-strand result with l propagating lines contributes its loop monomial
//! times the character values of the beads collected on labeled lines.

use serde::Serialize;

use super::standard::StandardModule;
use super::weight::Weight;
use crate::arith::{det_bareiss, CycPolynomial, CyclotomicNumber, Matrix, Ring};
use crate::diagram::{DepthBound, PlanarDiagram, Side};
use crate::error::{ContourError, Result};

/// Largest Gram matrix whose determinant is expanded symbolically.
pub const GRAM_SYMBOLIC_GUARD: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub n: usize,
    pub order: u32,
    pub depth: DepthBound,
    pub weight: Weight,
    pub entries: Matrix<CycPolynomial>,
}

#[derive(Serialize)]
struct GramJson<'a> {
    n: usize,
    m: u32,
    d: DepthBound,
    weight: &'a Weight,
    dim: usize,
    basis: Vec<String>,
    entries: Vec<Vec<String>>,
}

fn is_identity_pairing(r: &PlanarDiagram) -> bool {
    let l = r.n_north();
    r.n_south() == l && (0..l).all(|c| r.partner(c) == r.index((Side::South, c)))
}

impl StandardModule {
    /// The pairing of basis elements a and b.
    pub fn pairing(&self, a: usize, b: usize) -> CycPolynomial {
        let (loops, r) = self.basis()[a].flip().compose_unchecked(&self.basis()[b]);
        if r.propagating_number() < self.prop() {
            return CycPolynomial::zero(self.order());
        }
        assert!(is_identity_pairing(&r), "non-identity propagating pattern {}", r);
        let (exp, _) = self.strip_labels(&r);
        CycPolynomial::monomial(CyclotomicNumber::nu_pow(self.order(), exp), loops.counts)
    }

    pub fn gram_matrix(&self) -> GramMatrix {
        let dim = self.dim();
        let zero = CycPolynomial::zero(self.order());
        let mut entries = Matrix::zeros(dim, dim, &zero);
        for a in 0..dim {
            for b in 0..dim {
                entries[(a, b)] = self.pairing(a, b);
            }
        }
        GramMatrix {
            n: self.n(),
            order: self.order(),
            depth: self.depth(),
            weight: self.weight().clone(),
            entries,
        }
    }
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn evaluate(&self, point: &[CyclotomicNumber]) -> Result<Matrix<CyclotomicNumber>> {
        if point.len() != self.order as usize {
            return Err(ContourError::PointDimension {
                expected: self.order as usize,
                got: point.len(),
            });
        }
        let zero = CyclotomicNumber::zero(self.order);
        let mut out = Matrix::zeros(self.dim(), self.dim(), &zero);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                out[(i, j)] = self.entries[(i, j)].evaluate(point)?;
            }
        }
        Ok(out)
    }

    /// Exact symbolic determinant, refused above [`GRAM_SYMBOLIC_GUARD`].
    pub fn determinant(&self) -> Result<CycPolynomial> {
        if self.dim() > GRAM_SYMBOLIC_GUARD {
            return Err(ContourError::GuardExceeded(format!(
                "symbolic determinant of a {}x{} Gram matrix (limit {})",
                self.dim(),
                self.dim(),
                GRAM_SYMBOLIC_GUARD
            )));
        }
        det_bareiss(&self.entries)
    }

    pub fn determinant_at(&self, point: &[CyclotomicNumber]) -> Result<CyclotomicNumber> {
        self.evaluate(point)?.det()
    }

    /// Transpose equals the entrywise bar (v -> v^-1, d_k -> d_{-k}).
    pub fn is_bar_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entries[(j, i)] == self.entries[(i, j)].bar()))
    }

    /// Rows whose diagonal d_0-degree fails to exceed every off-diagonal one.
    pub fn dominance_failures(&self) -> Vec<usize> {
        let n = self.dim();
        (0..n)
            .filter(|&i| {
                let diag = &self.entries[(i, i)];
                let dd = diag.degree_in(0);
                diag.is_zero()
                    || (0..n).any(|j| j != i && !self.entries[(i, j)].is_zero() && self.entries[(i, j)].degree_in(0) >= dd)
            })
            .collect()
    }

    /// Every entry is zero or a root of unity times a loop monomial.
    pub fn entries_are_monomials(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = &self.entries[(i, j)];
                e.is_zero() || e.is_monomial()
            })
        })
    }

    pub fn to_json(&self, basis: &[PlanarDiagram]) -> serde_json::Value {
        let doc = GramJson {
            n: self.n,
            m: self.order,
            d: self.depth,
            weight: &self.weight,
            dim: self.dim(),
            basis: basis.iter().map(|b| b.to_string()).collect(),
            entries: self.entries.to_rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
        };
        serde_json::to_value(doc).expect("gram matrix serializes")
    }

    /// The matrix at a point as CSV rows (entries in canonical text form).
    pub fn to_csv(&self, point: &[CyclotomicNumber]) -> Result<String> {
        let m = self.evaluate(point)?;
        let mut out = String::new();
        for r in m.to_rows() {
            let cells: Vec<String> = r.iter().map(|c| csv_cell(&c.to_string())).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn gram_matrix(n: usize, order: u32, d: DepthBound, weight: &Weight) -> Result<GramMatrix> {
    Ok(StandardModule::new(n, order, d, weight.clone())?.gram_matrix())
}

pub fn gram_determinant(n: usize, order: u32, d: DepthBound, weight: &Weight) -> Result<CycPolynomial> {
    gram_matrix(n, order, d, weight)?.determinant()
}

pub fn gram_determinant_at(
    n: usize,
    order: u32,
    d: DepthBound,
    weight: &Weight,
    point: &[CyclotomicNumber],
) -> Result<CyclotomicNumber> {
    gram_matrix(n, order, d, weight)?.determinant_at(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycPolynomial as P;

    #[test]
    fn two_strand_blob() {
        let g = gram_matrix(2, 2, DepthBound::Infinite, &Weight::empty()).unwrap();
        let expect = Matrix::from_rows(
            vec![vec![P::var(2, 0), P::var(2, 1)], vec![P::var(2, 1), P::var(2, 0)]],
            &P::zero(2),
        );
        assert_eq!(g.entries, expect);
        assert_eq!(g.determinant().unwrap().to_string(), "d0^2 - d1^2");
    }

    #[test]
    fn temperley_lieb_and_top() {
        let d = gram_determinant(2, 1, DepthBound::Finite(0), &Weight::empty()).unwrap();
        assert_eq!(d, P::var(1, 0));
        let top = gram_determinant(3, 2, DepthBound::Infinite, &Weight::new(3, vec![1, 2, 1])).unwrap();
        assert_eq!(top, P::one(2));
    }

    #[test]
    fn structural_properties() {
        for (n, m, d) in [(4, 2, DepthBound::Infinite), (4, 3, DepthBound::Finite(1)), (5, 1, DepthBound::Finite(0))] {
            for w in crate::modules::weights(n, m, d).all() {
                let g = gram_matrix(n, m, d, &w).unwrap();
                assert!(g.is_bar_symmetric());
                assert!(g.dominance_failures().is_empty());
                assert!(g.entries_are_monomials());
            }
        }
    }

    #[test]
    fn guard_and_csv() {
        let g = gram_matrix(5, 3, DepthBound::Infinite, &Weight::new(1, vec![1])).unwrap();
        assert!(matches!(g.determinant(), Err(ContourError::GuardExceeded(_))));
        let small = gram_matrix(2, 2, DepthBound::Infinite, &Weight::empty()).unwrap();
        let point = vec![CyclotomicNumber::from_integer(2, 3), CyclotomicNumber::from_integer(2, 1)];
        assert_eq!(small.to_csv(&point).unwrap(), "3,1\n1,3\n");
        assert_eq!(small.determinant_at(&point).unwrap(), CyclotomicNumber::from_integer(2, 8));
    }
}
