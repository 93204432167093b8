//! A module given by the action matrices of the algebra generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{generators, Generator};
use crate::arith::{CycPolynomial, CyclotomicNumber, Matrix, Ring};
use crate::diagram::DepthBound;
use crate::error::{ContourError, Result};

/// Generator matrices over `T`; `params` holds the loop values d_0..d_{m-1}.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation<T: Ring> {
    n: usize,
    order: u32,
    depth: DepthBound,
    params: Vec<T>,
    generators: Vec<Generator>,
    matrices: Vec<Matrix<T>>,
    dim: usize,
}

impl<T: Ring> ModulePresentation<T> {
    pub fn new(
        n: usize,
        order: u32,
        depth: DepthBound,
        params: Vec<T>,
        gens: Vec<Generator>,
        matrices: Vec<Matrix<T>>,
        dim: usize,
    ) -> Result<Self> {
        if params.len() != order as usize {
            return Err(ContourError::PointDimension {
                expected: order as usize,
                got: params.len(),
            });
        }
        if gens != generators(n, order, depth) || matrices.len() != gens.len() {
            return Err(ContourError::Module(format!(
                "expected one matrix per generator of the algebra on {} strands",
                n
            )));
        }
        if let Some(bad) = matrices.iter().find(|a| a.rows() != dim || a.cols() != dim) {
            return Err(ContourError::NotSquare {
                rows: bad.rows(),
                cols: bad.cols(),
            });
        }
        Ok(ModulePresentation {
            n,
            order,
            depth,
            params,
            generators: gens,
            matrices,
            dim,
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

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[T] {
        &self.params
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn matrices(&self) -> &[Matrix<T>] {
        &self.matrices
    }

    pub fn matrix(&self, g: Generator) -> Option<&Matrix<T>> {
        self.generators.iter().position(|&h| h == g).map(|k| &self.matrices[k])
    }

    fn zero(&self) -> T {
        self.params[0].zero_like()
    }

    fn identity(&self) -> Matrix<T> {
        Matrix::identity(self.dim, &self.zero())
    }

    fn power(&self, a: &Matrix<T>, k: u32) -> Matrix<T> {
        (0..k).fold(self.identity(), |acc, _| acc.mul(a))
    }

    /// Defining relations of the algebra that fail on these matrices.
    pub fn relation_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: String| {
            if !ok {
                out.push(what);
            }
        };
        let e = |i: usize| self.matrix(Generator::E(i));
        let t = |i: usize| self.matrix(Generator::Tbar(i));
        for i in 1..self.n {
            let ei = e(i).unwrap();
            check(ei.mul(ei) == ei.scale(&self.params[0]), format!("E({})^2 = d0 E({})", i, i));
            for j in 1..self.n {
                let ej = e(j).unwrap();
                if i.abs_diff(j) == 1 {
                    check(ei.mul(ej).mul(ei) == *ei, format!("E({0}) E({1}) E({0}) = E({0})", i, j));
                } else if i.abs_diff(j) >= 2 {
                    check(ei.mul(ej) == ej.mul(ei), format!("E({}) E({}) commute", i, j));
                }
            }
            for j in (1..=self.n).filter(|&j| j != i && j != i + 1) {
                if let Some(tj) = t(j) {
                    check(ei.mul(tj) == tj.mul(ei), format!("E({}) T({}) commute", i, j));
                }
            }
            if let (Some(ti), Some(tn)) = (t(i), t(i + 1)) {
                check(ei.mul(ti) == ei.mul(tn), format!("E({0}) T({0}) = E({0}) T({1})", i, i + 1));
                check(ti.mul(ei) == tn.mul(ei), format!("T({0}) E({0}) = T({1}) E({0})", i, i + 1));
            }
            if let Some(tn) = t(i + 1) {
                for k in 0..self.order {
                    let lhs = ei.mul(&self.power(tn, k)).mul(ei);
                    check(
                        lhs == ei.scale(&self.params[k as usize]),
                        format!("E({0}) T({1})^{2} E({0}) = d{2} E({0})", i, i + 1, k),
                    );
                }
            }
        }
        for i in 1..=self.n {
            if let Some(ti) = t(i) {
                check(self.power(ti, self.order) == self.identity(), format!("T({})^m = 1", i));
                for j in i + 1..=self.n {
                    if let Some(tj) = t(j) {
                        check(ti.mul(tj) == tj.mul(ti), format!("T({}) T({}) commute", i, j));
                    }
                }
            }
        }
        out
    }
}

impl ModulePresentation<CycPolynomial> {
    pub fn evaluate(&self, point: &[CyclotomicNumber]) -> Result<ModulePresentation<CyclotomicNumber>> {
        if point.len() != self.order as usize {
            return Err(ContourError::PointDimension {
                expected: self.order as usize,
                got: point.len(),
            });
        }
        let zero = CyclotomicNumber::zero(self.order);
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for a in &self.matrices {
            let mut b = Matrix::zeros(a.rows(), a.cols(), &zero);
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    if !a[(i, j)].is_zero() {
                        b[(i, j)] = a[(i, j)].evaluate(point)?;
                    }
                }
            }
            matrices.push(b);
        }
        ModulePresentation::new(
            self.n,
            self.order,
            self.depth,
            point.to_vec(),
            self.generators.clone(),
            matrices,
            self.dim,
        )
    }
}

impl ModulePresentation<CyclotomicNumber> {
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if (self.n, self.order, self.depth) != (other.n, other.order, other.depth) || self.params != other.params {
            return Err(ContourError::ContextMismatch);
        }
        let zero = self.zero();
        let dim = self.dim + other.dim;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut c = Matrix::zeros(dim, dim, &zero);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        c[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        c[(self.dim + i, self.dim + j)] = b[(i, j)].clone();
                    }
                }
                c
            })
            .collect();
        ModulePresentation::new(
            self.n,
            self.order,
            self.depth,
            self.params.clone(),
            self.generators.clone(),
            matrices,
            dim,
        )
    }

    /// The module in the basis given by the columns of `p`: matrices p^-1 A p.
    pub fn change_basis(&self, p: &Matrix<CyclotomicNumber>) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| ContourError::Module("base change is not invertible".into()))?;
        if p.rows() != self.dim {
            return Err(ContourError::Module("base change has the wrong size".into()));
        }
        let matrices = self.matrices.iter().map(|a| inv.mul(a).mul(p)).collect();
        ModulePresentation::new(
            self.n,
            self.order,
            self.depth,
            self.params.clone(),
            self.generators.clone(),
            matrices,
            self.dim,
        )
    }

    /// A seeded random invertible matrix with small integer entries.
    pub fn random_base_change(&self, seed: u64) -> Matrix<CyclotomicNumber> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let zero = self.zero();
        loop {
            let mut p = Matrix::zeros(self.dim, self.dim, &zero);
            for i in 0..self.dim {
                for j in 0..self.dim {
                    p[(i, j)] = CyclotomicNumber::from_integer(self.order, rng.gen_range(-3..=3));
                }
            }
            if p.inverse().is_some() {
                return p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{StandardModule, Weight};

    #[test]
    fn standard_modules_satisfy_relations() {
        for (n, m, d) in [(3, 2, DepthBound::Infinite), (4, 3, DepthBound::Finite(1)), (3, 1, DepthBound::Finite(0))] {
            for w in crate::modules::weights(n, m, d).all() {
                let p = StandardModule::new(n, m, d, w.clone()).unwrap().presentation().unwrap();
                assert!(p.relation_defects().is_empty(), "{} {:?}", w, p.relation_defects());
            }
        }
    }

    #[test]
    fn broken_matrices_are_reported() {
        let p = StandardModule::new(2, 2, DepthBound::Infinite, Weight::empty())
            .unwrap()
            .presentation()
            .unwrap();
        let mut mats = p.matrices().to_vec();
        mats[0] = mats[0].scale(&CycPolynomial::from_integer(2, 2));
        let q = ModulePresentation::new(2, 2, DepthBound::Infinite, p.params().to_vec(), p.generators().to_vec(), mats, 2).unwrap();
        assert!(!q.relation_defects().is_empty());
    }

    #[test]
    fn base_change_roundtrip() {
        let point = crate::arith::random_point(2, 2, 3);
        let p = StandardModule::new(3, 2, DepthBound::Infinite, Weight::new(1, vec![1]))
            .unwrap()
            .presentation_at(&point)
            .unwrap();
        let b = p.random_base_change(9);
        let q = p.change_basis(&b).unwrap();
        assert_eq!(q.change_basis(&b.inverse().unwrap()).unwrap(), p);
        assert_eq!(p.direct_sum(&q).unwrap().dim(), 8);
    }
}
