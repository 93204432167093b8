//! Dense and sparse exact linear algebra.

use std::collections::BTreeMap;

use super::ring::{Field, Ring};
use crate::error::{ContourError, Result};

/// Row-major dense matrix. A zero prototype is kept so empty shapes still
/// know their ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    zero: T,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, zero: &T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.zero_like(); rows * cols],
            zero: zero.zero_like(),
        }
    }

    pub fn identity(n: usize, zero: &T) -> Self {
        let mut m = Self::zeros(n, n, zero);
        for i in 0..n {
            m[(i, i)] = zero.one_like();
        }
        m
    }

    /// Builds from rows; `zero` fixes the ring when there are no entries.
    pub fn from_rows(rows: Vec<Vec<T>>, zero: &T) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            zero: zero.zero_like(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn zero_element(&self) -> &T {
        &self.zero
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn map<U: Ring>(&self, zero: &U, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: zero.zero_like(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = out[(i, j)].add(&a.mul(b));
                        out[(i, j)] = t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.zero.clone();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ContourError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].sub(&f.mul(&m[(r, j)]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : self * x = 0}.
    pub fn null_space(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.zero.zero_like(); self.cols];
                v[f] = self.zero.one_like();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r[(row, f)].neg();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Self::zeros(n, 2 * n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.zero.one_like();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        let mut m = self.clone();
        let mut det = self.zero.one_like();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(self.zero.zero_like());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let piv = m[(c, c)].clone();
            det = det.mul(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].mul(&inv);
                for j in c..m.cols {
                    if !m[(c, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].sub(&f.mul(&m[(c, j)]));
                    }
                }
            }
        }
        Ok(det)
    }
}

impl<T: Ring> Matrix<T> {
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Ring> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: Ring> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

pub type SparseVec<T> = BTreeMap<usize, T>;

/// Incremental sparse row echelon form with monic pivots.
#[derive(Clone, Debug)]
pub struct EchelonBasis<T: Field> {
    rows: BTreeMap<usize, SparseVec<T>>,
}

impl<T: Field> Default for EchelonBasis<T> {
    fn default() -> Self {
        EchelonBasis {
            rows: BTreeMap::new(),
        }
    }
}

impl<T: Field> EchelonBasis<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `v` against the stored rows; the result has no pivot-column entries.
    pub fn reduce(&self, mut v: SparseVec<T>) -> SparseVec<T> {
        let mut cursor = 0;
        loop {
            let next = v.range(cursor..).map(|(&c, _)| c).find(|c| self.rows.contains_key(c));
            let Some(c) = next else {
                return v;
            };
            let f = v.remove(&c).unwrap();
            for (&j, a) in self.rows[&c].range(c + 1..) {
                axpy(&mut v, j, &f.mul(a).neg());
            }
            cursor = c + 1;
        }
    }

    /// Adds `v` to the span; returns false if it was already dependent.
    pub fn insert(&mut self, v: SparseVec<T>) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let row: SparseVec<T> = r.into_iter().map(|(j, a)| (j, a.mul(&inv))).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn contains(&self, v: SparseVec<T>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Fully reduced rows, keyed by pivot column.
    pub fn into_rref(mut self) -> BTreeMap<usize, SparseVec<T>> {
        let keys: Vec<usize> = self.rows.keys().rev().copied().collect();
        for &p in &keys {
            let row = self.rows.remove(&p).unwrap();
            let reduced = {
                let mut v = row;
                let lead = v.remove(&p).unwrap();
                let mut v = self.reduce(v);
                v.insert(p, lead);
                v
            };
            self.rows.insert(p, reduced);
        }
        self.rows
    }

    /// Basis of the solution space of {x : row . x = 0 for every row} in `ncols` unknowns.
    pub fn null_space(self, ncols: usize, one: &T) -> Vec<SparseVec<T>> {
        let rref = self.into_rref();
        let mut out = Vec::new();
        for f in (0..ncols).filter(|c| !rref.contains_key(c)) {
            let mut v = SparseVec::new();
            v.insert(f, one.clone());
            for (&p, row) in &rref {
                if let Some(a) = row.get(&f) {
                    v.insert(p, a.neg());
                }
            }
            out.push(v);
        }
        out
    }
}

/// v[j] += a, dropping zeros.
pub fn axpy<T: Ring>(v: &mut SparseVec<T>, j: usize, a: &T) {
    if a.is_zero() {
        return;
    }
    match v.get_mut(&j) {
        Some(x) => {
            let s = x.add(a);
            if s.is_zero() {
                v.remove(&j);
            } else {
                *x = s;
            }
        }
        None => {
            v.insert(j, a.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CyclotomicNumber;

    fn c(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_integer(3, n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<CyclotomicNumber> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| c(x)).collect()).collect(), &c(0))
    }

    #[test]
    fn inverse_and_rank() {
        let a = mat(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2, &c(0)));
        let s = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_none());
        let ns = s.null_space();
        assert_eq!(ns.len(), 1);
        assert!(s.mul_vec(&ns[0]).iter().all(Ring::is_zero));
        assert_eq!(a.det().unwrap(), c(1));
    }

    #[test]
    fn sparse_echelon_null_space() {
        let mut e = EchelonBasis::new();
        let row = |v: &[(usize, i64)]| v.iter().map(|&(j, x)| (j, c(x))).collect::<SparseVec<_>>();
        assert!(e.insert(row(&[(0, 1), (1, 1), (2, 1)])));
        assert!(e.insert(row(&[(1, 1), (2, -1)])));
        assert!(!e.insert(row(&[(0, 1), (1, 2)])));
        let ns = e.null_space(3, &c(1));
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let get = |j| v.get(&j).cloned().unwrap_or(c(0));
        assert_eq!(get(0).add(&get(1)).add(&get(2)), c(0));
        assert_eq!(get(1), get(2));
    }
}
