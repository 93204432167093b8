//! Determinants over integral domains.

use super::linalg::Matrix;
use super::ring::{Domain, Ring};
use crate::error::{ContourError, Result};

/// Single-step fraction-free elimination with row pivoting.
pub fn det_bareiss<T: Domain>(mat: &Matrix<T>) -> Result<T> {
    mat.require_square()?;
    let n = mat.rows();
    let zero = mat.zero_element().clone();
    if n == 0 {
        return Ok(zero.one_like());
    }
    let mut a = mat.clone();
    let mut prev = zero.one_like();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    negate = !negate;
                }
                None => return Ok(zero),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].mul(&a[(k, k)]).sub(&a[(i, k)].mul(&a[(k, j)]));
                a[(i, j)] = num.div_exact(&prev).ok_or(ContourError::InexactDivision)?;
            }
            a[(i, k)] = zero.clone();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Laplace expansion along the first row; exponential, for small sizes only.
pub fn det_cofactor<T: Ring>(mat: &Matrix<T>) -> Result<T> {
    mat.require_square()?;
    let rows = mat.to_rows();
    Ok(cofactor(&rows, mat.zero_element()))
}

fn cofactor<T: Ring>(rows: &[Vec<T>], zero: &T) -> T {
    let n = rows.len();
    if n == 0 {
        return zero.one_like();
    }
    let mut acc = zero.clone();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = rows[0][j].mul(&cofactor(&minor, zero));
        acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}
