//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's enumeration, depth or determinant code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use contour::algebra::AlgebraContext;
use contour::arith::{CycPolynomial, CyclotomicNumber, Matrix, Ring};
use contour::diagram::DepthBound;

/// All non-crossing perfect matchings of the points 0..2k in circular order.
pub fn noncrossing_matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let first = points[0];
    let mut out = Vec::new();
    for j in (1..points.len()).step_by(2) {
        let inner = noncrossing_matchings(&points[1..j]);
        let outer = noncrossing_matchings(&points[j + 1..]);
        for a in &inner {
            for b in &outer {
                let mut m = vec![(first, points[j])];
                m.extend(a.iter().copied());
                m.extend(b.iter().copied());
                out.push(m);
            }
        }
    }
    out
}

/// Depth of each chord: one more than the number of chords separating it
/// from the eastern boundary point, which sits between points nn - 1 and nn.
pub fn chord_depths(chords: &[(usize, usize)], nn: usize) -> Vec<usize> {
    let contains_east = |(a, b): (usize, usize)| a < nn && b >= nn;
    chords
        .iter()
        .enumerate()
        .map(|(x, &(p, _))| {
            1 + chords
                .iter()
                .enumerate()
                .filter(|&(c, &(a, b))| c != x && ((a < p && p < b) != contains_east((a, b))))
                .count()
        })
        .collect()
}

/// Basis size split by propagating number, counted over all matchings.
pub fn count_by_prop(nn: usize, ns: usize, m: u32, d: DepthBound) -> BTreeMap<usize, u128> {
    let points: Vec<usize> = (0..nn + ns).collect();
    let mut out = BTreeMap::new();
    if (nn + ns) % 2 == 1 {
        return out;
    }
    for chords in noncrossing_matchings(&points) {
        let chords: Vec<(usize, usize)> = chords.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let depths = chord_depths(&chords, nn);
        let decorated = depths.iter().filter(|&&dep| d.allows(dep)).count() as u32;
        let prop = chords.iter().filter(|&&(a, b)| a < nn && b >= nn).count();
        *out.entry(prop).or_insert(0) += (m as u128).pow(decorated);
    }
    out
}

pub fn dimension(n: usize, m: u32, d: DepthBound) -> u128 {
    count_by_prop(n, n, m, d).values().sum()
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u128) -> u128 {
    binomial(2 * n, n) / (n + 1)
}

/// Determinant by the Leibniz sum over permutations.
pub fn leibniz<T: Ring>(a: &Matrix<T>, zero: &T) -> T {
    let n = a.rows();
    let mut total = zero.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    leibniz_rec(a, &mut perm, 0, true, zero, &mut total);
    total
}

fn leibniz_rec<T: Ring>(a: &Matrix<T>, perm: &mut Vec<usize>, k: usize, even: bool, zero: &T, total: &mut T) {
    let n = perm.len();
    if k == n {
        let mut term = zero.one_like();
        for (r, &c) in perm.iter().enumerate() {
            term = term.mul(&a[(r, c)]);
        }
        *total = if even { total.add(&term) } else { total.sub(&term) };
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        leibniz_rec(a, perm, k + 1, if i == k { even } else { !even }, zero, total);
        perm.swap(k, i);
    }
}

fn loop_value(point: &[CyclotomicNumber], exps: &[u32]) -> CyclotomicNumber {
    let mut v = point[0].one_like();
    for (k, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            v = v.mul(&point[k]);
        }
    }
    v
}

/// Whether the regular trace form tr(L_{xy}) of the algebra is
/// nondegenerate at the point; over characteristic zero this is
/// equivalent to semisimplicity.
pub fn trace_form_nondegenerate(ctx: &AlgebraContext, point: &[CyclotomicNumber]) -> bool {
    let dim = ctx.dim();
    let zero = point[0].zero_like();
    let trace: Vec<CyclotomicNumber> = (0..dim)
        .map(|r| {
            let mut t = zero.clone();
            for k in 0..dim {
                let (e, s) = ctx.product(r, k);
                if s == k {
                    t = t.add(&loop_value(point, &e));
                }
            }
            t
        })
        .collect();
    let mut form = Matrix::zeros(dim, dim, &zero);
    for i in 0..dim {
        for j in 0..dim {
            let (e, r) = ctx.product(i, j);
            form[(i, j)] = loop_value(point, &e).mul(&trace[r]);
        }
    }
    form.rref().1.len() == dim
}

pub fn var(m: u32, k: usize) -> CycPolynomial {
    CycPolynomial::var(m, k)
}
