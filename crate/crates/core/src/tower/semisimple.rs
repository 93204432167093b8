//! Semisimplicity certificates from Gram determinants, and the recursive
//! construction of the simple labels.

use serde::Serialize;

use crate::arith::{CyclotomicNumber, Ring};
use crate::diagram::DepthBound;
use crate::error::{ContourError, Result};
use crate::modules::{gram_matrix, label_tuples, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramValue {
    pub n: usize,
    pub weight: Weight,
    pub determinant: String,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityCertificate {
    pub n: usize,
    pub m: u32,
    pub d: DepthBound,
    pub point: Vec<String>,
    pub semisimple: bool,
    pub determinants: Vec<GramValue>,
    pub vanishing: Vec<GramValue>,
}

/// Evaluates the Gram determinant of every standard module on n' <= n
/// strands with propagating number n' - 2; the verdict is semisimple when
/// none vanishes.
pub fn semisimplicity_certificate(
    n: usize,
    order: u32,
    d: DepthBound,
    point: &[CyclotomicNumber],
) -> Result<SemisimplicityCertificate> {
    if point.len() != order as usize {
        return Err(ContourError::PointDimension {
            expected: order as usize,
            got: point.len(),
        });
    }
    let mut determinants = Vec::new();
    for level in 2..=n {
        let l = level - 2;
        for labels in label_tuples(d.min_with(l), order) {
            let w = Weight::new(l, labels);
            let det = gram_matrix(level, order, d, &w)?.determinant_at(point)?;
            determinants.push(GramValue {
                n: level,
                weight: w,
                vanishes: det.is_zero(),
                determinant: det.to_string(),
            });
        }
    }
    let vanishing: Vec<GramValue> = determinants.iter().filter(|g| g.vanishes).cloned().collect();
    Ok(SemisimplicityCertificate {
        n,
        m: order,
        d,
        point: point.iter().map(|x| x.to_string()).collect(),
        semisimple: vanishing.is_empty(),
        determinants,
        vanishing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleLabel {
    pub weight: Weight,
    /// Strand count at which the label first appears as a top stratum.
    pub introduced_at: usize,
}

/// Labels of the simple modules built as the top stratum on n strands
/// followed by the labels on n - 2 strands.
pub fn simple_labels(n: usize, order: u32, d: DepthBound) -> Vec<SimpleLabel> {
    let mut out: Vec<SimpleLabel> = label_tuples(d.min_with(n), order)
        .into_iter()
        .map(|t| SimpleLabel {
            weight: Weight::new(n, t),
            introduced_at: n,
        })
        .collect();
    if n >= 2 {
        out.extend(simple_labels(n - 2, order, d));
    }
    out
}
