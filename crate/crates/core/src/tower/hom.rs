//! Homomorphisms between standard modules at a parameter point.
//!
//! With an invertible loop parameter, localisation identifies the space of
//! maps on n strands with the one on l strands, l the propagating number of
//! the source. Maps to a target with more propagating lines vanish.

use serde::Serialize;

use super::functors::intertwiners;
use crate::arith::{CyclotomicNumber, Matrix, Ring};
use crate::diagram::DepthBound;
use crate::error::{ContourError, Result};
use crate::modules::{StandardModule, Weight};

#[derive(Clone, Debug, PartialEq)]
pub struct HomSpace {
    pub n: usize,
    pub source: Weight,
    pub target: Weight,
    /// Strand count at which the intertwiners were solved.
    pub level: usize,
    pub point: Vec<CyclotomicNumber>,
    pub basis: Vec<Matrix<CyclotomicNumber>>,
}

#[derive(Serialize)]
struct HomJson<'a> {
    n: usize,
    source: &'a Weight,
    target: &'a Weight,
    level: usize,
    point: Vec<String>,
    dimension: usize,
    basis: Vec<Vec<Vec<String>>>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = HomJson {
            n: self.n,
            source: &self.source,
            target: &self.target,
            level: self.level,
            point: self.point.iter().map(|x| x.to_string()).collect(),
            dimension: self.dimension(),
            basis: self
                .basis
                .iter()
                .map(|x| x.to_rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect())
                .collect(),
        };
        serde_json::to_value(doc).expect("hom space serializes")
    }
}

fn solve_at(
    level: usize,
    order: u32,
    d: DepthBound,
    source: &Weight,
    target: &Weight,
    point: &[CyclotomicNumber],
) -> Result<Vec<Matrix<CyclotomicNumber>>> {
    let a = StandardModule::new(level, order, d, source.clone())?.presentation_at(point)?;
    let b = StandardModule::new(level, order, d, target.clone())?.presentation_at(point)?;
    intertwiners(&a, &b)
}

fn check_inputs(n: usize, order: u32, d: DepthBound, source: &Weight, target: &Weight, point: &[CyclotomicNumber]) -> Result<()> {
    source.validate(n, order, d)?;
    target.validate(n, order, d)?;
    if point.len() != order as usize {
        return Err(ContourError::PointDimension {
            expected: order as usize,
            got: point.len(),
        });
    }
    Ok(())
}

/// Intertwiners solved directly on n strands.
pub fn hom_space_direct(
    n: usize,
    order: u32,
    d: DepthBound,
    source: &Weight,
    target: &Weight,
    point: &[CyclotomicNumber],
) -> Result<HomSpace> {
    check_inputs(n, order, d, source, target, point)?;
    Ok(HomSpace {
        n,
        source: source.clone(),
        target: target.clone(),
        level: n,
        point: point.to_vec(),
        basis: solve_at(n, order, d, source, target, point)?,
    })
}

/// Intertwiners after reducing to the source's propagating number; needs
/// d_pivot nonzero at the point whenever a reduction happens.
pub fn hom_space(
    n: usize,
    order: u32,
    d: DepthBound,
    source: &Weight,
    target: &Weight,
    point: &[CyclotomicNumber],
    pivot: u32,
) -> Result<HomSpace> {
    check_inputs(n, order, d, source, target, point)?;
    let empty = |level| HomSpace {
        n,
        source: source.clone(),
        target: target.clone(),
        level,
        point: point.to_vec(),
        basis: Vec::new(),
    };
    if target.prop() > source.prop() {
        return Ok(empty(n));
    }
    let level = source.prop();
    if level < n {
        let p = point.get(pivot as usize).ok_or_else(|| ContourError::InvalidPivot {
            pivot,
            reason: format!("must be below m = {}", order),
        })?;
        if p.is_zero() {
            return Err(ContourError::PivotVanishes(pivot));
        }
        if pivot > 0 && !d.allows(n - 1) {
            return Err(ContourError::InvalidPivot {
                pivot,
                reason: format!("southern arc has depth {} > d = {}", n - 1, d),
            });
        }
    }
    Ok(HomSpace {
        basis: solve_at(level, order, d, source, target, point)?,
        ..empty(level)
    })
}
