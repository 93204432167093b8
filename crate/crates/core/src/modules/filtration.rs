//! Restriction of a standard module to the algebra on one fewer strand.
//!
//! The smaller algebra acts on the eastern n - 1 strands. Half diagrams
//! whose westmost northern node lies on a propagating line span a submodule
//! isomorphic to a standard module on n - 1 strands (remove that line). The
//! remaining basis elements have an arc at the westmost node; rotating that
//! node to the westmost southern position turns the arc into a propagating
//! line, and the character sums over its bead count split the quotient into
//! standard modules with one more propagating line.

use serde::Serialize;

use super::standard::{ModuleVector, StandardModule};
use super::weight::Weight;
use crate::algebra::generators;
use crate::arith::{axpy, CycPolynomial, CyclotomicNumber, Ring};
use crate::diagram::{DepthBound, PlanarDiagram};
use crate::error::{ContourError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LayerRole {
    Submodule,
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationLayer {
    pub weight: Weight,
    pub role: LayerRole,
    pub multiplicity: usize,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub n: usize,
    pub m: u32,
    pub d: DepthBound,
    pub weight: Weight,
    pub level: usize,
    pub total_dim: usize,
    pub layers: Vec<FiltrationLayer>,
    pub dimension_identity: bool,
    pub support_ok: bool,
    pub verified: bool,
    pub mismatches: Vec<String>,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.dimension_identity && self.support_ok && self.verified
    }
}

/// Moves every boundary index one step anticlockwise: the westmost northern
/// node becomes the westmost southern node.
pub(crate) fn rotate_down(d: &PlanarDiagram) -> PlanarDiagram {
    d.rotated(d.n_north() - 1, -1).expect("rotation preserves planarity")
}

/// Inverse of [`rotate_down`].
pub(crate) fn rotate_up(d: &PlanarDiagram) -> PlanarDiagram {
    d.rotated(d.n_north() + 1, 1).expect("rotation preserves planarity")
}

fn west_is_propagating(d: &PlanarDiagram) -> bool {
    d.is_propagating(0)
}

/// Generator diagrams of the algebra on n - 1 strands, placed on the eastern strands.
fn embedded_generators(n: usize, order: u32, d: DepthBound) -> Result<Vec<(String, PlanarDiagram, PlanarDiagram)>> {
    generators(n - 1, order, d)
        .into_iter()
        .map(|g| {
            let small = g.diagram(n - 1, order)?;
            Ok((g.to_string(), small.pad_left(1), small))
        })
        .collect()
}

fn act_vector(module: &StandardModule, x: &PlanarDiagram, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::new();
    for (&j, a) in v {
        if let Some((c, k)) = module.act_diagram(x, j) {
            axpy(&mut out, k, &a.mul(&c));
        }
    }
    out
}

fn nu(order: u32, k: i64) -> CycPolynomial {
    CycPolynomial::constant(CyclotomicNumber::nu_pow(order, k))
}

/// The weight of the submodule layer, if any.
pub fn restriction_bottom_weight(weight: &Weight, d: DepthBound) -> Option<Weight> {
    let l = weight.prop();
    if l == 0 {
        return None;
    }
    let labels = if d.allows(l) {
        weight.labels()[1..].to_vec()
    } else {
        weight.labels().to_vec()
    };
    Some(Weight::new(l - 1, labels))
}

/// Quotient layers as (weight, twist): the twist i builds the character sum
/// with weights v^(i t) over the bead count t on the rotated arc.
pub fn restriction_top_weights(n: usize, weight: &Weight, order: u32, d: DepthBound) -> Vec<(Weight, Option<u32>)> {
    let l = weight.prop();
    if l >= n {
        return Vec::new();
    }
    if d.allows(l + 1) {
        (1..=order).map(|i| (weight.extended(Some(i)), Some(i))).collect()
    } else {
        vec![(weight.extended(None), None)]
    }
}

pub fn restriction_filtration(module: &StandardModule) -> Result<FiltrationReport> {
    let (n, m, d) = (module.n(), module.order(), module.depth());
    if n == 0 {
        return Err(ContourError::Module("restriction needs at least one strand".into()));
    }
    let l = module.prop();
    let weight = module.weight().clone();
    let gens = embedded_generators(n, m, d)?;
    let mut mismatches = Vec::new();
    let mut layers = Vec::new();
    let mut verified = true;
    let mut covered = vec![false; module.dim()];

    if let Some(mu) = restriction_bottom_weight(&weight, d) {
        let sub = StandardModule::new(n - 1, m, d, mu.clone())?;
        for (j, b) in sub.basis().iter().enumerate() {
            let lifted = PlanarDiagram::identity(1, m).tensor(b);
            let Some(idx) = module.index_of(&lifted) else {
                verified = false;
                mismatches.push(format!("{} has no lift", b));
                continue;
            };
            covered[idx] = true;
            for (name, big, small) in &gens {
                let lhs = act_vector(module, big, &module.basis_vector(idx));
                let image = act_vector(&sub, small, &sub.basis_vector(j));
                let mut rhs = ModuleVector::new();
                for (k, c) in image {
                    let up = PlanarDiagram::identity(1, m).tensor(&sub.basis()[k]);
                    axpy(&mut rhs, module.index_of(&up).expect("lift exists"), &c);
                }
                if lhs != rhs {
                    verified = false;
                    if mismatches.len() < 5 {
                        mismatches.push(format!("{} on submodule element {}", name, b));
                    }
                }
            }
        }
        let bottom: Vec<usize> = (0..module.dim()).filter(|&i| west_is_propagating(&module.basis()[i])).collect();
        if bottom.len() != sub.dim() {
            verified = false;
            mismatches.push(format!("submodule has {} elements, expected {}", bottom.len(), sub.dim()));
        }
        layers.push(FiltrationLayer {
            weight: mu,
            role: LayerRole::Submodule,
            multiplicity: 1,
            dimension: sub.dim(),
        });
    }

    let in_bottom: Vec<bool> = module.basis().iter().map(west_is_propagating).collect();
    let drop_bottom = |v: ModuleVector| -> ModuleVector { v.into_iter().filter(|(k, _)| !in_bottom[*k]).collect() };
    for (nu_weight, twist) in restriction_top_weights(n, &weight, m, d) {
        let target = StandardModule::new(n - 1, m, d, nu_weight.clone())?;
        // w(j): the character sum lifted from target basis element j.
        let lift = |j: usize| -> Option<ModuleVector> {
            let base = rotate_up(&target.basis()[j]);
            let line = base.line_of(0);
            let mut v = ModuleVector::new();
            match twist {
                Some(i) => {
                    for t in 0..m {
                        let idx = module.index_of(&base.with_bead(line, t))?;
                        axpy(&mut v, idx, &nu(m, i as i64 * t as i64));
                    }
                }
                None => {
                    v.insert(module.index_of(&base)?, CycPolynomial::one(m));
                }
            }
            Some(v)
        };
        let lifts: Vec<Option<ModuleVector>> = (0..target.dim()).map(lift).collect();
        for (j, w) in lifts.iter().enumerate() {
            let Some(w) = w else {
                verified = false;
                mismatches.push(format!("{} has no lift", target.basis()[j]));
                continue;
            };
            for &k in w.keys() {
                covered[k] = true;
            }
            for (name, big, small) in &gens {
                let lhs = drop_bottom(act_vector(module, big, w));
                let mut rhs = ModuleVector::new();
                for (k, c) in act_vector(&target, small, &target.basis_vector(j)) {
                    if let Some(wk) = &lifts[k] {
                        for (&idx, a) in wk {
                            axpy(&mut rhs, idx, &a.mul(&c));
                        }
                    }
                }
                if lhs != rhs {
                    verified = false;
                    if mismatches.len() < 5 {
                        mismatches.push(format!(
                            "{} on quotient element {} of layer {}",
                            name,
                            target.basis()[j],
                            nu_weight
                        ));
                    }
                }
            }
        }
        layers.push(FiltrationLayer {
            weight: nu_weight,
            role: LayerRole::Quotient,
            multiplicity: 1,
            dimension: target.dim(),
        });
    }
    if covered.iter().any(|&c| !c) {
        verified = false;
        mismatches.push("some basis elements lie in no layer".into());
    }

    let total: usize = layers.iter().map(|x| x.multiplicity * x.dimension).sum();
    let support_ok = layers.iter().all(|x| {
        let p = x.weight.prop();
        (p + 1 == l || p == l + 1) && x.weight.validate(n - 1, m, d).is_ok()
    });
    Ok(FiltrationReport {
        n,
        m,
        d,
        weight,
        level: n - 1,
        total_dim: module.dim(),
        dimension_identity: total == module.dim(),
        layers,
        support_ok,
        verified,
        mismatches,
    })
}

/// Layers of the induced module, read off the restriction of the standard
/// module two levels up.
pub fn induction_support(n: usize, order: u32, d: DepthBound, weight: &Weight) -> Result<FiltrationReport> {
    weight.validate(n, order, d)?;
    restriction_filtration(&StandardModule::new(n + 2, order, d, weight.clone())?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    pub n: usize,
    pub weight: Weight,
    pub source: Weight,
    pub source_dim: usize,
    pub target_dim: usize,
    pub intertwining: bool,
    pub surjective: bool,
    pub mismatches: Vec<String>,
}

impl ProjectionReport {
    pub fn passed(&self) -> bool {
        self.intertwining && self.surjective
    }
}

/// The surjection from the induced module of the standard module with one
/// fewer propagating line (realized as a restriction from n + 1 strands)
/// onto the given standard module.
pub fn induction_projection(target: &StandardModule) -> Result<ProjectionReport> {
    let (n, m, d) = (target.n(), target.order(), target.depth());
    let weight = target.weight().clone();
    let l = weight.prop();
    if l == 0 {
        return Err(ContourError::Module("no weight with one fewer propagating line".into()));
    }
    let (source_weight, twist) = if d.allows(l) {
        (Weight::new(l - 1, weight.labels()[1..].to_vec()), Some(weight.labels()[0]))
    } else {
        (Weight::new(l - 1, weight.labels().to_vec()), None)
    };
    let source = StandardModule::new(n + 1, m, d, source_weight.clone())?;
    // Image of each source basis element in the target.
    let project = |x: &PlanarDiagram| -> Result<ModuleVector> {
        if west_is_propagating(x) {
            return Ok(ModuleVector::new());
        }
        let line = x.line_of(0);
        let t = x.bead(line);
        let bare = rotate_down(&x.with_bead(line, 0));
        let idx = target
            .index_of(&bare)
            .ok_or_else(|| ContourError::Module(format!("{} does not rotate into the target", x)))?;
        let c = match twist {
            Some(i) => nu(m, -(i as i64) * t as i64),
            None if t == 0 => CycPolynomial::one(m),
            None => return Err(ContourError::Module(format!("{} carries beads at an undecorated depth", x))),
        };
        let mut v = ModuleVector::new();
        v.insert(idx, c);
        Ok(v)
    };
    let images = source.basis().iter().map(project).collect::<Result<Vec<_>>>()?;
    let apply = |v: &ModuleVector| -> ModuleVector {
        let mut out = ModuleVector::new();
        for (&j, a) in v {
            for (&k, c) in &images[j] {
                axpy(&mut out, k, &a.mul(c));
            }
        }
        out
    };
    let mut intertwining = true;
    let mut mismatches = Vec::new();
    for (name, big, small) in embedded_generators(n + 1, m, d)? {
        for j in 0..source.dim() {
            let lhs = apply(&act_vector(&source, &big, &source.basis_vector(j)));
            let rhs = act_vector(target, &small, &images[j]);
            if lhs != rhs {
                intertwining = false;
                if mismatches.len() < 5 {
                    mismatches.push(format!("{} on {}", name, source.basis()[j]));
                }
            }
        }
    }
    let mut hit = vec![false; target.dim()];
    for v in &images {
        if v.len() == 1 {
            let (&k, c) = v.iter().next().unwrap();
            if !c.is_zero() {
                hit[k] = true;
            }
        }
    }
    Ok(ProjectionReport {
        n,
        weight,
        source: source_weight,
        source_dim: source.dim(),
        target_dim: target.dim(),
        intertwining,
        surjective: hit.iter().all(|&h| h),
        mismatches,
    })
}
