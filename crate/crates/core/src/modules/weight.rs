//! Weights labelling standard modules, and the weight lattice Λ_n.
//!
//! A weight is a propagating number l together with one character label in
//! `1..=m` for each of the min(l, d) easternmost propagating lines, listed
//! west to east. Label i means a bead on that line acts by v^(-i).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::diagram::DepthBound;
use crate::error::{ContourError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    prop: usize,
    labels: Vec<u32>,
}

impl Weight {
    pub fn new(prop: usize, labels: Vec<u32>) -> Self {
        Weight { prop, labels }
    }

    pub fn empty() -> Self {
        Weight::new(0, Vec::new())
    }

    pub fn prop(&self) -> usize {
        self.prop
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Checks membership in Λ_n for the given parameters.
    pub fn validate(&self, n: usize, order: u32, d: DepthBound) -> Result<()> {
        let bad = || ContourError::WeightNotInLattice {
            weight: self.to_string(),
            n,
        };
        if self.prop > n || (n - self.prop) % 2 != 0 {
            return Err(bad());
        }
        if self.labels.len() != d.min_with(self.prop) {
            return Err(bad());
        }
        if self.labels.iter().any(|&i| i < 1 || i > order) {
            return Err(bad());
        }
        Ok(())
    }

    /// The same labels with one more propagating line on the west, carrying
    /// `label` when the depth bound lets it hold one.
    pub fn extended(&self, label: Option<u32>) -> Weight {
        let mut labels = Vec::with_capacity(self.labels.len() + 1);
        labels.extend(label);
        labels.extend_from_slice(&self.labels);
        Weight::new(self.prop + 1, labels)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prop == 0 {
            return write!(f, "empty");
        }
        let labels: Vec<String> = self.labels.iter().map(u32::to_string).collect();
        write!(f, "l={}:{}", self.prop, labels.join(","))
    }
}

/// Accepts `empty` or `l=<prop>:<i1>,<i2>,...` (the label list may be empty).
impl FromStr for Weight {
    type Err = ContourError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "empty" {
            return Ok(Weight::empty());
        }
        let body = t
            .strip_prefix("l=")
            .ok_or_else(|| ContourError::parse(0, "expected 'empty' or 'l=<prop>:<labels>'"))?;
        let (prop, labels) = body.split_once(':').unwrap_or((body, ""));
        let prop: usize = prop
            .trim()
            .parse()
            .map_err(|_| ContourError::parse(2, "bad propagating number"))?;
        let mut out = Vec::new();
        let mut pos = 2 + body.find(':').map_or(body.len(), |p| p + 1);
        for item in labels.split(',') {
            let trimmed = item.trim();
            if !trimmed.is_empty() {
                out.push(
                    trimmed
                        .parse()
                        .map_err(|_| ContourError::parse(pos, "bad label"))?,
                );
            }
            pos += item.len() + 1;
        }
        Ok(Weight::new(prop, out))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Λ_n split into strata Λ^l_n by propagating number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightLattice {
    pub n: usize,
    pub m: u32,
    pub d: DepthBound,
    pub strata: BTreeMap<usize, Vec<Weight>>,
}

impl WeightLattice {
    pub fn len(&self) -> usize {
        self.strata.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every weight, from the top stratum down.
    pub fn all(&self) -> Vec<Weight> {
        self.strata.values().rev().flatten().cloned().collect()
    }

    pub fn stratum(&self, l: usize) -> &[Weight] {
        self.strata.get(&l).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.stratum(w.prop()).contains(w)
    }
}

/// All label tuples of length k over `1..=m`, lexicographically.
pub fn label_tuples(k: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=m).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn weights(n: usize, m: u32, d: DepthBound) -> WeightLattice {
    let mut strata = BTreeMap::new();
    for l in (n % 2..=n).step_by(2) {
        let ws = label_tuples(d.min_with(l), m)
            .into_iter()
            .map(|t| Weight::new(l, t))
            .collect();
        strata.insert(l, ws);
    }
    WeightLattice { n, m, d, strata }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_examples() {
        let w = weights(2, 2, DepthBound::Infinite);
        assert_eq!(w.len(), 5);
        assert_eq!(
            w.all().iter().map(Weight::to_string).collect::<Vec<_>>(),
            ["l=2:1,1", "l=2:1,2", "l=2:2,1", "l=2:2,2", "empty"]
        );
        let tl = weights(5, 1, DepthBound::Finite(0));
        assert_eq!(tl.all().iter().map(Weight::prop).collect::<Vec<_>>(), [5, 3, 1]);
        assert_eq!(weights(0, 3, DepthBound::Finite(1)).all(), [Weight::empty()]);
    }

    #[test]
    fn parse_and_validate() {
        let w: Weight = "l=2:1,2".parse().unwrap();
        assert_eq!(w, Weight::new(2, vec![1, 2]));
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
        assert_eq!("empty".parse::<Weight>().unwrap(), Weight::empty());
        assert_eq!("l=3".parse::<Weight>().unwrap(), Weight::new(3, vec![]));
        assert!(w.validate(2, 2, DepthBound::Infinite).is_ok());
        assert!(w.validate(3, 2, DepthBound::Infinite).is_err());
        assert!(w.validate(2, 2, DepthBound::Finite(1)).is_err());
        assert!(Weight::new(2, vec![1, 3]).validate(2, 2, DepthBound::Infinite).is_err());
        assert!(matches!("l=2:1,x".parse::<Weight>(), Err(ContourError::Parse { position: 6, .. })));
        assert!("full".parse::<Weight>().is_err());
    }
}
