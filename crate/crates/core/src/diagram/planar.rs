//! Non-crossing bead diagrams on a rectangle.
//!
//! Boundary indices run clockwise: northern nodes west to east are
//! `0..n_north`, then southern nodes east to west are
//! `n_north..n_north + n_south`. The east reference point sits between the
//! last northern and the first southern index. A line is named by its smaller
//! endpoint, and its bead count is stored at that index.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::DepthBound;
use crate::error::{ContourError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    North,
    South,
}

/// Boundary node given by edge and column (columns count west to east).
pub type Node = (Side, usize);

/// Closed loops removed by a composition, counted by bead excess mod m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopMonomial {
    pub counts: Vec<u32>,
}

impl LoopMonomial {
    pub fn empty(order: u32) -> Self {
        LoopMonomial {
            counts: vec![0; order as usize],
        }
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn combine(&self, other: &Self) -> Self {
        LoopMonomial {
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarDiagram {
    n_north: usize,
    n_south: usize,
    order: u32,
    partner: Vec<usize>,
    beads: Vec<u32>,
}

impl PlanarDiagram {
    /// Validates and builds a diagram from index pairs and per-line beads.
    pub fn new(
        n_north: usize,
        n_south: usize,
        order: u32,
        pairs: &[(usize, usize)],
        beads: &[(usize, u32)],
    ) -> Result<Self> {
        let total = n_north + n_south;
        if total % 2 != 0 {
            return Err(ContourError::InvalidDiagram(format!(
                "odd boundary size {}",
                total
            )));
        }
        if order == 0 {
            return Err(ContourError::InvalidDiagram("order must be positive".into()));
        }
        let mut partner = vec![usize::MAX; total];
        for &(a, b) in pairs {
            if a >= total || b >= total || a == b {
                return Err(ContourError::InvalidDiagram(format!("bad pair ({}, {})", a, b)));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(ContourError::InvalidDiagram(format!(
                    "node reused in pair ({}, {})",
                    a, b
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(free) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(ContourError::InvalidDiagram(format!("node {} unpaired", free)));
        }
        if let Some((a, b)) = find_crossing(&partner) {
            return Err(ContourError::InvalidDiagram(format!(
                "lines at {} and {} cross",
                a, b
            )));
        }
        let mut bead_vec = vec![0; total];
        for &(line, count) in beads {
            if line >= total || partner[line] < line {
                return Err(ContourError::UnknownLine(line));
            }
            bead_vec[line] = (bead_vec[line] + count) % order;
        }
        Ok(PlanarDiagram {
            n_north,
            n_south,
            order,
            partner,
            beads: bead_vec,
        })
    }

    /// Builds from lines given as node pairs with bead counts; no validation
    /// beyond what the caller guarantees (used by internal constructions).
    pub(crate) fn from_lines(
        n_north: usize,
        n_south: usize,
        order: u32,
        lines: impl IntoIterator<Item = (Node, Node, u32)>,
    ) -> Self {
        let total = n_north + n_south;
        let mut partner = vec![usize::MAX; total];
        let mut beads = vec![0; total];
        let index = |(side, col): Node| match side {
            Side::North => col,
            Side::South => n_north + n_south - 1 - col,
        };
        for (a, b, bead) in lines {
            let (i, j) = (index(a), index(b));
            partner[i] = j;
            partner[j] = i;
            beads[i.min(j)] = (beads[i.min(j)] + bead) % order;
        }
        debug_assert!(partner.iter().all(|&p| p != usize::MAX));
        debug_assert!(find_crossing(&partner).is_none());
        PlanarDiagram {
            n_north,
            n_south,
            order,
            partner,
            beads,
        }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        Self::from_lines(n, n, order, (0..n).map(|c| ((Side::North, c), (Side::South, c), 0)))
    }

    /// E_n(i): cup and cap joining columns i-1 and i.
    pub fn generator_e(n: usize, i: usize, order: u32) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(ContourError::GeneratorOutOfRange { index: i, n });
        }
        let mut lines = vec![
            ((Side::North, i - 1), (Side::North, i), 0),
            ((Side::South, i - 1), (Side::South, i), 0),
        ];
        lines.extend(
            (0..n)
                .filter(|&c| c + 1 != i && c != i)
                .map(|c| ((Side::North, c), (Side::South, c), 0)),
        );
        Ok(Self::from_lines(n, n, order, lines))
    }

    /// Tbar_n(i): one bead on the strand at column i-1. Depth legality is the
    /// caller's concern (see [`PlanarDiagram::generator_tbar_checked`]).
    pub fn generator_tbar(n: usize, i: usize, order: u32) -> Result<Self> {
        if i < 1 || i > n {
            return Err(ContourError::GeneratorOutOfRange { index: i, n });
        }
        Ok(Self::from_lines(
            n,
            n,
            order,
            (0..n).map(|c| ((Side::North, c), (Side::South, c), u32::from(c + 1 == i))),
        ))
    }

    pub fn generator_tbar_checked(n: usize, i: usize, order: u32, d: DepthBound) -> Result<Self> {
        let g = Self::generator_tbar(n, i, order)?;
        if order > 1 && !d.allows(n + 1 - i) {
            return Err(ContourError::DepthIllegal {
                strand: i,
                n,
                depth: d.to_string(),
            });
        }
        Ok(g)
    }

    pub fn n_north(&self) -> usize {
        self.n_north
    }

    pub fn n_south(&self) -> usize {
        self.n_south
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn size(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, idx: usize) -> usize {
        self.partner[idx]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn node(&self, idx: usize) -> Node {
        if idx < self.n_north {
            (Side::North, idx)
        } else {
            (Side::South, self.n_north + self.n_south - 1 - idx)
        }
    }

    pub fn index(&self, (side, col): Node) -> usize {
        match side {
            Side::North => col,
            Side::South => self.n_north + self.n_south - 1 - col,
        }
    }

    /// Line ids in increasing order.
    pub fn lines(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(|&i| self.partner[i] > i)
    }

    pub fn line_of(&self, idx: usize) -> usize {
        idx.min(self.partner[idx])
    }

    pub fn bead(&self, line: usize) -> u32 {
        self.beads[line]
    }

    pub fn beads(&self) -> &[u32] {
        &self.beads
    }

    pub fn is_propagating(&self, line: usize) -> bool {
        (line < self.n_north) != (self.partner[line] < self.n_north)
    }

    pub fn propagating_number(&self) -> usize {
        (0..self.n_north).filter(|&i| self.partner[i] >= self.n_north).count()
    }

    /// Propagating lines from west to east, as line ids (northern endpoints).
    pub fn propagating_lines(&self) -> Vec<usize> {
        (0..self.n_north).filter(|&i| self.partner[i] >= self.n_north).collect()
    }

    /// 1 + number of lines separating `line` from the east reference point.
    pub fn line_depth(&self, line: usize) -> Result<usize> {
        if line >= self.size() || self.partner[line] < line {
            return Err(ContourError::UnknownLine(line));
        }
        Ok(self.depth_unchecked(line))
    }

    fn depth_unchecked(&self, line: usize) -> usize {
        let east = 2 * self.n_north as isize - 1;
        let mut depth = 1;
        for a in self.lines() {
            if a == line {
                continue;
            }
            let b = self.partner[a];
            let inside = a < line && line < b;
            let e_inside = (2 * a as isize) < east && east < 2 * b as isize;
            if inside != e_inside {
                depth += 1;
            }
        }
        depth
    }

    /// Depth of every line, indexed by line id (zero at non-line indices).
    pub fn depths(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for l in self.lines() {
            out[l] = self.depth_unchecked(l);
        }
        out
    }

    pub fn is_depth_legal(&self, d: DepthBound) -> bool {
        self.lines()
            .all(|l| self.beads[l] == 0 || d.allows(self.depth_unchecked(l)))
    }

    pub fn is_bead_free(&self) -> bool {
        self.beads.iter().all(|&b| b == 0)
    }

    /// Same pairing with the given line's bead count replaced.
    pub fn with_bead(&self, line: usize, count: u32) -> Self {
        let mut d = self.clone();
        d.beads[line] = count % self.order;
        d
    }

    pub fn add_bead(&self, line: usize, count: u32) -> Self {
        self.with_bead(line, self.beads[line] + count)
    }

    pub fn without_beads(&self) -> Self {
        let mut d = self.clone();
        d.beads.iter_mut().for_each(|b| *b = 0);
        d
    }

    /// Lines as (node, node, beads) with nodes ordered by index.
    pub fn line_nodes(&self) -> Vec<(Node, Node, u32)> {
        self.lines()
            .map(|l| (self.node(l), self.node(self.partner[l]), self.beads[l]))
            .collect()
    }

    /// Stacks `self` above `below`, returning removed loops and the result.
    pub fn compose(&self, below: &PlanarDiagram) -> Result<(LoopMonomial, PlanarDiagram)> {
        if self.n_south != below.n_north {
            return Err(ContourError::InterfaceMismatch {
                upper: self.n_south,
                lower: below.n_north,
            });
        }
        if self.order != below.order {
            return Err(ContourError::OrderMismatch(self.order, below.order));
        }
        Ok(self.compose_unchecked(below))
    }

    pub(crate) fn compose_unchecked(&self, below: &PlanarDiagram) -> (LoopMonomial, PlanarDiagram) {
        let m = self.order;
        let na = self.n_north;
        let k = self.n_south;
        let nb = below.n_south;
        // States: (false, i) is index i of self, (true, j) index j of below.
        let a_mid = |c: usize| na + (k - 1 - c);
        let total = na + nb;
        let mut partner = vec![usize::MAX; total];
        let mut beads = vec![0u32; total];
        let mut seen_a = vec![false; self.size()];
        let mut seen_b = vec![false; below.size()];

        let result_index = |in_below: bool, idx: usize| -> Option<usize> {
            if !in_below && idx < na {
                Some(idx)
            } else if in_below && idx >= k {
                Some(na + (idx - k))
            } else {
                None
            }
        };

        // Walk from a boundary node of the result until another is reached.
        let walk = |start_below: bool,
                    start: usize,
                    seen_a: &mut Vec<bool>,
                    seen_b: &mut Vec<bool>|
         -> (bool, usize, u32) {
            let (mut in_below, mut idx) = (start_below, start);
            let mut acc = 0u32;
            loop {
                let d = if in_below { below } else { self };
                let p = d.partner[idx];
                acc = (acc + d.beads[idx.min(p)]) % m;
                if in_below {
                    seen_b[idx] = true;
                    seen_b[p] = true;
                } else {
                    seen_a[idx] = true;
                    seen_a[p] = true;
                }
                if result_index(in_below, p).is_some() {
                    return (in_below, p, acc);
                }
                // p is an interface node; cross to the other diagram.
                if in_below {
                    idx = a_mid(p);
                    in_below = false;
                } else {
                    let col = k - 1 - (p - na);
                    idx = col;
                    in_below = true;
                }
            }
        };

        for start in 0..total {
            if partner[start] != usize::MAX {
                continue;
            }
            let (sb, si) = if start < na { (false, start) } else { (true, start - na + k) };
            let (eb, ei, bead) = walk(sb, si, &mut seen_a, &mut seen_b);
            let end = result_index(eb, ei).unwrap();
            partner[start] = end;
            partner[end] = start;
            beads[start.min(end)] = bead;
        }

        let mut loops = LoopMonomial::empty(m);
        for c in 0..k {
            let ai = a_mid(c);
            if seen_a[ai] {
                continue;
            }
            // Closed loop through interface column c.
            let mut acc = 0u32;
            let mut col = c;
            loop {
                let ai = a_mid(col);
                let ap = self.partner[ai];
                seen_a[ai] = true;
                seen_a[ap] = true;
                acc = (acc + self.beads[ai.min(ap)]) % m;
                let next_col = k - 1 - (ap - na);
                let bp = below.partner[next_col];
                seen_b[next_col] = true;
                seen_b[bp] = true;
                acc = (acc + below.beads[next_col.min(bp)]) % m;
                col = bp;
                if col == c {
                    break;
                }
            }
            loops.counts[acc as usize] += 1;
        }
        let _ = seen_b;
        (
            loops,
            PlanarDiagram {
                n_north: na,
                n_south: nb,
                order: m,
                partner,
                beads,
            },
        )
    }

    /// Reflection north <-> south with bead counts negated mod m.
    pub fn flip(&self) -> PlanarDiagram {
        let m = self.order;
        let swap = |(s, c): Node| match s {
            Side::North => (Side::South, c),
            Side::South => (Side::North, c),
        };
        Self::from_lines(
            self.n_south,
            self.n_north,
            m,
            self.line_nodes()
                .into_iter()
                .map(|(a, b, bead)| (swap(a), swap(b), (m - bead) % m)),
        )
    }

    /// Places `self` west of `east`.
    pub fn tensor(&self, east: &PlanarDiagram) -> PlanarDiagram {
        assert_eq!(self.order, east.order, "cyclotomic order mismatch");
        let shift = |(s, c): Node| match s {
            Side::North => (Side::North, c + self.n_north),
            Side::South => (Side::South, c + self.n_south),
        };
        let lines = self.line_nodes().into_iter().chain(
            east.line_nodes()
                .into_iter()
                .map(|(a, b, bead)| (shift(a), shift(b), bead)),
        );
        Self::from_lines(
            self.n_north + east.n_north,
            self.n_south + east.n_south,
            self.order,
            lines,
        )
    }

    /// Adds k undecorated strands on the west.
    pub fn pad_left(&self, k: usize) -> PlanarDiagram {
        Self::identity(k, self.order).tensor(self)
    }

    /// Renumbers every boundary index by `+shift` modulo the boundary size and
    /// splits the result into `n_north` northern and the rest southern nodes.
    pub fn rotated(&self, n_north: usize, shift: isize) -> Result<PlanarDiagram> {
        let size = self.size() as isize;
        if n_north as isize > size {
            return Err(ContourError::InvalidDiagram(format!(
                "cannot put {} of {} nodes on the north edge",
                n_north, size
            )));
        }
        let f = |i: usize| ((i as isize + shift).rem_euclid(size.max(1))) as usize;
        let pairs: Vec<(usize, usize)> = self.lines().map(|l| (f(l), f(self.partner[l]))).collect();
        let beads: Vec<(usize, u32)> = self
            .lines()
            .map(|l| (f(l).min(f(self.partner[l])), self.beads[l]))
            .collect();
        Self::new(n_north, self.size() - n_north, self.order, &pairs, &beads)
    }

    /// Removes a non-propagating line, renumbering the remaining indices in order.
    pub fn without_line(&self, line: usize) -> Result<PlanarDiagram> {
        if line >= self.size() || self.partner[line] < line {
            return Err(ContourError::UnknownLine(line));
        }
        let b = self.partner[line];
        let (nn, ns) = match (line < self.n_north, b < self.n_north) {
            (true, true) => (self.n_north - 2, self.n_south),
            (false, false) => (self.n_north, self.n_south - 2),
            _ => {
                return Err(ContourError::InvalidDiagram(format!(
                    "line {} is propagating",
                    line
                )))
            }
        };
        let f = |i: usize| i - usize::from(i > line) - usize::from(i > b);
        let pairs: Vec<(usize, usize)> = self
            .lines()
            .filter(|&l| l != line)
            .map(|l| (f(l), f(self.partner[l])))
            .collect();
        let beads: Vec<(usize, u32)> = self
            .lines()
            .filter(|&l| l != line)
            .map(|l| (f(l), self.beads[l]))
            .collect();
        Self::new(nn, ns, self.order, &pairs, &beads)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn find_crossing(partner: &[usize]) -> Option<(usize, usize)> {
    let n = partner.len();
    for a in 0..n {
        let b = partner[a];
        if b < a {
            continue;
        }
        for c in a + 1..b {
            let d = partner[c];
            if d < a || d > b {
                return Some((a, c));
            }
        }
    }
    None
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .lines()
            .map(|l| format!("({},{})", l, self.partner[l]))
            .collect();
        let beads: Vec<String> = self
            .lines()
            .filter(|&l| self.beads[l] != 0)
            .map(|l| format!("{}:{}", l, self.beads[l]))
            .collect();
        write!(
            f,
            "{}/{}; pairs={}; beads={}",
            self.n_north,
            self.n_south,
            pairs.join(","),
            beads.join(",")
        )
    }
}

impl PlanarDiagram {
    /// Parses the canonical encoding; the cyclic order is not part of the text.
    pub fn parse(text: &str, order: u32) -> Result<Self> {
        let err = |pos: usize, msg: &str| ContourError::parse(pos, msg);
        let mut parts = text.splitn(3, ';');
        let head = parts.next().unwrap_or("");
        let pairs_part = parts.next().ok_or_else(|| err(text.len(), "missing pairs section"))?;
        let beads_part = parts.next().ok_or_else(|| err(text.len(), "missing beads section"))?;
        let pairs_at = head.len() + 1;
        let beads_at = pairs_at + pairs_part.len() + 1;

        let (nn, ns) = head
            .trim()
            .split_once('/')
            .ok_or_else(|| err(0, "expected n_north/n_south"))?;
        let n_north: usize = nn.trim().parse().map_err(|_| err(0, "bad northern count"))?;
        let n_south: usize = ns.trim().parse().map_err(|_| err(0, "bad southern count"))?;

        let pairs_body = pairs_part
            .trim()
            .strip_prefix("pairs=")
            .ok_or_else(|| err(pairs_at, "expected 'pairs='"))?;
        let mut pairs = Vec::new();
        let mut rest = pairs_body.trim();
        while !rest.is_empty() {
            let pos = pairs_at + pairs_part.find(rest).unwrap_or(0);
            let inner_end = rest.find(')').ok_or_else(|| err(pos, "unclosed pair"))?;
            let inner = rest
                .get(1..inner_end)
                .filter(|_| rest.starts_with('('))
                .ok_or_else(|| err(pos, "expected '('"))?;
            let (a, b) = inner.split_once(',').ok_or_else(|| err(pos, "expected 'a,b'"))?;
            let a = a.trim().parse().map_err(|_| err(pos, "bad index"))?;
            let b = b.trim().parse().map_err(|_| err(pos, "bad index"))?;
            pairs.push((a, b));
            rest = rest[inner_end + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }

        let beads_body = beads_part
            .trim()
            .strip_prefix("beads=")
            .ok_or_else(|| err(beads_at, "expected 'beads='"))?;
        let mut beads = Vec::new();
        for item in beads_body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let pos = beads_at + beads_part.find(item).unwrap_or(0);
            let (l, c) = item.split_once(':').ok_or_else(|| err(pos, "expected line:count"))?;
            let l = l.trim().parse().map_err(|_| err(pos, "bad line"))?;
            let c = c.trim().parse().map_err(|_| err(pos, "bad count"))?;
            beads.push((l, c));
        }
        Self::new(n_north, n_south, order, &pairs, &beads)
    }
}

/// Serialized as the canonical text; the order travels separately.
impl Serialize for PlanarDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl DepthBound {
    pub fn allows(&self, depth: usize) -> bool {
        match self {
            DepthBound::Finite(d) => depth <= *d,
            DepthBound::Infinite => true,
        }
    }

    /// The bound as an integer no smaller than any depth occurring on `n` nodes.
    pub fn effective(&self, n: usize) -> usize {
        match self {
            DepthBound::Finite(d) => *d,
            DepthBound::Infinite => n,
        }
    }

    /// min(l, d).
    pub fn min_with(&self, l: usize) -> usize {
        match self {
            DepthBound::Finite(d) => l.min(*d),
            DepthBound::Infinite => l,
        }
    }
}

impl fmt::Display for DepthBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthBound::Finite(d) => write!(f, "{}", d),
            DepthBound::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for DepthBound {
    type Err = ContourError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(DepthBound::Infinite);
        }
        t.parse()
            .map(DepthBound::Finite)
            .map_err(|_| ContourError::parse(0, format!("expected an integer or 'inf', got '{}'", s)))
    }
}

impl Serialize for DepthBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DepthBound::Finite(d) => s.serialize_u64(*d as u64),
            DepthBound::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DepthBound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|x| DepthBound::Finite(x as usize))
                .ok_or_else(|| serde::de::Error::custom("depth must be a non-negative integer")),
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            _ => Err(serde::de::Error::custom("depth must be an integer or \"inf\"")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_depths() {
        let id = PlanarDiagram::identity(4, 1);
        for i in 0..4 {
            assert_eq!(id.line_depth(i).unwrap(), 4 - i);
        }
        assert_eq!(id.line_depth(5), Err(ContourError::UnknownLine(5)));
    }

    #[test]
    fn cup_and_nested_depths() {
        let cup = PlanarDiagram::new(2, 0, 1, &[(0, 1)], &[]).unwrap();
        assert_eq!(cup.line_depth(0).unwrap(), 1);
        let k = 3;
        let pairs: Vec<_> = (0..k).map(|i| (i, 2 * k - 1 - i)).collect();
        let nested = PlanarDiagram::new(2 * k, 0, 1, &pairs, &[]).unwrap();
        for i in 0..k {
            assert_eq!(nested.line_depth(i).unwrap(), i + 1);
        }
    }

    #[test]
    fn e_squared_makes_a_loop() {
        let e = PlanarDiagram::generator_e(2, 1, 3).unwrap();
        let (loops, r) = e.compose(&e).unwrap();
        assert_eq!(loops.counts, vec![1, 0, 0]);
        assert_eq!(r, e);
    }

    #[test]
    fn temperley_lieb_relation() {
        let e1 = PlanarDiagram::generator_e(3, 1, 1).unwrap();
        let e2 = PlanarDiagram::generator_e(3, 2, 1).unwrap();
        let (l1, x) = e2.compose(&e1).unwrap();
        let (l2, y) = e1.compose(&x).unwrap();
        assert_eq!(l1.total() + l2.total(), 0);
        assert_eq!(y, e1);
    }

    #[test]
    fn tbar_has_order_m() {
        for m in 1..5 {
            let t = PlanarDiagram::generator_tbar(2, 1, m).unwrap();
            let mut acc = PlanarDiagram::identity(2, m);
            for _ in 0..m {
                acc = acc.compose(&t).unwrap().1;
            }
            assert_eq!(acc, PlanarDiagram::identity(2, m));
        }
    }

    #[test]
    fn flip_of_beaded_cup() {
        let cup2 = PlanarDiagram::new(2, 0, 2, &[(0, 1)], &[(0, 1)]).unwrap();
        let cap2 = PlanarDiagram::new(0, 2, 2, &[(0, 1)], &[(0, 1)]).unwrap();
        assert_eq!(cup2.flip(), cap2);
        let cup3 = PlanarDiagram::new(2, 0, 3, &[(0, 1)], &[(0, 1)]).unwrap();
        assert_eq!(cup3.flip().bead(0), 2);
        assert_eq!(cup3.flip().flip(), cup3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(PlanarDiagram::new(4, 0, 1, &[(0, 2), (1, 3)], &[]).is_err());
        assert!(PlanarDiagram::new(3, 0, 1, &[], &[]).is_err());
        assert_eq!(
            PlanarDiagram::new(2, 0, 2, &[(0, 1)], &[(1, 1)]),
            Err(ContourError::UnknownLine(1))
        );
        let a = PlanarDiagram::identity(2, 2);
        let b = PlanarDiagram::identity(3, 2);
        assert_eq!(
            a.compose(&b),
            Err(ContourError::InterfaceMismatch { upper: 2, lower: 3 })
        );
        assert!(PlanarDiagram::generator_e(3, 3, 1).is_err());
        assert!(PlanarDiagram::generator_tbar(3, 0, 1).is_err());
        assert!(PlanarDiagram::generator_tbar_checked(3, 1, 2, DepthBound::Finite(2)).is_err());
        assert!(PlanarDiagram::generator_tbar_checked(3, 2, 2, DepthBound::Finite(2)).is_ok());
    }

    #[test]
    fn text_roundtrip() {
        let d = PlanarDiagram::new(3, 1, 3, &[(0, 3), (1, 2)], &[(1, 2)]).unwrap();
        let text = d.to_string();
        assert_eq!(text, "3/1; pairs=(0,3),(1,2); beads=1:2");
        assert_eq!(PlanarDiagram::parse(&text, 3).unwrap(), d);
        assert_eq!(PlanarDiagram::parse("0/0; pairs=; beads=", 2).unwrap().size(), 0);
        assert!(matches!(
            PlanarDiagram::parse("2/0; pairs=(0,1; beads=", 2),
            Err(ContourError::Parse { .. })
        ));
    }

    #[test]
    fn depth_bound_text() {
        assert_eq!("inf".parse::<DepthBound>().unwrap(), DepthBound::Infinite);
        assert_eq!("2".parse::<DepthBound>().unwrap(), DepthBound::Finite(2));
        assert!("x".parse::<DepthBound>().is_err());
        assert_eq!(serde_json::to_string(&DepthBound::Infinite).unwrap(), "\"inf\"");
    }
}
