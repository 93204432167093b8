//! Enumeration of non-crossing pairings and normal-form bases.

use super::planar::PlanarDiagram;
use super::DepthBound;

/// All non-crossing perfect matchings of `0..size`, as partner vectors in
/// lexicographic order.
pub fn enumerate_pairings(size: usize) -> Vec<Vec<usize>> {
    if size % 2 != 0 {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = interval_matchings(0, size)
        .into_iter()
        .map(|pairs| {
            let mut partner = vec![0; size];
            for (a, b) in pairs {
                partner[a] = b;
                partner[b] = a;
            }
            partner
        })
        .collect();
    out.sort();
    out
}

/// Non-crossing matchings of the interval `lo..hi` as pair lists.
fn interval_matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for b in (lo + 1..hi).step_by(2) {
        let inner = interval_matchings(lo + 1, b);
        let outer = interval_matchings(b + 1, hi);
        for i in &inner {
            for o in &outer {
                let mut pairs = Vec::with_capacity(1 + i.len() + o.len());
                pairs.push((lo, b));
                pairs.extend_from_slice(i);
                pairs.extend_from_slice(o);
                out.push(pairs);
            }
        }
    }
    out
}

/// Normal-form basis on the given layout: every non-crossing pairing with
/// every bead assignment placing beads only on lines of depth at most `d`.
/// Sorted by pairing, then bead vector.
pub fn enumerate_basis(n_north: usize, n_south: usize, order: u32, d: DepthBound) -> Vec<PlanarDiagram> {
    let mut out = Vec::new();
    for partner in enumerate_pairings(n_north + n_south) {
        let pairs: Vec<(usize, usize)> = (0..partner.len())
            .filter(|&i| partner[i] > i)
            .map(|i| (i, partner[i]))
            .collect();
        let bare = PlanarDiagram::new(n_north, n_south, order, &pairs, &[]).expect("valid pairing");
        extend_with_beads(&bare, order, d, &mut out);
    }
    out.sort();
    out
}

/// Appends every legal bead decoration of `bare`.
fn extend_with_beads(bare: &PlanarDiagram, order: u32, d: DepthBound, out: &mut Vec<PlanarDiagram>) {
    let depths = bare.depths();
    let free: Vec<usize> = if order > 1 {
        bare.lines().filter(|&l| d.allows(depths[l])).collect()
    } else {
        Vec::new()
    };
    let mut counts = vec![0u32; free.len()];
    loop {
        let mut diag = bare.clone();
        for (&l, &c) in free.iter().zip(&counts) {
            diag = diag.with_bead(l, c);
        }
        out.push(diag);
        let mut k = free.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            counts[k] += 1;
            if counts[k] < order {
                break;
            }
            counts[k] = 0;
        }
    }
}

/// Catalan number C_k.
pub fn catalan(k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
