//! The contour algebra on n strands: structure constants, idempotents,
//! the corner isomorphism and the sections of the ideal filtration.

mod cache;
mod context;
mod corner;
mod heredity;
mod idempotent;

use std::collections::BTreeMap;

pub use cache::{cache_path, load_or_build};
pub use context::{generators, AlgebraContext, AlgebraElement, Generator, DIMENSION_GUARD};
pub use corner::{corner_iso, pivot_parameter, CornerIso, CornerReport, PAIR_GUARD};
pub use heredity::{heredity_section_check, section_basis, HereditySection};
pub use idempotent::{cup_cap_diagram, epsilon, idempotent_e, PreIdempotent};

use crate::diagram::{enumerate_pairings, DepthBound, PlanarDiagram};

/// Number of normal-form diagrams on the layout, grouped by propagating
/// number; counts without building the decorated diagrams.
pub fn count_by_prop(n_north: usize, n_south: usize, order: u32, d: DepthBound) -> BTreeMap<usize, u128> {
    let mut out = BTreeMap::new();
    for partner in enumerate_pairings(n_north + n_south) {
        let pairs: Vec<(usize, usize)> = (0..partner.len())
            .filter(|&i| partner[i] > i)
            .map(|i| (i, partner[i]))
            .collect();
        let bare = PlanarDiagram::new(n_north, n_south, order, &pairs, &[]).expect("valid pairing");
        let depths = bare.depths();
        let free = if order > 1 {
            bare.lines().filter(|&l| d.allows(depths[l])).count()
        } else {
            0
        };
        *out.entry(bare.propagating_number()).or_insert(0) += (order as u128).pow(free as u32);
    }
    out
}

/// dim of the algebra on n strands.
pub fn dimension(n: usize, order: u32, d: DepthBound) -> u128 {
    count_by_prop(n, n, order, d).values().sum()
}

/// Size of the i-th section (propagating number n - 2i).
pub fn section_count(n: usize, order: u32, d: DepthBound, i: usize) -> u128 {
    if 2 * i > n {
        return 0;
    }
    count_by_prop(n, n, order, d)
        .get(&(n - 2 * i))
        .copied()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(3, 1, DepthBound::Finite(0)), 5);
        assert_eq!(dimension(2, 2, DepthBound::Finite(1)), 6);
        assert_eq!(dimension(0, 3, DepthBound::Infinite), 1);
        assert_eq!(dimension(0, 1, DepthBound::Finite(0)), 1);
    }

    #[test]
    fn section_examples() {
        assert_eq!(section_count(2, 2, DepthBound::Infinite, 1), 4);
        for n in 0..5 {
            for m in 1..4 {
                for d in [DepthBound::Finite(0), DepthBound::Finite(1), DepthBound::Infinite] {
                    let top = (m as u128).pow(d.min_with(n) as u32);
                    assert_eq!(section_count(n, m, d, 0), top);
                }
            }
        }
    }
}
