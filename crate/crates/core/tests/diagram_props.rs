mod common;

use proptest::prelude::*;

use contour::diagram::{catalan, enumerate_basis, DepthBound, PlanarDiagram};

const DEPTHS: [DepthBound; 4] = [DepthBound::Finite(0), DepthBound::Finite(1), DepthBound::Finite(2), DepthBound::Infinite];

#[test]
fn composition_stays_within_depth() {
    for n in 0..=4 {
        for m in 1..=3u32 {
            if n == 4 && m == 3 {
                continue;
            }
            for d in DEPTHS {
                let basis = enumerate_basis(n, n, m, d);
                for a in &basis {
                    for b in &basis {
                        let (_, r) = a.compose(b).unwrap();
                        assert!(r.is_depth_legal(d), "{} * {} = {} at d = {}", a, b, r, d);
                    }
                }
            }
        }
    }
}

#[test]
fn propagating_depth_counts_from_the_east() {
    for n in 0..=5 {
        for x in enumerate_basis(n, n, 1, DepthBound::Infinite) {
            let mut props = x.propagating_lines();
            props.sort_by(|a, b| b.cmp(a));
            for (j, line) in props.into_iter().enumerate() {
                assert_eq!(x.line_depth(line).unwrap(), j + 1, "{}", x);
            }
        }
    }
}

#[test]
fn temperley_lieb_counts_are_catalan() {
    for n in 0..=8 {
        let count = enumerate_basis(n, n, 1, DepthBound::Finite(0)).len() as u128;
        assert_eq!(count, catalan(n));
        assert_eq!(count, common::catalan(n as u128));
    }
}

fn triple() -> impl Strategy<Value = (u32, Vec<PlanarDiagram>)> {
    (1usize..=4, 1u32..=3, 0usize..4).prop_flat_map(|(n, m, di)| {
        let basis = enumerate_basis(n, n, m, DEPTHS[di]);
        let len = basis.len();
        (Just(m), prop::collection::vec(0..len, 3).prop_map(move |ix| ix.into_iter().map(|i| basis[i].clone()).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn composition_is_associative((_, xs) in triple()) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        let (l1, ab) = a.compose(b).unwrap();
        let (l2, left) = ab.compose(c).unwrap();
        let (l3, bc) = b.compose(c).unwrap();
        let (l4, right) = a.compose(&bc).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(l1.combine(&l2), l3.combine(&l4));
    }

    #[test]
    fn flip_reverses_composition((m, xs) in triple()) {
        let (a, b) = (&xs[0], &xs[1]);
        let (loops, ab) = a.compose(b).unwrap();
        let (flipped_loops, ba) = b.flip().compose(&a.flip()).unwrap();
        prop_assert_eq!(ab.flip(), ba);
        prop_assert_eq!(a.flip().flip(), a.clone());
        for k in 0..m as usize {
            prop_assert_eq!(flipped_loops.counts[k], loops.counts[(m as usize - k) % m as usize]);
        }
    }
}
