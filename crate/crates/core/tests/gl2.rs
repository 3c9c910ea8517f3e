//! Invariants of realized subgroups of GL₂(ℤ/mℤ) and their orbit reports.

use isogate_core::gl2::{cyclic_subgroup_orbits, group_closure, point_orbits, psi, standard_group, Mat, StandardName};
use isogate_core::lift::brute_force_subgroups_raw;
use proptest::prelude::*;

fn invertible(m: u32) -> impl Strategy<Value = Mat> {
    (0..m as i64, 0..m as i64, 0..m as i64, 0..m as i64)
        .prop_map(move |(a, b, c, d)| Mat::new(m, a, b, c, d))
        .prop_filter("invertible", |g| g.is_invertible())
}

fn gens() -> impl Strategy<Value = (u32, Vec<Mat>)> {
    prop::sample::select(vec![3u32, 4, 5, 6, 7, 8, 9]).prop_flat_map(|m| (Just(m), prop::collection::vec(invertible(m), 1..3)))
}

fn order_m_vectors(m: u32) -> usize {
    (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|&(x, y)| gcd(gcd(x, y), m) == 1).count()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_lengths_partition_and_divide((m, gs) in gens()) {
        let g = group_closure(&gs, m).unwrap();
        let lines = cyclic_subgroup_orbits(&g);
        prop_assert_eq!(lines.lengths.iter().sum::<usize>() as u64, psi(m as u64));
        prop_assert!(lines.lengths.iter().all(|l| g.order() % l == 0));
        prop_assert!(lines.lengths.windows(2).all(|w| w[0] <= w[1]));
        let points = point_orbits(&g);
        prop_assert_eq!(points.lengths.iter().sum::<usize>(), order_m_vectors(m));
    }

    #[test]
    fn orbit_lengths_are_conjugation_invariant((m, gs) in gens(), x in any::<u64>()) {
        let g = group_closure(&gs, m).unwrap();
        let units: Vec<Mat> = standard_group(StandardName::Full, m).unwrap().elements().collect();
        let c = units[(x % units.len() as u64) as usize];
        let h = g.conjugate(&c);
        prop_assert_eq!(h.order(), g.order());
        prop_assert_eq!(cyclic_subgroup_orbits(&h).lengths, cyclic_subgroup_orbits(&g).lengths);
        prop_assert_eq!(point_orbits(&h).lengths, point_orbits(&g).lengths);
    }

    #[test]
    fn closure_is_closed((m, gs) in gens()) {
        let g = group_closure(&gs, m).unwrap();
        let els: Vec<Mat> = g.elements().collect();
        for a in els.iter().take(12) {
            prop_assert!(g.contains(&a.inv()));
            for b in els.iter().take(12) {
                prop_assert!(g.contains(&a.mul(b)));
            }
        }
        for s in &gs {
            prop_assert!(g.contains(s));
        }
    }

    #[test]
    fn index_two_subgroups_match_exhaustive_search((m, gs) in gens()) {
        let g = group_closure(&gs, m).unwrap();
        prop_assume!(g.order() <= 200);
        let fast = g.index_two_subgroups().unwrap();
        let mut slow: Vec<_> = brute_force_subgroups_raw(&g)
            .unwrap()
            .into_iter()
            .filter(|h| 2 * h.order() == g.order())
            .collect();
        slow.sort_by(|a, b| a.codes().cmp(b.codes()));
        prop_assert_eq!(fast.len(), slow.len());
        for (a, b) in fast.iter().zip(&slow) {
            prop_assert_eq!(a.codes(), b.codes());
        }
    }
}

#[test]
fn full_group_is_transitive_on_lines() {
    for p in [3, 5, 7, 11, 13] {
        let g = standard_group(StandardName::Full, p).unwrap();
        assert_eq!(cyclic_subgroup_orbits(&g).lengths, vec![p as usize + 1]);
    }
}
