//! Lift enumeration against exhaustive subgroup search and structural
//! invariants of the classification.

use isogate_core::gl2::{cyclic_subgroup_orbits, psi, standard_group, StandardName};
use isogate_core::lift::{analyze_lift, brute_force_subgroups, classify_lift, lift_subgroups, preimage, Outcome};

#[test]
fn p3_lifts_match_exhaustive_search() {
    let g = standard_group(StandardName::SplitCartanNormalizer, 3).unwrap();
    let full = preimage(&g, 3).unwrap();
    assert_eq!(full.order(), 648);
    let mut oracle: Vec<usize> =
        brute_force_subgroups(&full).unwrap().into_iter().filter(|h| h.reduce_mod(3).unwrap() == g).map(|h| h.order()).collect();
    oracle.sort_unstable();
    let mut engine: Vec<usize> = lift_subgroups(&g, 3).unwrap().classes.iter().map(|c| c.order).collect();
    engine.sort_unstable();
    assert_eq!(engine, oracle);
    assert_eq!(engine.len(), 12);
}

#[test]
fn p5_lifts_reduce_onto_target_and_classify() {
    let g = standard_group(StandardName::SplitCartanNormalizer, 5).unwrap();
    let e = lift_subgroups(&g, 5).unwrap();
    for c in &e.classes {
        let h = &c.representative;
        assert_eq!(h.modulus(), 25);
        assert_eq!(h.reduce_mod(5).unwrap(), g);
        // |H| = |G| · |H ∩ ker|, and the kernel is elementary abelian of order 5^k.
        assert_eq!(c.order, g.order() * 5usize.pow(c.kernel_dim as u32));
        let orbits = cyclic_subgroup_orbits(h);
        assert_eq!(orbits.lengths.iter().sum::<usize>() as u64, psi(25));
        assert!(orbits.lengths.iter().all(|l| c.order % l == 0));
        let a = analyze_lift(c, 5).unwrap();
        assert_eq!(a.outcome, classify_lift(c, 5).unwrap());
        match a.outcome {
            Outcome::ScalarFail { scalars } => assert!(scalars < 5),
            Outcome::ConjugateIntoSplitNormalizer { .. } => assert!(a.scalar_count >= 5),
            Outcome::OrbitBound { .. } => assert!(a.conjugate_into_split_normalizer.is_none()),
            Outcome::Unclassified => panic!("unclassified lift"),
        }
    }
}

#[test]
fn unsupported_primes_rejected() {
    let g = standard_group(StandardName::SplitCartanNormalizer, 11).unwrap();
    assert!(lift_subgroups(&g, 11).is_err());
}
