//! Genus-2 zeta data against Mumford enumeration on random curves, and the
//! X₀(91) model's points and involution.

use isogate_core::exact::PolyQ;
use isogate_core::x091::{
    atkin_lehner, count_points, jacobian_order, jacobian_order_by_enumeration, model, verify_model_point, HypCurve, QuadricModel,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn zeta_matches_enumeration(cs in prop::collection::vec(-6i64..6, 6), p in prop::sample::select(vec![3u64, 5, 7])) {
        let mut coeffs = cs.clone();
        coeffs.push(1);
        let Ok(c) = HypCurve::new(PolyQ::from_ints(&coeffs)) else { return Ok(()) };
        prop_assume!(c.has_good_reduction(p));
        let z = jacobian_order(&c, p).unwrap();
        prop_assert_eq!(z.jacobian_order, jacobian_order_by_enumeration(&c, p).unwrap());
        // Weil bounds on the L-polynomial coefficients.
        prop_assert!(z.c1 * z.c1 <= 16 * p as i64);
        prop_assert!(z.c2.unsigned_abs() <= 6 * p);
        prop_assert_eq!(z.n1, count_points(&c, p, 1).unwrap());
    }
}

#[test]
fn quotient_counts_at_small_primes() {
    let c = HypCurve::x0_91_plus();
    assert!(!c.has_good_reduction(7) && !c.has_good_reduction(13));
    for p in [3, 5, 11] {
        let z = jacobian_order(&c, p).unwrap();
        assert_eq!(z.jacobian_order, jacobian_order_by_enumeration(&c, p).unwrap());
    }
}

#[test]
fn model_points_and_involution() {
    let m = QuadricModel::x0_91();
    let p = model::cm_point();
    for q in [p.clone(), p.conj()] {
        assert!(verify_model_point(&m, &q).on_curve);
        assert_eq!(atkin_lehner(&q), q);
    }
    for c in model::cusps() {
        let w = atkin_lehner(&c);
        assert_ne!(w, c);
        assert!(verify_model_point(&m, &w).on_curve);
    }
}
