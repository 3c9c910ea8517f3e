//! Round trips through the j-families: a value j(h) matched back against its
//! own family must recover h as a rational root.

use isogate_core::exact::rational::rat;
use isogate_core::exact::Rational;
use isogate_core::jmatch::{builtin_family, match_constant, match_families, Verdict, FAMILY_NAMES};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..30).prop_map(|(a, b)| rat(a, b))
}

fn round_trip(name: &str, h: &Rational) -> Result<(), TestCaseError> {
    let fam = builtin_family(name).unwrap();
    let Some(j) = fam.eval(h) else { return Ok(()) };
    let m = match_constant(&fam, &j);
    prop_assert!(m.rational_roots.contains(h), "{}: {} not among {:?}", name, h, m.rational_roots);
    let rational = matches!(m.verdict, Verdict::RationalRoot { .. });
    prop_assert!(rational);
    for r in &m.rational_roots {
        prop_assert_eq!(fam.eval(r), Some(j.clone()));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn j13_round_trip(h in small_rational()) { round_trip("j13", &h)?; }
    #[test]
    fn j7_round_trip(h in small_rational()) { round_trip("j7", &h)?; }
    #[test]
    fn j5_round_trip(h in small_rational()) { round_trip("j5", &h)?; }
    #[test]
    fn j3cube_round_trip(h in small_rational()) { round_trip("j3cube", &h)?; }
    #[test]
    fn j2disc_round_trip(h in small_rational()) { round_trip("j2disc", &h)?; }
    #[test]
    fn j2iso_round_trip(h in small_rational()) { round_trip("j2iso", &h)?; }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jns7_round_trip(h in small_rational()) { round_trip("jNs7", &h)?; }

    /// (t, s) with a(t) = b(s) lies on the matching curve of a and b.
    #[test]
    fn matching_curve_contains_common_values(t in small_rational(), ia in 0usize..6, ib in 0usize..6) {
        let a = builtin_family(FAMILY_NAMES[ia]).unwrap();
        let b = builtin_family(FAMILY_NAMES[ib]).unwrap();
        let Some(j) = a.eval(&t) else { return Ok(()) };
        let curve = match_families(&a, &b);
        for s in match_constant(&b, &j).rational_roots {
            prop_assert_eq!(curve.eval(&t, &s), Rational::from_integer(0.into()));
        }
    }
}

#[test]
fn unknown_family_is_rejected() {
    assert!(builtin_family("j4").is_err());
}
