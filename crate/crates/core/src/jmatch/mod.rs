//! j-invariant families `j = f(h)/g(h)` and the eliminations that match them
//! against fixed j-values or against each other.

pub mod bivariate;
pub mod constants;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

pub use bivariate::{match_families, verify_match_points, BivariatePoly, PointReport, ProjectiveTriple};

use crate::error::{Error, Result};
use crate::exact::{low_degree_factors, LowDegreeFactor, PolyQ, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFamily {
    pub name: &'static str,
    pub numerator: PolyQ,
    pub denominator: PolyQ,
    /// Parameter letter, for display only.
    pub param: &'static str,
}

pub const FAMILY_NAMES: [&str; 7] = ["j13", "j7", "j5", "j3cube", "j2disc", "j2iso", "jNs7"];

fn lin(c0: i64) -> PolyQ {
    PolyQ::from_ints(&[c0, 1])
}

fn p(cs: &[i64]) -> PolyQ {
    PolyQ::from_ints(cs)
}

/// A product of `(factor, exponent)` pairs.
pub type Factored = Vec<(PolyQ, u32)>;

/// Numerator and denominator as products of `(factor, exponent)`.
pub fn factored_form(name: &str) -> Result<(Factored, Factored)> {
    let h = PolyQ::x();
    Ok(match name {
        "j13" => (vec![(p(&[13, 5, 1]), 1), (p(&[1, 19, 20, 7, 1]), 3)], vec![(h, 1)]),
        "j7" => (vec![(p(&[49, 13, 1]), 1), (p(&[1, 5, 1]), 3)], vec![(h, 1)]),
        "j5" => (vec![(p(&[5, 10, 1]), 3)], vec![(h, 1)]),
        "j3cube" => (vec![(h, 3)], vec![]),
        "j2disc" => (vec![(p(&[1728, 0, 1]), 1)], vec![]),
        "j2iso" => (vec![(lin(16), 3)], vec![(h, 1)]),
        "jNs7" => {
            (vec![(h, 1), (lin(1), 3), (p(&[1, -5, 1]), 3), (p(&[8, -5, 1]), 3), (p(&[7, -7, 8, -5, 1]), 3)], vec![(p(&[1, 3, -4, 1]), 7)])
        }
        _ => return Err(Error::invalid(format!("unknown family {name:?}"))),
    })
}

fn expand(fs: &[(PolyQ, u32)]) -> PolyQ {
    fs.iter().fold(PolyQ::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

pub fn builtin_family(name: &str) -> Result<JFamily> {
    let (num, den) = factored_form(name)?;
    let name = FAMILY_NAMES.iter().copied().find(|n| *n == name).unwrap();
    let param = match name {
        "j2iso" => "s",
        "jNs7" => "t",
        _ => "h",
    };
    Ok(JFamily { name, numerator: expand(&num), denominator: expand(&den), param })
}

impl JFamily {
    /// `f(h)/g(h)`, or `None` at a pole.
    pub fn eval(&self, h: &Rational) -> Option<Rational> {
        let g = self.denominator.eval(h);
        (!g.is_zero()).then(|| self.numerator.eval(h) / g)
    }

    pub fn degree(&self) -> usize {
        self.numerator.deg().max(self.denominator.deg())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    RationalRoot { values: Vec<String> },
    QuadraticRoot { fields: Vec<String> },
    NoDegreeLe2Root,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::RationalRoot { .. } => "RationalRoot",
            Verdict::QuadraticRoot { .. } => "QuadraticRoot",
            Verdict::NoDegreeLe2Root => "NoDegreeLE2Root",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatchOutcome {
    pub family: &'static str,
    pub constant: Rational,
    pub elimination: PolyQ,
    /// Degree-≤2 factors, excluding any that vanish where the denominator does.
    pub low_degree: Vec<LowDegreeFactor>,
    pub rational_roots: Vec<Rational>,
    pub quadratic_fields: Vec<BigInt>,
    pub verdict: Verdict,
}

impl MatchOutcome {
    pub fn has_rational_root(&self) -> bool {
        !self.rational_roots.is_empty()
    }
}

/// Elimination polynomial `f(h) − c·g(h)` in primitive integer form, with the
/// degree-≤2 factor verdict.
pub fn match_constant(fam: &JFamily, c: &Rational) -> MatchOutcome {
    let elim = (&fam.numerator - &fam.denominator.scale(c)).primitive();
    let low: Vec<LowDegreeFactor> =
        low_degree_factors(&elim, 2).into_iter().filter(|l| fam.denominator.gcd(&l.factor.poly).deg() == 0).collect();
    let rational_roots: Vec<Rational> = low.iter().filter_map(|l| l.root.clone()).collect();
    let quadratic_fields: Vec<BigInt> = low.iter().filter_map(|l| l.field_d.clone()).collect();
    let verdict = if !rational_roots.is_empty() {
        Verdict::RationalRoot { values: rational_roots.iter().map(ToString::to_string).collect() }
    } else if !quadratic_fields.is_empty() {
        Verdict::QuadraticRoot { fields: quadratic_fields.iter().map(ToString::to_string).collect() }
    } else {
        Verdict::NoDegreeLe2Root
    };
    MatchOutcome { family: fam.name, constant: c.clone(), elimination: elim, low_degree: low, rational_roots, quadratic_fields, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::exact::{factor_over_q, PolyQ};

    #[test]
    fn family_values() {
        assert_eq!(builtin_family("j5").unwrap().eval(&int(1)), Some(int(4096)));
        assert_eq!(builtin_family("j2iso").unwrap().eval(&int(16)), Some(int(2048)));
        assert_eq!(builtin_family("j3cube").unwrap().eval(&int(0)), Some(int(0)));
        assert_eq!(builtin_family("j5").unwrap().eval(&int(0)), None);
        assert!(builtin_family("j11").is_err());
    }

    #[test]
    fn families_are_coprime_and_have_expected_degrees() {
        let degs = [("j13", 14), ("j7", 8), ("j5", 6), ("j3cube", 3), ("j2disc", 2), ("j2iso", 3), ("jNs7", 28)];
        for (name, d) in degs {
            let f = builtin_family(name).unwrap();
            assert_eq!(f.numerator.gcd(&f.denominator).deg(), 0, "{name}");
            assert_eq!(f.degree(), d, "{name}");
            // The elimination against an arbitrary constant keeps full degree.
            let m = match_constant(&f, &rat(-3, 7));
            assert_eq!(m.elimination.deg(), d, "{name}");
        }
        assert_eq!(builtin_family("jNs7").unwrap().denominator.deg(), 21);
    }

    #[test]
    fn spec_examples() {
        let m = match_constant(&builtin_family("j3cube").unwrap(), &int(-9317));
        assert_eq!(m.verdict, Verdict::NoDegreeLe2Root);
        let m = match_constant(&builtin_family("j5").unwrap(), &int(-24729001));
        assert_eq!(m.verdict, Verdict::NoDegreeLe2Root);
        // −121 − 1728 = −1849 = −43²: the quadratic h² + 1849 splits over ℚ(i).
        let m = match_constant(&builtin_family("j2disc").unwrap(), &int(-121));
        assert_eq!(m.elimination, PolyQ::from_ints(&[1849, 0, 1]));
        assert!(!m.has_rational_root());
        assert_eq!(m.quadratic_fields, vec![BigInt::from(-1)]);
    }

    #[test]
    fn elimination_factor_degrees_are_certified() {
        let m = match_constant(&builtin_family("j5").unwrap(), &int(-24729001));
        let fz = factor_over_q(&m.elimination);
        assert!(fz.degrees().iter().all(|&d| d > 2));
    }
}
