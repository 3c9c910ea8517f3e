//! Plane curves `F(t, s) = 0` arising from matching two j-families, and
//! exact point checks on them.

use std::collections::BTreeMap;

use serde::Serialize;

use super::JFamily;
use crate::exact::{PolyQ, Rational};
use num_traits::{One, Zero};

/// `Σ_j c_j(t) s^j`, keyed by the s-degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    pub terms: BTreeMap<usize, PolyQ>,
}

impl BivariatePoly {
    fn add_term(&mut self, j: usize, c: PolyQ) {
        let e = self.terms.entry(j).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&j);
        }
    }

    /// `a(t) · b(s)`.
    pub fn product(a: &PolyQ, b: &PolyQ) -> Self {
        let mut out = BivariatePoly::default();
        for (j, c) in b.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.add_term(j, a.scale(c));
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (j, c) in &o.terms {
            out.add_term(*j, -c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(j, c)| j + c.deg()).max().unwrap_or(0)
    }

    pub fn eval(&self, t: &Rational, s: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut sp = Rational::one();
        let mut last = 0;
        for (j, c) in &self.terms {
            for _ in last..*j {
                sp *= s;
            }
            last = *j;
            acc += c.eval(t) * &sp;
        }
        acc
    }

    /// Value of the homogenization `z^D F(t/z, s/z)` at `(t : s : z)`.
    pub fn eval_projective(&self, pt: &ProjectiveTriple) -> Rational {
        let d = self.degree();
        let mut acc = Rational::zero();
        for (j, c) in &self.terms {
            for (i, a) in c.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let e = (d - i - j) as i32;
                acc += a * pt.t.pow(i as i32) * pt.s.pow(*j as i32) * pow0(&pt.z, e);
            }
        }
        acc
    }

    /// The family in `s` obtained by fixing `t`.
    pub fn in_s(&self, t: &Rational) -> PolyQ {
        let n = self.terms.keys().max().map_or(0, |m| m + 1);
        let mut cs = vec![Rational::zero(); n];
        for (j, c) in &self.terms {
            cs[*j] = c.eval(t);
        }
        PolyQ::new(cs)
    }
}

fn pow0(x: &Rational, e: i32) -> Rational {
    if e == 0 {
        Rational::one()
    } else {
        x.pow(e)
    }
}

/// Numerator of `A(t) − B(s)`: `f_A(t) g_B(s) − f_B(s) g_A(t)`.
pub fn match_families(a: &JFamily, b: &JFamily) -> BivariatePoly {
    let left = BivariatePoly::product(&a.numerator, &b.denominator);
    let right = BivariatePoly::product(&a.denominator, &b.numerator);
    left.sub(&right)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectiveTriple {
    #[serde(serialize_with = "ser_q")]
    pub t: Rational,
    #[serde(serialize_with = "ser_q")]
    pub s: Rational,
    #[serde(serialize_with = "ser_q")]
    pub z: Rational,
}

fn ser_q<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl ProjectiveTriple {
    pub fn new(t: i64, s: i64, z: i64) -> Self {
        let r = |x: i64| Rational::from_integer(x.into());
        ProjectiveTriple { t: r(t), s: r(s), z: r(z) }
    }
}

impl std::fmt::Display for ProjectiveTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} : {} : {})", self.t, self.s, self.z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointReport {
    pub point: String,
    pub on_curve: bool,
    /// j-value through the second family, for affine points off its poles.
    pub j: Option<String>,
}

pub fn verify_match_points(curve: &BivariatePoly, points: &[ProjectiveTriple], fam_b: &JFamily) -> Vec<PointReport> {
    points
        .iter()
        .map(|pt| {
            let on_curve = curve.eval_projective(pt).is_zero();
            let j = if pt.z.is_zero() { None } else { fam_b.eval(&(&pt.s / &pt.z)).map(|v| v.to_string()) };
            PointReport { point: pt.to_string(), on_curve, j }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jmatch::builtin_family;

    #[test]
    fn deg14_points() {
        let a = builtin_family("jNs7").unwrap();
        let b = builtin_family("j2iso").unwrap();
        let f = match_families(&a, &b);
        assert_eq!(f.degree(), 29);
        let pts = [
            ProjectiveTriple::new(2, -256, 1),
            ProjectiveTriple::new(-1, -16, 1),
            ProjectiveTriple::new(0, -16, 1),
            ProjectiveTriple::new(0, 1, 0),
            ProjectiveTriple::new(1, 0, 0),
        ];
        let rep = verify_match_points(&f, &pts, &b);
        assert!(rep.iter().all(|r| r.on_curve));
        let js: Vec<Option<&str>> = rep.iter().map(|r| r.j.as_deref()).collect();
        assert_eq!(js, vec![Some("54000"), Some("0"), Some("0"), None, None]);
        assert!(!f.eval_projective(&ProjectiveTriple::new(1, 1, 1)).is_zero());
    }

    #[test]
    fn symmetric_match_contains_diagonal() {
        let c = builtin_family("j3cube").unwrap();
        let f = match_families(&c, &c);
        for x in -5..5 {
            let x = Rational::from_integer(x.into());
            assert!(f.eval(&x, &x).is_zero());
        }
        assert_eq!(f.degree(), 3);
    }
}
