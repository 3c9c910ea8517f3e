//! The canonical model of X₀(91) in ℙ⁶ as an intersection of ten quadrics,
//! its Atkin–Lehner involution and the known rational and CM points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::rational::{int, rat};
use crate::exact::{QuadExtElem, Rational};
use crate::{Error, Result};

/// Number of projective coordinates x₀ … x₆.
pub const VARIABLES: usize = 7;

/// The ten quadrics, one per line, in the textual form produced by
/// [`Quadric`]'s `Display`.
pub const MODEL_TEXT: &str = "\
x0^2 - 12*x1*x2 + 4*x1*x4 - 14*x2^2 + 12*x2*x3 + 24*x2*x4 - 14*x3^2 + 16*x3*x4 - 23*x4^2 - x5^2 - 4*x6^2
x0*x1 - 6*x1*x2 + 6*x1*x4 - 3*x2^2 + 2*x2*x3 + 7*x2*x4 - 5*x3^2 + 8*x3*x4 - 7*x4^2 - x5*x6 - x6^2
x0*x2 - 2*x1*x2 + x1*x4 - 3*x2^2 + 6*x2*x3 + 4*x2*x4 - 5*x3^2 + 4*x3*x4 - 3*x4^2 - x6^2
x0*x3 - x1*x2 + x1*x4 + 2*x2*x3 - x2*x4 - x3^2 + x3*x4 + x4^2
x0*x4 - x2^2 + 2*x2*x3 - x3^2 + 2*x4^2
x0*x6 - x1*x5 + x2*x5 + x4*x6
x1^2 - 2*x1*x2 - 3*x2^2 + 4*x2*x3 + 4*x2*x4 - 4*x3^2 + 4*x3*x4 - 4*x4^2 - x6^2
x1*x3 - x1*x4 - x2^2 + x2*x3 + x2*x4 - x3*x4
x1*x6 - x2*x5 + x3*x5
x2*x6 - x3*x5 + x4*x5 - x4*x6
";

/// Coefficient tables of the ten quadrics: `(i, j, c)` stands for `c·xᵢxⱼ`, `i ≤ j`.
const QUADRICS: [&[(usize, usize, i64)]; 10] = [
    &[(0, 0, 1), (1, 2, -12), (1, 4, 4), (2, 2, -14), (2, 3, 12), (2, 4, 24), (3, 3, -14), (3, 4, 16), (4, 4, -23), (5, 5, -1), (6, 6, -4)],
    &[(0, 1, 1), (1, 2, -6), (1, 4, 6), (2, 2, -3), (2, 3, 2), (2, 4, 7), (3, 3, -5), (3, 4, 8), (4, 4, -7), (5, 6, -1), (6, 6, -1)],
    &[(0, 2, 1), (1, 2, -2), (1, 4, 1), (2, 2, -3), (2, 3, 6), (2, 4, 4), (3, 3, -5), (3, 4, 4), (4, 4, -3), (6, 6, -1)],
    &[(0, 3, 1), (1, 2, -1), (1, 4, 1), (2, 3, 2), (2, 4, -1), (3, 3, -1), (3, 4, 1), (4, 4, 1)],
    &[(0, 4, 1), (2, 2, -1), (2, 3, 2), (3, 3, -1), (4, 4, 2)],
    &[(0, 6, 1), (1, 5, -1), (2, 5, 1), (4, 6, 1)],
    &[(1, 1, 1), (1, 2, -2), (2, 2, -3), (2, 3, 4), (2, 4, 4), (3, 3, -4), (3, 4, 4), (4, 4, -4), (6, 6, -1)],
    &[(1, 3, 1), (1, 4, -1), (2, 2, -1), (2, 3, 1), (2, 4, 1), (3, 4, -1)],
    &[(1, 6, 1), (2, 5, -1), (3, 5, 1)],
    &[(2, 6, 1), (3, 5, -1), (4, 5, 1), (4, 6, -1)],
];

/// A quadratic form in x₀ … x₆ with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    /// `(i, j) ↦ c` for the monomial xᵢxⱼ, `i ≤ j`; zero entries are absent.
    pub terms: BTreeMap<(usize, usize), Rational>,
}

impl Quadric {
    fn from_table(table: &[(usize, usize, i64)]) -> Self {
        Quadric { terms: table.iter().map(|&(i, j, c)| ((i, j), int(c))).collect() }
    }

    /// Parses the `Display` form, e.g. `x0^2 - 12*x1*x2 + x5*x6`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::invalid(format!("quadric {text:?}: {msg}"));
        let mut terms = BTreeMap::new();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            pieces.push(cur);
        }
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let mut coeff = int(sign);
            let mut vars = Vec::new();
            for factor in body.split('*') {
                if let Some(v) = factor.strip_prefix('x') {
                    let (idx, power) = match v.split_once('^') {
                        Some((i, e)) => (i, e.parse::<usize>().map_err(|_| bad(format!("bad exponent in {factor}")))?),
                        None => (v, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad(format!("bad variable {factor}")))?;
                    if idx >= VARIABLES {
                        return Err(bad(format!("variable x{idx} out of range")));
                    }
                    vars.extend(std::iter::repeat_n(idx, power));
                } else {
                    let c: i64 = factor.parse().map_err(|_| bad(format!("bad coefficient {factor}")))?;
                    coeff *= int(c);
                }
            }
            if vars.len() != 2 {
                return Err(bad(format!("term {piece} is not quadratic")));
            }
            vars.sort_unstable();
            *terms.entry((vars[0], vars[1])).or_insert_with(Rational::zero) += coeff;
        }
        terms.retain(|_, c: &mut Rational| !c.is_zero());
        Ok(Quadric { terms })
    }

    /// Value at a point given by coordinates in any ring containing ℚ.
    pub fn eval<T>(&self, x: &[T], embed: impl Fn(&Rational) -> T) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
    {
        let mut acc = embed(&Rational::zero());
        for (&(i, j), c) in &self.terms {
            acc = acc + embed(c) * x[i].clone() * x[j].clone();
        }
        acc
    }

    /// Sign ε with q(w(x)) = ε·q(x) for the involution negating x₅, x₆,
    /// read off the monomials.
    pub fn involution_sign(&self) -> Option<i8> {
        let mut signs = self.terms.keys().map(|&(i, j)| {
            let odd = (i >= 5) as u8 + (j >= 5) as u8;
            if odd % 2 == 0 {
                1i8
            } else {
                -1
            }
        });
        let first = signs.next()?;
        signs.all(|s| s == first).then_some(first)
    }
}

impl fmt::Display for Quadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if i == j {
                write!(f, "x{i}^2")?;
            } else {
                write!(f, "x{i}*x{j}")?;
            }
        }
        Ok(())
    }
}

/// The ten-quadric model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricModel {
    pub quadrics: Vec<Quadric>,
}

impl QuadricModel {
    /// The built-in model of X₀(91).
    pub fn x0_91() -> Self {
        QuadricModel { quadrics: QUADRICS.iter().map(|t| Quadric::from_table(t)).collect() }
    }

    /// Parses one quadric per non-empty line.
    pub fn parse(text: &str) -> Result<Self> {
        let quadrics = text.lines().filter(|l| !l.trim().is_empty()).map(Quadric::parse).collect::<Result<_>>()?;
        Ok(QuadricModel { quadrics })
    }
}

/// A point of ℙ⁶ over ℚ or over a single quadratic field ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjPoint {
    Rational(Vec<Rational>),
    Quadratic { d: i64, coords: Vec<QuadExtElem> },
}

impl ProjPoint {
    pub fn rational(coords: Vec<Rational>) -> Result<Self> {
        check_shape(coords.len(), coords.iter().all(|c| c.is_zero()))?;
        Ok(ProjPoint::Rational(coords).canonical())
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::rational(coords.iter().map(|&c| int(c)).collect())
    }

    /// Coordinates in ℚ(√d); all must share the same `d`.
    pub fn quadratic(coords: Vec<QuadExtElem>) -> Result<Self> {
        check_shape(coords.len(), coords.iter().all(|c| c.is_zero()))?;
        let d = coords[0].d();
        if let Some(c) = coords.iter().find(|c| c.d() != d) {
            return Err(Error::invalid(format!("mixed quadratic fields: √{d} and √{}", c.d())));
        }
        Ok(ProjPoint::Quadratic { d, coords }.canonical())
    }

    /// Rescales so that the last nonzero coordinate is 1.
    pub fn canonical(self) -> Self {
        match self {
            ProjPoint::Rational(cs) => {
                let last = cs.iter().rev().find(|c| !c.is_zero()).cloned().expect("nonzero point");
                ProjPoint::Rational(cs.iter().map(|c| c / &last).collect())
            }
            ProjPoint::Quadratic { d, coords } => {
                let last = coords.iter().rev().find(|c| !c.is_zero()).cloned().expect("nonzero point");
                let inv = last.inv().expect("nonzero");
                ProjPoint::Quadratic { d, coords: coords.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    /// Galois conjugate √d ↦ −√d; rational points are fixed.
    pub fn conj(&self) -> Self {
        match self {
            ProjPoint::Rational(_) => self.clone(),
            ProjPoint::Quadratic { d, coords } => ProjPoint::Quadratic { d: *d, coords: coords.iter().map(|c| c.conj()).collect() },
        }
    }
}

fn check_shape(len: usize, all_zero: bool) -> Result<()> {
    if len != VARIABLES {
        return Err(Error::invalid(format!("expected {VARIABLES} coordinates, got {len}")));
    }
    if all_zero {
        return Err(Error::invalid("the zero vector is not a projective point"));
    }
    Ok(())
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self {
            ProjPoint::Rational(cs) => cs.iter().map(|c| c.to_string()).collect(),
            ProjPoint::Quadratic { coords, .. } => coords.iter().map(|c| c.to_string()).collect(),
        };
        write!(f, "({})", parts.join(" : "))
    }
}

/// w₉₁: negates x₅ and x₆.
pub fn atkin_lehner(p: &ProjPoint) -> ProjPoint {
    match p {
        ProjPoint::Rational(cs) => {
            ProjPoint::Rational(cs.iter().enumerate().map(|(i, c)| if i >= 5 { -c } else { c.clone() }).collect()).canonical()
        }
        ProjPoint::Quadratic { d, coords } => {
            ProjPoint::Quadratic { d: *d, coords: coords.iter().enumerate().map(|(i, c)| if i >= 5 { -c } else { c.clone() }).collect() }
                .canonical()
        }
    }
}

/// Values of every quadric at a point.
#[derive(Clone, Debug, Serialize)]
pub struct ModelReport {
    pub point: String,
    pub residues: Vec<String>,
    pub on_curve: bool,
}

pub fn verify_model_point(model: &QuadricModel, p: &ProjPoint) -> ModelReport {
    let residues: Vec<(String, bool)> = model
        .quadrics
        .iter()
        .map(|q| match p {
            ProjPoint::Rational(cs) => {
                let v = q.eval(cs, |c| c.clone());
                (v.to_string(), v.is_zero())
            }
            ProjPoint::Quadratic { d, coords } => {
                let v = q.eval(coords, |c| QuadExtElem::from_rational(c.clone(), *d));
                (v.to_string(), v.is_zero())
            }
        })
        .collect();
    ModelReport {
        point: p.to_string(),
        on_curve: residues.iter().all(|(_, z)| *z),
        residues: residues.into_iter().map(|(s, _)| s).collect(),
    }
}

/// Per-quadric sign under w₉₁; fails if some quadric is not mapped to ±itself.
pub fn involution_consistency(model: &QuadricModel) -> Result<Vec<i8>> {
    model
        .quadrics
        .iter()
        .enumerate()
        .map(|(k, q)| q.involution_sign().ok_or_else(|| Error::Integrity(format!("quadric {} is not mapped to ±itself by w91", k + 1))))
        .collect()
}

/// The four rational cusps.
pub fn cusps() -> Vec<ProjPoint> {
    [[1, 0, 0, 0, 0, 1, 0], [-1, 0, 0, 0, 0, 1, 0], [2, 0, -1, -1, -1, 1, 1], [-2, 0, 1, 1, 1, 1, 1]]
        .iter()
        .map(|c| ProjPoint::from_ints(c).expect("valid cusp"))
        .collect()
}

/// α = (17 + 5√13)/18, a root of 9x² − 17x − 1.
pub fn alpha() -> QuadExtElem {
    QuadExtElem::new(rat(17, 18), rat(5, 18), 13).expect("13 is squarefree")
}

/// The CM point P = ((−8α+7)/5 : (3α−7)/5 : (−α+9)/5 : α : 1 : 0 : 0).
pub fn cm_point() -> ProjPoint {
    let a = alpha();
    let q = |c: i64, k: i64, den: i64| (&a.scale(&int(c)) + &QuadExtElem::from_rational(int(k), 13)).scale(&rat(1, den));
    let e = |v: i64| QuadExtElem::from_rational(int(v), 13);
    ProjPoint::quadratic(vec![q(-8, 7, 5), q(3, -7, 5), q(-1, 9, 5), a.clone(), e(1), e(0), e(0)]).expect("valid point")
}
