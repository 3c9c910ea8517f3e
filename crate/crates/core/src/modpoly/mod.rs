//! Classical modular polynomials: loading from sparse coefficient files,
//! specialization at rational j-values and factor-degree certification of
//! the specialized polynomial.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::rational::big;
use crate::exact::{certify_factor_degrees, factor_over_q, factor_small, primes_from, DegreeCertificate, PolyFp, PolyQ, Rational};
use crate::{Error, Result};

/// Upper bound on the number of primes used by [`isogeny_degree_witness`].
pub const PRIME_CAP: usize = 25;
/// Number of primes certified before escalation starts.
const INITIAL_PRIMES: usize = 5;
/// Escalation starts at the least good prime at or above this bound.
const FIRST_PRIME: u64 = 11;

/// Number of cyclic subgroups of order `n` in (ℤ/nℤ)², i.e. n∏(1 + 1/p).
pub fn psi(n: u64) -> u64 {
    factor_small(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p + 1))
}

/// Φ_N(X, Y) stored triangularly: `(i, j) ↦ c` with `i ≥ j` stands for
/// `c·(XⁱYʲ + XʲYⁱ)` when `i > j` and `c·XⁱYⁱ` when `i = j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPolynomial {
    level: u64,
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl ModularPolynomial {
    /// Builds and validates a table. Zero entries are dropped.
    pub fn new(level: u64, coeffs: BTreeMap<(usize, usize), BigInt>) -> Result<Self> {
        if level < 2 {
            return Err(Error::Integrity(format!("level {level} must be at least 2")));
        }
        let coeffs: BTreeMap<_, _> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if let Some(&(i, j)) = coeffs.keys().find(|(i, j)| i < j) {
            return Err(Error::Integrity(format!("entry [{i},{j}] is not triangular")));
        }
        let n = psi(level) as usize;
        let degree = coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0);
        if degree != n {
            return Err(Error::Integrity(format!("X-degree {degree} differs from psi({level}) = {n}")));
        }
        let lead: Vec<_> = coeffs.iter().filter(|((i, _), _)| *i == n).collect();
        if lead.len() != 1 || *lead[0].0 != (n, 0) || !lead[0].1.is_one() {
            return Err(Error::Integrity(format!("not monic in X: X^{n} must have coefficient 1")));
        }
        Ok(ModularPolynomial { level, coeffs })
    }

    /// Parses the sparse `[i,j] c` format.
    pub fn parse(level: u64, text: &str) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Parse { line: k + 1, msg: msg.to_string() };
            let rest = line.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let (pair, value) = rest.split_once(']').ok_or_else(|| bad("expected ']'"))?;
            let (i, j) = pair.split_once(',').ok_or_else(|| bad("expected 'i,j'"))?;
            let i: usize = i.trim().parse().map_err(|_| bad("bad exponent"))?;
            let j: usize = j.trim().parse().map_err(|_| bad("bad exponent"))?;
            if i < j {
                return Err(bad(&format!("exponent pair [{i},{j}] has i < j")));
            }
            let c: BigInt = value.trim().parse().map_err(|_| bad("bad integer coefficient"))?;
            if coeffs.insert((i, j), c).is_some() {
                return Err(bad(&format!("duplicate entry [{i},{j}]")));
            }
        }
        if coeffs.is_empty() {
            return Err(Error::Integrity("no coefficients".into()));
        }
        Self::new(level, coeffs)
    }

    /// Inverse of [`ModularPolynomial::parse`], entries in ascending order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((i, j), c) in &self.coeffs {
            let _ = writeln!(out, "[{i},{j}] {c}");
        }
        out
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Degree in each variable.
    pub fn degree(&self) -> usize {
        psi(self.level) as usize
    }

    /// Coefficient of XⁱYʲ.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        let key = if i >= j { (i, j) } else { (j, i) };
        self.coeffs.get(&key).cloned().unwrap_or_default()
    }

    /// Nonzero triangular entries.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.coeffs.iter()
    }

    /// Φ(x, y).
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.partial(y).eval(x)
    }

    /// Φ(X, y) with rational coefficients, before clearing denominators.
    pub fn partial(&self, y: &Rational) -> PolyQ {
        let n = self.degree();
        let mut ypow = vec![Rational::one()];
        for k in 1..=n {
            ypow.push(&ypow[k - 1] * y);
        }
        let mut cs = vec![Rational::zero(); n + 1];
        for (&(i, j), c) in &self.coeffs {
            let c = big(c);
            cs[i] += &c * &ypow[j];
            if i != j {
                cs[j] += &c * &ypow[i];
            }
        }
        PolyQ::new(cs)
    }

    /// Φ(X, j) as a primitive integer polynomial.
    pub fn specialize(&self, j: &Rational) -> SpecializedPoly {
        let (_, ints) = self.partial(j).primitive_part();
        SpecializedPoly { level: self.level, j: j.clone(), poly: PolyQ::from_bigints(&ints), integer_coeffs: ints }
    }
}

/// Loads a modular polynomial file for the given level.
pub fn load_modpoly(level: u64, path: &Path) -> Result<ModularPolynomial> {
    let text = std::fs::read_to_string(path)?;
    ModularPolynomial::parse(level, &text)
}

/// Φ_N(X, j) after clearing denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedPoly {
    pub level: u64,
    pub j: Rational,
    /// Primitive with positive leading coefficient.
    pub poly: PolyQ,
    pub integer_coeffs: Vec<BigInt>,
}

impl SpecializedPoly {
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }
}

/// Result of factor-degree certification for Φ_N(X, j).
#[derive(Clone, Debug, Serialize)]
pub struct DegreeWitness {
    pub level: u64,
    pub j: String,
    pub degree: usize,
    pub certificate: DegreeCertificate,
    /// The unique finest multiset compatible with every pattern, if there is
    /// one. The true factor degrees are a grouping of its parts.
    pub pattern_multiset: Option<Vec<usize>>,
    /// Exact ℚ-factor degrees, ascending, when a full factorization was run.
    pub degrees: Option<Vec<usize>>,
    /// Lower bound on the degree of every ℚ-irreducible factor (exact when
    /// `degrees` is known).
    pub min_degree: Option<usize>,
}

impl DegreeWitness {
    pub fn is_determinate(&self) -> bool {
        self.degrees.is_some()
    }
}

/// Certifies the factor degrees of Φ_N(X, j) over ℚ.
///
/// Primes of good reduction starting at 11 are added until the feasible set
/// of finest degree multisets is a singleton or [`PRIME_CAP`] primes are in
/// use. Every ℚ-factorization groups the parts of some finest multiset, so the
/// smallest part over all finest multisets bounds every factor degree below.
/// With `factor` set, the polynomial is also factored completely and the
/// exact degrees are reported.
pub fn isogeny_degree_witness(phi: &ModularPolynomial, j: &Rational, factor: bool) -> Result<DegreeWitness> {
    isogeny_degree_witness_capped(phi, j, factor, PRIME_CAP)
}

/// [`isogeny_degree_witness`] with an explicit cap on the number of primes.
pub fn isogeny_degree_witness_capped(phi: &ModularPolynomial, j: &Rational, factor: bool, prime_cap: usize) -> Result<DegreeWitness> {
    if prime_cap == 0 {
        return Err(Error::invalid("prime cap must be positive"));
    }
    let spec = phi.specialize(j);
    let f = &spec.poly;
    let good = good_primes(&spec.integer_coeffs, prime_cap);
    if good.is_empty() {
        let g = f.gcd(&f.derivative());
        if g.deg() > 0 {
            return Err(Error::NotSquarefree { witness: g.display_in("X") });
        }
        return Err(Error::invalid("no prime of good reduction found below the search bound"));
    }
    let mut used = good[..good.len().min(INITIAL_PRIMES)].to_vec();
    let mut cert = certify_factor_degrees(f, &used)?;
    while cert.singleton().is_none() && used.len() < good.len() {
        used.push(good[used.len()]);
        cert = certify_factor_degrees(f, &used)?;
    }
    let pattern_multiset = cert.singleton().cloned();
    let degrees = factor.then(|| {
        let mut d = factor_over_q(f).degrees();
        d.sort_unstable();
        d
    });
    let min_degree = match &degrees {
        Some(d) => d.first().copied(),
        None if cert.truncated => None,
        None => cert.feasible.iter().filter_map(|m| m.iter().min().copied()).min(),
    };
    Ok(DegreeWitness {
        level: phi.level,
        j: j.to_string(),
        degree: spec.degree(),
        certificate: cert,
        pattern_multiset,
        degrees,
        min_degree,
    })
}

/// Up to `count` primes ≥ 11 at which `g` keeps its degree and stays
/// squarefree. Returns an empty list when `g` is not squarefree over ℚ.
fn good_primes(g: &[BigInt], count: usize) -> Vec<u64> {
    let lc = g.last().cloned().unwrap_or_default();
    let mut out = Vec::new();
    // A squarefree polynomial has only finitely many bad primes; scanning a
    // few hundred primes without finding one signals a repeated factor.
    for p in primes_from(FIRST_PRIME).take(400) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        if PolyFp::from_bigints(p, g).is_squarefree() {
            out.push(p);
            if out.len() == count {
                break;
            }
        }
    }
    out
}
