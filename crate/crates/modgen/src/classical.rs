//! Φ_ℓ for prime ℓ from q-expansions.
//!
//! The roots of Φ_ℓ(X, j(τ)) are j(ℓτ) and j((τ + k)/ℓ) for 0 ≤ k < ℓ. Their
//! power sums are integral q-series: the ℓ shifted terms sum to ℓ times the
//! part of j^m whose exponents are divisible by ℓ. Newton's identities give the
//! elementary symmetric functions, each a polynomial in j of degree ≤ ℓ + 1,
//! recovered by peeling off leading terms.

use std::collections::BTreeMap;

use isogate_core::exact::is_prime;
use isogate_core::modpoly::ModularPolynomial;
use isogate_core::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::series::{j_series, Laurent};

const EXACT: i64 = 1 << 40;

/// Φ_ℓ(X, Y) for a prime ℓ.
pub fn classical_modpoly(ell: u64) -> Result<ModularPolynomial> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let l = ell as i64;
    let d = (ell + 1) as usize;
    let prec = l * (l + 1) + 2;
    let j = j_series(l * prec + d as i64);

    let mut jpow = vec![Laurent::one(EXACT)];
    for m in 1..=d {
        jpow.push(jpow[m - 1].mul(&j));
    }
    let j_ell = j.inflate(l);
    let mut jell_pow = vec![Laurent::one(EXACT)];
    for m in 1..=d {
        jell_pow.push(jell_pow[m - 1].mul(&j_ell));
    }
    let power_sums: Vec<Laurent> = (0..=d)
        .map(|m| {
            if m == 0 {
                return Laurent::zero(EXACT);
            }
            jell_pow[m].add(&jpow[m].deflate(l).scale(&BigInt::from(ell)))
        })
        .collect();

    let mut elem = vec![Laurent::one(EXACT)];
    for m in 1..=d {
        let mut acc = Laurent::zero(EXACT);
        for i in 1..=m {
            let term = elem[m - i].mul(&power_sums[i]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        elem.push(acc.div_exact(&BigInt::from(m)));
    }

    let mut table: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for (m, e) in elem.iter().enumerate() {
        let coeff = if m % 2 == 0 { e.clone() } else { e.neg() };
        for (k, a) in peel(&coeff, &jpow, d)? {
            table.insert((d - m, k), a);
        }
    }
    triangular(ell, table)
}

/// Writes `s` as Σ aₖ jᵏ with k ≤ `max_deg`; fails unless the remainder
/// vanishes to the known precision.
fn peel(s: &Laurent, jpow: &[Laurent], max_deg: usize) -> Result<Vec<(usize, BigInt)>> {
    if s.prec < 1 {
        return Err(Error::Integrity(format!("series precision {} too low", s.prec)));
    }
    let mut rest = s.clone();
    let mut out = Vec::new();
    while !rest.is_zero() && rest.val <= 0 {
        let k = (-rest.val) as usize;
        if k > max_deg {
            return Err(Error::Integrity(format!("pole of order {k} exceeds {max_deg}")));
        }
        let a = rest.coeff(rest.val);
        rest = rest.sub(&jpow[k].scale(&a));
        out.push((k, a));
    }
    if !rest.is_zero() {
        return Err(Error::Integrity("q-series is not a polynomial in j".into()));
    }
    Ok(out)
}

/// Checks symmetry of a full coefficient table and keeps the `i ≥ j` half.
pub(crate) fn triangular(level: u64, full: BTreeMap<(usize, usize), BigInt>) -> Result<ModularPolynomial> {
    let mut tri = BTreeMap::new();
    for (&(i, j), c) in &full {
        if c.is_zero() {
            continue;
        }
        let mirror = full.get(&(j, i)).cloned().unwrap_or_default();
        if &mirror != c {
            return Err(Error::Integrity(format!("coefficient of X^{i}Y^{j} is not symmetric")));
        }
        if i >= j {
            tri.insert((i, j), c.clone());
        }
    }
    ModularPolynomial::new(level, tri)
}
