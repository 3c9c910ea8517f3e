//! Φ_{ℓ²} from Φ_ℓ.
//!
//! Composing two ℓ-isogenies gives every cyclic ℓ²-isogeny once and the
//! multiplication-by-ℓ map ℓ + 1 times, so
//! Res_Z(Φ_ℓ(X, Z), Φ_ℓ(Z, Y)) = (−1)^((ℓ+1)²)·Φ_{ℓ²}(X, Y)·(X − Y)^(ℓ+1).
//! The left side is evaluated on an integer grid with disjoint X and Y nodes
//! and Φ_{ℓ²} is recovered by two-dimensional interpolation.

use std::collections::BTreeMap;

use isogate_core::exact::{inv_mod, is_prime, Rational};
use isogate_core::modpoly::ModularPolynomial;
use isogate_core::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::classical::triangular;

/// Number of extra primes that must leave the CRT reconstruction unchanged.
const STABLE_PRIMES: usize = 3;
/// Integer points where the final table is checked exactly against resultants.
const SPOT_CHECKS: [(i64, i64); 2] = [(-3, 5), (7, -11)];

/// Φ_{ℓ²}(X, Y) from Φ_ℓ(X, Y).
///
/// The grid evaluation and interpolation run modulo word-sized primes; the
/// integer table is rebuilt by the Chinese remainder theorem once it stops
/// changing, then checked exactly against the resultant identity at a few
/// integer points.
pub fn square_level(phi: &ModularPolynomial) -> Result<ModularPolynomial> {
    let ell = phi.level();
    let n = (ell * (ell + 1)) as usize;
    let mut modulus = BigInt::one();
    let mut table: Vec<BigInt> = vec![BigInt::zero(); (n + 1) * (n + 1)];
    let mut stable = 0;
    let mut primes = (1u64 << 61..1u64 << 62).rev().filter(|&p| is_prime(p));
    // Primes are processed in batches so the per-prime work can run in parallel.
    while stable < STABLE_PRIMES {
        let batch: Vec<u64> = primes.by_ref().take(4).collect();
        let images: Vec<(u64, Vec<u64>)> = batch.par_iter().map(|&p| (p, square_level_mod(phi, n, p))).collect();
        for (p, image) in images {
            let before = symmetric(&table, &modulus);
            crt_step(&mut table, &mut modulus, &image, p);
            if symmetric(&table, &modulus) == before {
                stable += 1;
            } else {
                stable = 0;
            }
        }
    }
    let mut full = BTreeMap::new();
    for (idx, c) in symmetric(&table, &modulus).into_iter().enumerate() {
        if !c.is_zero() {
            full.insert((idx / (n + 1), idx % (n + 1)), c);
        }
    }
    let out = triangular(ell * ell, full)?;
    for (x, y) in SPOT_CHECKS {
        let (x, y) = (Rational::from_integer(x.into()), Rational::from_integer(y.into()));
        let res = phi.partial(&x).resultant(&phi.partial(&y));
        let sign = if ell % 2 == 0 { -Rational::one() } else { Rational::one() };
        let rhs = sign * out.eval(&x, &y) * num_traits::pow(&x - &y, (ell + 1) as usize);
        if res != rhs {
            return Err(Error::Integrity(format!("resultant identity fails at ({x}, {y})")));
        }
    }
    Ok(out)
}

/// Coefficient table of Φ_{ℓ²} modulo `p`, row-major in (X-exponent, Y-exponent).
fn square_level_mod(phi: &ModularPolynomial, n: usize, p: u64) -> Vec<u64> {
    let ell = phi.level();
    let d = (ell + 1) as usize;
    let mut coeffs = vec![0u64; (d + 1) * (d + 1)];
    for (&(i, j), c) in phi.entries() {
        let c = reduce(c, p);
        coeffs[i * (d + 1) + j] = c;
        coeffs[j * (d + 1) + i] = c;
    }
    // Φ_ℓ(Z, v) as a polynomial in Z.
    let at =
        |v: u64| -> Vec<u64> { (0..=d).map(|i| (0..=d).rev().fold(0, |acc, j| add(mul(acc, v, p), coeffs[i * (d + 1) + j], p))).collect() };
    let xs: Vec<u64> = (0..=n as u64).collect();
    let ys: Vec<u64> = (n as u64 + 1..=2 * n as u64 + 1).collect();
    let fx: Vec<Vec<u64>> = xs.iter().map(|&x| at(x)).collect();
    let fy: Vec<Vec<u64>> = ys.iter().map(|&y| at(y)).collect();
    let mut by_x = Vec::with_capacity(xs.len());
    for (a, &x) in xs.iter().enumerate() {
        let vals: Vec<u64> = ys
            .iter()
            .enumerate()
            .map(|(b, &y)| {
                let mut r = resultant_mod(&fx[a], &fy[b], p);
                if ell % 2 == 0 {
                    r = (p - r) % p;
                }
                let diff = (x + p - y) % p;
                mul(r, inv_mod(pow(diff, ell + 1, p), p).expect("grid nodes are distinct mod p"), p)
            })
            .collect();
        by_x.push(interpolate_mod(&ys, &vals, p));
    }
    let mut out = vec![0u64; (n + 1) * (n + 1)];
    for k in 0..=n {
        let vals: Vec<u64> = by_x.iter().map(|r| r[k]).collect();
        for (i, c) in interpolate_mod(&xs, &vals, p).into_iter().enumerate() {
            out[i * (n + 1) + k] = c;
        }
    }
    out
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.try_into().expect("reduced value fits in u64")
}

fn add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn sub(a: u64, b: u64, p: u64) -> u64 {
    add(a, p - b % p, p)
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    r
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Resultant of two polynomials over 𝔽ₚ (coefficients constant first).
fn resultant_mod(f: &[u64], g: &[u64], p: u64) -> u64 {
    let (mut a, mut b) = (f.to_vec(), g.to_vec());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut acc = 1u64;
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let lb = b[db];
        if db == 0 {
            return mul(acc, pow(lb, da as u64, p), p);
        }
        // r = a mod b
        let inv = inv_mod(lb, p).expect("nonzero leading coefficient");
        let mut r = a.clone();
        while r.len() > db {
            let top = mul(*r.last().unwrap(), inv, p);
            let shift = r.len() - 1 - db;
            for (k, &bk) in b.iter().enumerate() {
                r[shift + k] = sub(r[shift + k], mul(top, bk, p), p);
            }
            r.pop();
            trim(&mut r);
        }
        if r.is_empty() {
            return 0;
        }
        let dr = r.len() - 1;
        if (da * db) % 2 == 1 {
            acc = (p - acc) % p;
        }
        acc = mul(acc, pow(lb, (da - dr) as u64, p), p);
        a = b;
        b = r;
    }
}

/// Coefficients of the interpolating polynomial over 𝔽ₚ, via Newton divided differences.
fn interpolate_mod(nodes: &[u64], values: &[u64], p: u64) -> Vec<u64> {
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let den = inv_mod(sub(nodes[i], nodes[i - level], p), p).expect("distinct nodes");
            dd[i] = mul(sub(dd[i], dd[i - 1], p), den, p);
        }
    }
    let mut poly = vec![0u64; n];
    for i in (0..n).rev() {
        // poly ← poly·(X − nodes[i]) + dd[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if poly[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = add(next[k + 1], poly[k], p);
            }
            next[k] = sub(next[k], mul(poly[k], nodes[i] % p, p), p);
        }
        next[0] = add(next[0], dd[i], p);
        poly = next;
    }
    poly
}

/// Folds residues modulo `p` into the running CRT table.
fn crt_step(table: &mut [BigInt], modulus: &mut BigInt, image: &[u64], p: u64) {
    let m_mod_p = reduce(modulus, p);
    let inv = inv_mod(m_mod_p, p).expect("distinct primes");
    let pb = BigInt::from(p);
    for (t, &r) in table.iter_mut().zip(image) {
        // t' = t + M·((r − t)·M⁻¹ mod p)
        let k = mul(sub(r, reduce(t, p), p), inv, p);
        *t += &*modulus * BigInt::from(k);
    }
    *modulus *= pb;
}

/// Representatives in (−M/2, M/2].
fn symmetric(table: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    let half = modulus / 2;
    table.iter().map(|t| if t > &half { t - modulus } else { t.clone() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::classical_modpoly;
    use crate::series::Laurent;
    use isogate_core::exact::PolyQ;

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = 1_000_003;
        // 3 − 2x² + 5x³ with −2 ≡ p − 2.
        let f = [3u64, 0, p - 2, 5];
        let nodes: Vec<u64> = (10..14).collect();
        let vals: Vec<u64> = nodes.iter().map(|&x| f.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))).collect();
        assert_eq!(interpolate_mod(&nodes, &vals, p), f.to_vec());
    }

    #[test]
    fn modular_resultant_matches_exact() {
        let f = PolyQ::from_ints(&[5, -3, 0, 2, 1]);
        let g = PolyQ::from_ints(&[-7, 4, 1]);
        let exact = f.resultant(&g).to_integer();
        let p = (1u64 << 61) - 1;
        let red = |q: &PolyQ| q.coeffs().iter().map(|c| reduce(&c.to_integer(), p)).collect::<Vec<_>>();
        assert_eq!(resultant_mod(&red(&f), &red(&g), p), reduce(&exact, p));
    }

    #[test]
    fn phi4_vanishes_on_j_and_j_of_4tau() {
        let phi4 = square_level(&classical_modpoly(2).unwrap()).unwrap();
        assert_eq!(phi4.degree(), 6);
        let j = crate::series::j_series(40);
        let j4 = j.inflate(4);
        let mut total = Laurent::zero(1 << 40);
        let pow = |s: &Laurent, k: usize| (0..k).fold(Laurent::one(1 << 40), |acc, _| acc.mul(s));
        for i in 0..=6 {
            for k in 0..=6 {
                let c = phi4.coeff(i, k);
                if !c.is_zero() {
                    total = total.add(&pow(&j, i).mul(&pow(&j4, k)).scale(&c));
                }
            }
        }
        assert!(total.prec > 0);
        assert!(total.is_zero(), "residual starts at q^{}", total.val);
    }
}
