//! Polynomials over a prime field 𝔽ₚ and their factorization.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{inv_mod, is_prime, mul_mod};
use crate::error::{Error, Result};

/// Dense polynomial over 𝔽ₚ, lowest degree first, no trailing zeros.
///
/// The modulus must fit in 32 bits so that products fit comfortably.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyFp {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    pub fn from_ints(p: u64, cs: &[i64]) -> Self {
        Self::new(p, cs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
    }

    pub fn from_bigints(p: u64, cs: &[BigInt]) -> Self {
        let bp = BigInt::from(p);
        Self::new(p, cs.iter().map(|c| c.mod_floor(&bp).to_u64().unwrap()).collect())
    }

    pub fn zero(p: u64) -> Self {
        PolyFp { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p).expect("leading coefficient invertible"))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.p, (0..n).map(|k| (self.coeff(k) + o.coeff(k)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.p, (0..n).map(|k| (self.coeff(k) + self.p - o.coeff(k)) % self.p).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut v = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, v.into_iter().map(|c| c as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let p = self.p;
        let dd = d.deg();
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p).expect("unit leading coefficient");
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            if c != 0 {
                for (i, &dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = (r[k + i] + p - mul_mod(c, dc, p)) % p;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division mod {}", self.p);
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·o = g` and `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let u = inv_mod(r0.lc(), p).expect("unit");
        (r0.scale(u), s0.scale(u), t0.scale(u))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.p, self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| mul_mod(c, k as u64 % self.p, self.p)).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }

    /// Inverse of the Frobenius on a polynomial all of whose exponents are
    /// multiples of `p`.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Squarefree decomposition of a monic polynomial: `(g, e)` pairs with
    /// `self = ∏ g^e` and the `g` squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyFp, u32)> {
        let mut out = Vec::new();
        let f = self.monic();
        if f.deg() == 0 {
            return out;
        }
        let mut c = f.gcd(&f.derivative());
        let mut w = f.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if !fac.is_one() {
                out.push((fac, i));
            }
            c = c.div_exact(&y);
            w = y;
            i += 1;
        }
        if !c.is_one() {
            let root = c.pth_root();
            for (g, e) in root.squarefree_decomposition() {
                out.push((g, e * self.p as u32));
            }
        }
        out
    }

    /// Distinct-degree factorization of a squarefree monic polynomial:
    /// `(product of all degree-d irreducible factors, d)`.
    pub fn distinct_degree(&self) -> Vec<(PolyFp, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut d = 1;
        let pe = BigUint::from(p);
        while f.deg() >= 2 * d {
            h = h.pow_mod(&pe, &f);
            let g = f.gcd(&h.sub(&x));
            if !g.is_one() {
                f = f.div_exact(&g);
                h = h.rem(&f);
                out.push((g, d));
            }
            d += 1;
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }

    /// Splits a product of distinct degree-`d` irreducibles (odd `p`).
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyFp> {
        let n = self.deg();
        if n == d {
            return vec![self.clone()];
        }
        let p = self.p;
        let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a = Self::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.deg() == 0 {
                continue;
            }
            let g = self.gcd(&a);
            let g = if !g.is_one() { g } else { self.gcd(&a.pow_mod(&e, self).sub(&Self::one(p))) };
            if !g.is_one() && g.deg() < n {
                let mut out = g.equal_degree(d, rng);
                out.extend(self.div_exact(&g).equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, sorted.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            out.extend(std::iter::repeat_n(d, g.deg() / d));
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}*x"),
                (k, 1) => format!("x^{k}"),
                (k, c) => format!("{c}*x^{k}"),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.p)
    }
}

/// Complete factorization over 𝔽ₚ into monic irreducibles with multiplicity.
///
/// The product of the factors times `f.lc()` equals `f`. Output is sorted by
/// degree, then coefficient sequence.
pub fn factor_mod_p(f: &PolyFp) -> Result<Vec<(PolyFp, u32)>> {
    let p = f.modulus();
    if p == 2 {
        return Err(Error::UnsupportedModulus { modulus: 2, reason: "characteristic 2 is not supported" });
    }
    if !is_prime(p) || p >= 1 << 32 {
        return Err(Error::NotPrime(p));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    for (g, e) in f.squarefree_decomposition() {
        for (h, d) in g.distinct_degree() {
            for irr in h.equal_degree(d, &mut rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|a, b| (a.0.deg(), &a.0.coeffs).cmp(&(b.0.deg(), &b.0.coeffs)));
    Ok(out)
}

/// Reference irreducibility test by exhaustive search for factors; only usable
/// for tiny `p` and degree.
pub fn is_irreducible_bruteforce(f: &PolyFp) -> bool {
    let n = f.deg();
    let p = f.modulus();
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut cs = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                cs.push(t % p);
                t /= p;
            }
            cs.push(1);
            if f.rem(&PolyFp::new(p, cs)).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn product(p: u64, fs: &[(PolyFp, u32)]) -> PolyFp {
        fs.iter().fold(PolyFp::one(p), |acc, (g, e)| (0..*e).fold(acc, |a, _| a.mul(g)))
    }

    #[test]
    fn small_examples() {
        let f = factor_mod_p(&PolyFp::from_ints(5, &[1, 0, 1])).unwrap();
        assert_eq!(f, vec![(PolyFp::from_ints(5, &[2, 1]), 1), (PolyFp::from_ints(5, &[3, 1]), 1)]);
        let f = factor_mod_p(&PolyFp::from_ints(7, &[1, 0, 1])).unwrap();
        assert_eq!(f, vec![(PolyFp::from_ints(7, &[1, 0, 1]), 1)]);
        let f = factor_mod_p(&PolyFp::from_ints(5, &[0, -1, 0, 1])).unwrap();
        let lin: Vec<_> = f.iter().map(|(g, _)| g.coeffs().to_vec()).collect();
        assert_eq!(lin, vec![vec![0, 1], vec![1, 1], vec![4, 1]]);
    }

    #[test]
    fn rejects_char_two_and_zero() {
        assert!(matches!(factor_mod_p(&PolyFp::from_ints(2, &[1, 1])), Err(Error::UnsupportedModulus { modulus: 2, .. })));
        assert!(matches!(factor_mod_p(&PolyFp::zero(3)), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn repeated_and_frobenius_factors() {
        // (x+1)^3 (x^2+1)^2 x^3 over F_3: the x^3 - type part needs p-th roots.
        let p = 3;
        let f = PolyFp::from_ints(p, &[1, 1])
            .mul(&PolyFp::from_ints(p, &[1, 1]))
            .mul(&PolyFp::from_ints(p, &[1, 1]))
            .mul(&PolyFp::from_ints(p, &[1, 0, 1]))
            .mul(&PolyFp::from_ints(p, &[1, 0, 1]))
            .mul(&PolyFp::from_ints(p, &[0, 0, 0, 1]));
        let fs = factor_mod_p(&f).unwrap();
        assert_eq!(product(p, &fs), f);
        let shape: Vec<(usize, u32)> = fs.iter().map(|(g, e)| (g.deg(), *e)).collect();
        assert_eq!(shape, vec![(1, 3), (1, 3), (2, 2)]);
    }

    proptest! {
        #[test]
        fn factors_reconstruct(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]),
                               cs in prop::collection::vec(0u64..1000, 1..12)) {
            let f = PolyFp::new(p, cs);
            prop_assume!(!f.is_zero());
            let fs = factor_mod_p(&f).unwrap();
            prop_assert_eq!(product(p, &fs).scale(f.lc()), f.clone());
            let total: usize = fs.iter().map(|(g, e)| g.deg() * *e as usize).sum();
            prop_assert_eq!(total, f.deg());
            for (g, _) in &fs {
                if g.deg() <= 4 && p <= 7 {
                    prop_assert!(is_irreducible_bruteforce(g));
                }
            }
        }
    }
}
