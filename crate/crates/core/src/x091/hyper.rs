//! Genus-2 curves y² = f(x): point counts over 𝔽_p and 𝔽_{p²}, zeta data and
//! Jacobian orders.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::exact::{is_prime, PolyQ};
use crate::{Error, Result};

/// y² = f(x) with f of degree 5 or 6 and nonzero discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypCurve {
    f: PolyQ,
    /// Integer coefficients of f, constant term first.
    coeffs: Vec<BigInt>,
    /// lc(f)·disc(f) of the integer model.
    bad: BigInt,
}

impl HypCurve {
    pub fn new(f: PolyQ) -> Result<Self> {
        let n = f.degree().unwrap_or(0);
        if n != 5 && n != 6 {
            return Err(Error::invalid(format!("degree {n} does not give a genus-2 curve")));
        }
        if f.coeffs().iter().any(|c| !c.is_integer()) {
            return Err(Error::invalid("f must have integer coefficients"));
        }
        let disc = f.discriminant();
        if disc.is_zero() {
            return Err(Error::invalid("f is not squarefree"));
        }
        let bad = (disc * f.lc()).to_integer();
        let coeffs = f.coeffs().iter().map(|c| c.to_integer()).collect();
        Ok(HypCurve { f, coeffs, bad })
    }

    /// y² = x⁶ + 2x⁵ − x⁴ − 8x³ − x² + 2x + 1, the quotient of X₀(91) by w₉₁.
    pub fn x0_91_plus() -> Self {
        Self::new(PolyQ::from_ints(&[1, 2, -1, -8, -1, 2, 1])).expect("squarefree sextic")
    }

    pub fn f(&self) -> &PolyQ {
        &self.f
    }

    /// Whether p is odd and does not divide lc(f)·disc(f).
    pub fn has_good_reduction(&self, p: u64) -> bool {
        p % 2 == 1 && is_prime(p) && !(&self.bad % BigInt::from(p)).is_zero()
    }

    fn check_prime(&self, p: u64) -> Result<Vec<u64>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !self.has_good_reduction(p) {
            return Err(Error::BadPrime(p));
        }
        let pb = BigInt::from(p);
        Ok(self.coeffs.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
    }
}

/// 𝔽_{p^k} for k ∈ {1, 2}, with 𝔽_{p²} = 𝔽_p[t]/(t² − r), r the least
/// positive non-residue.
struct SmallField {
    p: u64,
    r: u64,
    square: Vec<bool>,
}

impl SmallField {
    fn new(p: u64) -> Self {
        let mut square = vec![false; p as usize];
        for a in 0..p {
            square[(a * a % p) as usize] = true;
        }
        let r = (1..p).find(|&a| !square[a as usize]).expect("odd prime has a non-residue");
        SmallField { p, r, square }
    }

    /// Quadratic character χ on 𝔽_p.
    fn chi(&self, a: u64) -> i64 {
        match a % self.p {
            0 => 0,
            a if self.square[a as usize] => 1,
            _ => -1,
        }
    }

    /// χ on 𝔽_{p²}: an element is a square iff its norm is a square in 𝔽_p.
    fn chi2(&self, (a, b): (u64, u64)) -> i64 {
        let p = self.p;
        self.chi((a * a % p + p - self.r * (b * b % p) % p) % p)
    }

    fn mul2(&self, (a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
        let p = self.p;
        ((a * c % p + self.r * (b * d % p)) % p, (a * d + b * c) % p)
    }

    fn eval(&self, f: &[u64], x: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| (acc * x + c) % self.p)
    }

    fn eval2(&self, f: &[u64], x: (u64, u64)) -> (u64, u64) {
        f.iter().rev().fold((0, 0), |acc, &c| {
            let (a, b) = self.mul2(acc, x);
            ((a + c) % self.p, b)
        })
    }
}

/// #C(𝔽_{p^k}) for k ∈ {1, 2}, counting the points at infinity of the
/// smooth model.
pub fn count_points(c: &HypCurve, p: u64, k: u32) -> Result<u64> {
    let f = c.check_prime(p)?;
    if k != 1 && k != 2 {
        return Err(Error::invalid(format!("extension degree {k} is not supported")));
    }
    let field = SmallField::new(p);
    let deg = f.len() - 1;
    let lc = f[deg];
    let mut affine: i64 = 0;
    let at_infinity = if k == 1 {
        for x in 0..p {
            affine += 1 + field.chi(field.eval(&f, x));
        }
        if deg == 5 {
            1
        } else {
            1 + field.chi(lc)
        }
    } else {
        for a in 0..p {
            for b in 0..p {
                affine += 1 + field.chi2(field.eval2(&f, (a, b)));
            }
        }
        // Every element of 𝔽_p is a square in 𝔽_{p²}.
        if deg == 5 {
            1
        } else {
            2
        }
    };
    Ok((affine + at_infinity) as u64)
}

/// Zeta-function data of a genus-2 curve at a good prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaData {
    pub p: u64,
    pub n1: u64,
    pub n2: u64,
    pub c1: i64,
    pub c2: i64,
    pub jacobian_order: u64,
}

/// N₁, N₂, the L-polynomial coefficients and |J(𝔽_p)| = L(1).
pub fn jacobian_order(c: &HypCurve, p: u64) -> Result<ZetaData> {
    let n1 = count_points(c, p, 1)?;
    let n2 = count_points(c, p, 2)?;
    let pi = p as i64;
    let c1 = n1 as i64 - pi - 1;
    let twice_c2 = n2 as i64 - pi * pi - 1 + c1 * c1;
    if twice_c2 % 2 != 0 {
        return Err(Error::Integrity(format!("c2 is not an integer at p = {p}")));
    }
    if c1 * c1 > 16 * pi {
        return Err(Error::Integrity(format!("Weil bound |c1| <= 4 sqrt(p) fails at p = {p}: c1 = {c1}")));
    }
    let c2 = twice_c2 / 2;
    let order = 1 + c1 + c2 + pi * c1 + pi * pi;
    if order <= 0 {
        return Err(Error::Integrity(format!("non-positive L(1) = {order} at p = {p}")));
    }
    Ok(ZetaData { p, n1, n2, c1, c2, jacobian_order: order as u64 })
}

/// |J(𝔽_p)| by enumerating Mumford pairs, for monic sextic f.
///
/// Degree-2 divisor classes are in bijection with degree-0 classes (subtract
/// the rational divisor at infinity). Every degree-2 class is effective and
/// only the canonical class has more than one effective representative; its
/// p + 1 members are the fibres of x. Counting effective rational divisors
/// of degree 2 by type gives |J| = A₂ + 2·A₁ + 3, where A₁ is the number of
/// affine points and A₂ the number of pairs (u, v) with u monic quadratic,
/// deg v ≤ 1 and v² ≡ f (mod u).
pub fn jacobian_order_by_enumeration(c: &HypCurve, p: u64) -> Result<u64> {
    let f = c.check_prime(p)?;
    if f.len() != 7 || f[6] != 1 {
        return Err(Error::invalid("enumeration needs a monic sextic"));
    }
    let field = SmallField::new(p);
    let mut a1 = 0u64;
    for x in 0..p {
        a1 += (1 + field.chi(field.eval(&f, x))) as u64;
    }
    let mut a2 = 0u64;
    for u1 in 0..p {
        for u0 in 0..p {
            // u = x² + u1 x + u0; reduce f modulo u to r1 x + r0.
            let (r1, r0) = reduce_mod_quadratic(&f, u1, u0, p);
            for v1 in 0..p {
                for v0 in 0..p {
                    // v² = v1² x² + 2 v1 v0 x + v0², with x² ≡ −u1 x − u0.
                    let s1 = (2 * v1 * v0 % p + p - v1 * v1 % p * u1 % p) % p;
                    let s0 = (v0 * v0 % p + p - v1 * v1 % p * u0 % p) % p;
                    if s1 == r1 && s0 == r0 {
                        a2 += 1;
                    }
                }
            }
        }
    }
    Ok(a2 + 2 * a1 + 3)
}

fn reduce_mod_quadratic(f: &[u64], u1: u64, u0: u64, p: u64) -> (u64, u64) {
    // Horner in 𝔽_p[x]/(x² + u1 x + u0): acc ← acc·x + c.
    let (mut a1, mut a0) = (0u64, 0u64);
    for &c in f.iter().rev() {
        // (a1 x + a0)·x = a1 x² + a0 x ≡ (a0 − a1 u1) x − a1 u0
        let n1 = (a0 + p - a1 * u1 % p) % p;
        let n0 = (p - a1 * u0 % p) % p;
        a1 = n1;
        a0 = (n0 + c) % p;
    }
    (a1, a0)
}

/// gcd of |J(𝔽_p)| over the given good primes; a multiple of #J(ℚ)_tors.
pub fn torsion_multiple(c: &HypCurve, primes: &[u64]) -> Result<u64> {
    if primes.is_empty() {
        return Err(Error::invalid("torsion_multiple needs at least one prime"));
    }
    let mut g = 0u64;
    for &p in primes {
        g = g.gcd(&jacobian_order(c, p)?.jacobian_order);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_over_f3() {
        let c = HypCurve::x0_91_plus();
        assert_eq!(count_points(&c, 3, 1).unwrap(), 6);
    }

    #[test]
    fn bad_primes_rejected() {
        let c = HypCurve::x0_91_plus();
        for p in [7, 13] {
            assert!(matches!(count_points(&c, p, 1), Err(Error::BadPrime(q)) if q == p));
        }
        assert!(matches!(count_points(&c, 9, 1), Err(Error::NotPrime(9))));
    }

    #[test]
    fn hyperelliptic_involution_pairs_points() {
        let c = HypCurve::new(PolyQ::from_ints(&[1, 0, 0, 0, 0, 0, 1])).unwrap();
        for p in [5, 7, 11] {
            assert_eq!(count_points(&c, p, 1).unwrap() % 2, 0);
        }
    }

    #[test]
    fn zeta_at_three() {
        let z = jacobian_order(&HypCurve::x0_91_plus(), 3).unwrap();
        assert_eq!(z.n1, 6);
        assert_eq!(z.c1, 2);
    }

    #[test]
    fn enumeration_matches_zeta() {
        let c = HypCurve::x0_91_plus();
        for p in [3, 5, 11, 17] {
            assert_eq!(jacobian_order_by_enumeration(&c, p).unwrap(), jacobian_order(&c, p).unwrap().jacobian_order, "p = {p}");
        }
    }

    #[test]
    fn torsion_multiple_contract() {
        let c = HypCurve::x0_91_plus();
        assert!(torsion_multiple(&c, &[]).is_err());
        assert_eq!(torsion_multiple(&c, &[3]).unwrap(), jacobian_order(&c, 3).unwrap().jacobian_order);
    }
}
