//! Arbitrary-precision rationals and a few integer helpers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Parses `"n"` or `"n/d"` (decimal, optional sign). Non-canonical input is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::invalid(format!("malformed rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::invalid(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Exact integer square root of a non-negative perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    Some(Rational::new(exact_sqrt(q.numer())?, exact_sqrt(q.denom())?))
}

/// Squarefree kernel of a nonzero integer, keeping the sign.
///
/// Trial division runs up to `10^6`; the cofactor left over is then either 1,
/// a perfect square, or (if neither) assumed squarefree. The flag reports
/// whether the result is proven, i.e. the leftover cofactor was fully resolved.
pub fn squarefree_part(n: &BigInt) -> (BigInt, bool) {
    assert!(!n.is_zero(), "squarefree part of zero");
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut out = BigInt::from(sign);
    let mut p = 2u64;
    while p <= 1_000_000 {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return (out, true);
    }
    if exact_sqrt(&m).is_some() {
        return (out, true);
    }
    let proven = BigInt::from(p) * BigInt::from(p) > m;
    (out * m, proven)
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Least common multiple of the denominators.
pub fn denom_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn sign_of(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
