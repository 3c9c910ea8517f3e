//! Integer polynomial helpers used by the factorization engine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn trim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

pub fn deg(f: &[BigInt]) -> usize {
    f.len().saturating_sub(1)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    trim(v)
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|k| a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z)).collect())
}

pub fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    trim(a.iter().map(|x| x * c).collect())
}

/// Exact division over ℤ; `None` if `d` does not divide `f` in ℤ[x].
pub fn div_exact(f: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    let dd = deg(d);
    let lc = d.last()?;
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < d.len() {
        return None;
    }
    let mut r: Vec<BigInt> = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - dd];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dd].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (i, dc) in d.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then(|| trim(q))
}

pub fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(f: &[BigInt]) -> ZPoly {
    let mut g = content(f);
    if g.is_zero() {
        return Vec::new();
    }
    if f.last().unwrap().is_negative() {
        g = -g;
    }
    f.iter().map(|c| c / &g).collect()
}

/// Symmetric residues modulo `m`: each coefficient in `(-m/2, m/2]`.
pub fn symmetric_mod(f: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub fn reduce_mod(f: &[BigInt], m: &BigInt) -> ZPoly {
    trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

/// Integer square root ceiling of the squared 2-norm.
pub fn norm2_ceil(f: &[BigInt]) -> BigInt {
    let s: BigInt = f.iter().map(|c| c * c).sum();
    let r = num_integer::Roots::sqrt(&s);
    if &r * &r == s {
        r
    } else {
        r + BigInt::one()
    }
}

/// Polynomial arithmetic modulo `(m, g)` with `g` monic, needed for Hensel steps.
pub fn div_rem_monic_mod(f: &[BigInt], g: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let dg = deg(g);
    debug_assert!(g.last().is_some_and(One::is_one));
    let mut r = reduce_mod(f, m);
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for k in (0..q.len()).rev() {
        let c = r[k + dg].clone();
        if !c.is_zero() {
            for (i, gc) in g.iter().enumerate() {
                r[k + i] = (&r[k + i] - &c * gc).mod_floor(m);
            }
        }
        q[k] = c;
    }
    r.truncate(dg);
    (trim(q), trim(r))
}

pub fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|k| (a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z)).mod_floor(m)).collect())
}

pub fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce_mod(&mul(a, b), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn exact_division() {
        let f = mul(&z(&[1, 1]), &z(&[-3, 0, 2]));
        assert_eq!(div_exact(&f, &z(&[-3, 0, 2])), Some(z(&[1, 1])));
        assert_eq!(div_exact(&f, &z(&[1, 2])), None);
        assert_eq!(primitive(&z(&[4, -6, -2])), z(&[-2, 3, 1]));
        assert_eq!(symmetric_mod(&z(&[4, 5, 9]), &BigInt::from(9)), z(&[4, -4]));
    }
}
