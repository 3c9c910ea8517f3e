//! 2×2 matrices over ℤ/mℤ.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported modulus; keeps element codes inside `u32`.
pub const MAX_MODULUS: u32 = 255;

/// A 2×2 matrix `[[a, b], [c, d]]` with entries reduced into `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat {
    pub m: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

fn red(x: i64, m: u32) -> u32 {
    x.rem_euclid(m as i64) as u32
}

impl Mat {
    pub fn new(m: u32, a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat { m, a: red(a, m), b: red(b, m), c: red(c, m), d: red(d, m) }
    }

    pub fn identity(m: u32) -> Self {
        Mat { m, a: 1 % m, b: 0, c: 0, d: 1 % m }
    }

    pub fn scalar(m: u32, l: i64) -> Self {
        Self::new(m, l, 0, 0, l)
    }

    pub fn diag(m: u32, x: i64, y: i64) -> Self {
        Self::new(m, x, 0, 0, y)
    }

    /// Dense code `a + m(b + m(c + m d))`, the index used by group bitsets.
    pub fn code(&self) -> u32 {
        let m = self.m;
        self.a + m * (self.b + m * (self.c + m * self.d))
    }

    pub fn from_code(m: u32, mut code: u32) -> Self {
        let a = code % m;
        code /= m;
        let b = code % m;
        code /= m;
        let c = code % m;
        Mat { m, a, b, c, d: code / m }
    }

    pub fn det(&self) -> u32 {
        let m = self.m as u64;
        let ad = self.a as u64 * self.d as u64 % m;
        let bc = self.b as u64 * self.c as u64 % m;
        ((ad + m - bc) % m) as u32
    }

    pub fn is_invertible(&self) -> bool {
        gcd(self.det(), self.m) == 1
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        debug_assert_eq!(self.m, o.m);
        let m = self.m;
        let f = |x: u32, y: u32, z: u32, w: u32| (x * y + z * w) % m;
        Mat {
            m,
            a: f(self.a, o.a, self.b, o.c),
            b: f(self.a, o.b, self.b, o.d),
            c: f(self.c, o.a, self.d, o.c),
            d: f(self.c, o.b, self.d, o.d),
        }
    }

    /// Inverse; panics on a non-invertible matrix.
    pub fn inv(&self) -> Mat {
        let m = self.m;
        let di = inv_u32(self.det(), m).expect("matrix is not invertible");
        let neg = |x: u32| (m - x) % m;
        Mat { m, a: self.d * di % m, b: neg(self.b) * di % m, c: neg(self.c) * di % m, d: self.a * di % m }
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = *self;
        let mut acc = Mat::identity(self.m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn conj_by(&self, g: &Mat) -> Mat {
        g.mul(self).mul(&g.inv())
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.m)
    }

    pub fn is_scalar(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d
    }

    pub fn reduce(&self, m2: u32) -> Mat {
        Mat { m: m2, a: self.a % m2, b: self.b % m2, c: self.c % m2, d: self.d % m2 }
    }

    pub fn apply(&self, v: (u32, u32)) -> (u32, u32) {
        let m = self.m;
        ((self.a * v.0 + self.b * v.1) % m, (self.c * v.0 + self.d * v.1) % m)
    }

    pub fn entries(&self) -> [[u32; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    /// Order of the matrix given a multiple `n` of it with known factorization.
    pub fn order_dividing(&self, n: u64, factors: &[(u64, u32)]) -> u64 {
        let mut ord = n;
        for &(q, e) in factors {
            for _ in 0..e {
                if self.pow(ord / q).is_identity() {
                    ord /= q;
                } else {
                    break;
                }
            }
        }
        ord
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]] mod {}", self.a, self.b, self.c, self.d, self.m)
    }
}

pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn inv_u32(a: u32, m: u32) -> Option<u32> {
    crate::exact::inv_mod(a as u64, m as u64).map(|x| x as u32)
}

/// `|GL₂(ℤ/mℤ)| = m⁴ ∏_{p|m} (1 − 1/p)(1 − 1/p²)`.
pub fn gl2_order(m: u32) -> u64 {
    let mut n = (m as u64).pow(4);
    for (p, _) in crate::exact::factor_small(m as u64) {
        n = n / p * (p - 1);
        n = n / (p * p) * (p * p - 1);
    }
    n
}

/// `φ(m)`.
pub fn unit_count(m: u32) -> u32 {
    (1..m).filter(|&x| gcd(x, m) == 1).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        let g = Mat::new(49, 3, -1, 7, 48);
        assert_eq!(Mat::from_code(49, g.code()), g);
    }

    #[test]
    fn inverse_and_orders() {
        let g = Mat::new(7, 1, 1, 0, 1);
        assert!(g.mul(&g.inv()).is_identity());
        assert_eq!(g.order_dividing(2016, &crate::exact::factor_small(2016)), 7);
        assert_eq!(gl2_order(7), 2016);
        assert_eq!(gl2_order(9), 3888);
        assert_eq!(gl2_order(49), 4_840_416);
        assert!(!Mat::new(9, 3, 0, 0, 1).is_invertible());
    }
}
