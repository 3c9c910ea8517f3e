//! Dense univariate polynomials over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::quad::QuadExtElem;
use super::rational::{big, denom_lcm, Rational};

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(big).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; convenient for bounds.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(k.into())).collect())
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at an element of a quadratic field.
    pub fn eval_quad(&self, x: &QuadExtElem) -> QuadExtElem {
        let d = x.d();
        self.coeffs
            .iter()
            .rev()
            .fold(QuadExtElem::from_rational(Rational::zero(), d), |acc, c| &(&acc * x) + &QuadExtElem::from_rational(c.clone(), d))
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &PolyQ) -> PolyQ {
        self.coeffs.iter().rev().fold(PolyQ::zero(), |acc, c| &(&acc * g) + &PolyQ::constant(c.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        let inv = d.lc().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (PolyQ::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (PolyQ::new(q), PolyQ::new(r))
    }

    pub fn rem(&self, d: &PolyQ) -> PolyQ {
        self.div_rem(d).1
    }

    /// Monic gcd (zero if both inputs vanish).
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Resultant via the Euclidean algorithm over ℚ.
    pub fn resultant(&self, other: &PolyQ) -> Rational {
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = Rational::one();
        loop {
            let (da, db) = (a.deg(), b.deg());
            if db == 0 {
                return acc * b.lc().pow(da as i32);
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return Rational::zero();
            }
            // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
            let dr = r.deg();
            if (da * db) % 2 == 1 {
                acc = -acc;
            }
            acc *= b.lc().pow((da - dr) as i32);
            a = b;
            b = r;
        }
    }

    /// Discriminant `(-1)^{n(n-1)/2} res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Rational {
        let n = self.deg();
        let r = self.resultant(&self.derivative()) / self.lc();
        if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// Splits `self = c · p` with `p` a primitive integer polynomial whose
    /// leading coefficient is positive.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let l = denom_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, l), prim)
    }

    /// Primitive integer form as a [`PolyQ`].
    pub fn primitive(&self) -> PolyQ {
        PolyQ::from_bigints(&self.primitive_part().1)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, o: &PolyQ) -> PolyQ {
        if self.is_zero() || o.is_zero() {
            return PolyQ::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        PolyQ::new(v)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, o: PolyQ) -> PolyQ {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Evaluation at either a rational or a quadratic-field point.
pub trait EvalPoint {
    type Value;
    fn eval_poly(poly: &PolyQ, at: &Self) -> Self::Value;
}

impl EvalPoint for Rational {
    type Value = Rational;
    fn eval_poly(poly: &PolyQ, at: &Self) -> Rational {
        poly.eval(at)
    }
}

impl EvalPoint for QuadExtElem {
    type Value = QuadExtElem;
    fn eval_poly(poly: &PolyQ, at: &Self) -> QuadExtElem {
        poly.eval_quad(at)
    }
}

pub fn poly_eval<T: EvalPoint>(f: &PolyQ, x: &T) -> T::Value {
    T::eval_poly(f, x)
}
