//! Elements of a quadratic field ℚ(√d).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{squarefree_part, Rational};
use crate::error::{Error, Result};

/// `a + b√d` with `d` squarefree and different from 0 and 1.
///
/// Arithmetic between elements with different `d` is a programming error and
/// panics; callers that accept user data go through [`QuadExtElem::new`] and
/// check fields up front.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    a: Rational,
    b: Rational,
    d: i64,
}

impl QuadExtElem {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::invalid(format!("d = {d} does not define a quadratic field")));
        }
        let (k, _) = squarefree_part(&BigInt::from(d));
        if k != BigInt::from(d) {
            return Err(Error::invalid(format!("d = {d} is not squarefree")));
        }
        Ok(QuadExtElem { a, b, d })
    }

    pub fn from_rational(a: Rational, d: i64) -> Self {
        QuadExtElem { a, b: Rational::zero(), d }
    }

    /// The element `√d`.
    pub fn sqrt_d(d: i64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExtElem { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// `a² − d b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.into()) * &self.b * &self.b
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadExtElem { a: &self.a / &n, b: -&self.b / &n, d: self.d })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QuadExtElem { a: &self.a * q, b: &self.b * q, d: self.d }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.d, other.d, "mixed quadratic fields");
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl Add for &QuadExtElem {
    type Output = QuadExtElem;
    fn add(self, o: &QuadExtElem) -> QuadExtElem {
        self.check(o);
        QuadExtElem { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d }
    }
}

impl Sub for &QuadExtElem {
    type Output = QuadExtElem;
    fn sub(self, o: &QuadExtElem) -> QuadExtElem {
        self.check(o);
        QuadExtElem { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d }
    }
}

impl Mul for &QuadExtElem {
    type Output = QuadExtElem;
    fn mul(self, o: &QuadExtElem) -> QuadExtElem {
        self.check(o);
        let d = Rational::from_integer(self.d.into());
        QuadExtElem { a: &self.a * &o.a + d * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a, d: self.d }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &QuadExtElem {
    type Output = QuadExtElem;
    fn div(self, o: &QuadExtElem) -> QuadExtElem {
        self * &o.inv().expect("division by zero in quadratic field")
    }
}

impl Neg for &QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> QuadExtElem {
        QuadExtElem { a: -&self.a, b: -&self.b, d: self.d }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QuadExtElem {
            type Output = QuadExtElem;
            fn $m(self, o: QuadExtElem) -> QuadExtElem {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> QuadExtElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use proptest::prelude::*;

    fn q(a: (i64, i64), b: (i64, i64), d: i64) -> QuadExtElem {
        QuadExtElem::new(rat(a.0, a.1), rat(b.0, b.1), d).unwrap()
    }

    #[test]
    fn rejects_bad_d() {
        assert!(QuadExtElem::sqrt_d(0).is_err());
        assert!(QuadExtElem::sqrt_d(1).is_err());
        assert!(QuadExtElem::sqrt_d(12).is_err());
        assert!(QuadExtElem::sqrt_d(-1).is_ok());
    }

    #[test]
    fn sqrt_squares_to_d() {
        let s = QuadExtElem::sqrt_d(13).unwrap();
        assert_eq!(&s * &s, QuadExtElem::from_rational(rat(13, 1), 13));
        let x = q((17, 18), (5, 18), 13);
        assert_eq!(&x * &x.inv().unwrap(), QuadExtElem::from_rational(rat(1, 1), 13));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn mixed_fields_panic() {
        let _ = &QuadExtElem::sqrt_d(2).unwrap() + &QuadExtElem::sqrt_d(3).unwrap();
    }

    fn elem(d: i64) -> impl Strategy<Value = QuadExtElem> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(move |(a, b, c, e)| q((a, b), (c, e), d))
    }

    fn triple() -> impl Strategy<Value = (QuadExtElem, QuadExtElem, QuadExtElem)> {
        prop::sample::select(vec![-7i64, -1, 2, 13]).prop_flat_map(|d| (elem(d), elem(d), elem(d)))
    }

    proptest! {
        #[test]
        fn ring_laws((x, y, z) in triple()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }
    }
}
