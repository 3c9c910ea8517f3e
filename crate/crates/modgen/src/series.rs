//! Truncated Laurent series in q with integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `Σ coeffs[k]·q^(val + k)`, known exactly for exponents below `prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    pub val: i64,
    pub prec: i64,
    pub coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn zero(prec: i64) -> Self {
        Laurent { val: prec, prec, coeffs: Vec::new() }
    }

    pub fn one(prec: i64) -> Self {
        Self::from_coeffs(0, prec, vec![BigInt::one()])
    }

    pub fn from_coeffs(val: i64, prec: i64, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.truncate((prec - val).max(0) as usize);
        let mut s = Laurent { val, prec, coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => {
                self.coeffs.drain(..k);
                self.val += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.val = self.prec;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Coefficient of qᵉ; panics when `e` is beyond the known precision.
    pub fn coeff(&self, e: i64) -> BigInt {
        assert!(e < self.prec, "coefficient q^{e} beyond precision {}", self.prec);
        if e < self.val {
            return BigInt::zero();
        }
        self.coeffs.get((e - self.val) as usize).cloned().unwrap_or_default()
    }

    /// One past the last stored exponent.
    fn end(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let prec = self.prec.min(other.prec);
        if self.is_zero() && other.is_zero() {
            return Laurent::zero(prec);
        }
        let val = self.val.min(other.val).min(prec);
        let end = [self, other].iter().filter(|s| !s.is_zero()).map(|s| s.end()).max().unwrap().min(prec);
        let mut cs = vec![BigInt::zero(); (end - val).max(0) as usize];
        for s in [self, other] {
            for (k, c) in s.coeffs.iter().enumerate() {
                let e = s.val + k as i64;
                if e < end {
                    cs[(e - val) as usize] += c;
                }
            }
        }
        Laurent::from_coeffs(val, prec, cs)
    }

    pub fn neg(&self) -> Laurent {
        Laurent { val: self.val, prec: self.prec, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Laurent {
        Laurent::from_coeffs(self.val, self.prec, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division of every coefficient; panics if one is not divisible.
    pub fn div_exact(&self, c: &BigInt) -> Laurent {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| {
                let (q, r) = x.div_rem(c);
                assert!(r.is_zero(), "series coefficient {x} not divisible by {c}");
                q
            })
            .collect();
        Laurent { val: self.val, prec: self.prec, coeffs }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        // Known exactly up to the smaller of prec(a) + val(b), prec(b) + val(a).
        let prec = (self.prec + other.val).min(other.prec + self.val);
        if self.is_zero() || other.is_zero() {
            return Laurent::zero(prec);
        }
        let val = (self.val + other.val).min(prec);
        let end = (self.end() + other.end() - 1).min(prec);
        let len = (end - val).max(0) as usize;
        let mut cs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (k, b) in other.coeffs.iter().enumerate().take(len - i) {
                cs[i + k] += a * b;
            }
        }
        Laurent::from_coeffs(val, prec, cs)
    }

    /// Substitutes q ↦ qᵐ.
    pub fn inflate(&self, m: i64) -> Laurent {
        let mut cs = vec![BigInt::zero(); ((self.coeffs.len().max(1) - 1) as i64 * m + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            cs[k * m as usize] = c.clone();
        }
        Laurent::from_coeffs(self.val * m, self.prec * m, cs)
    }

    /// Keeps the exponents divisible by `m` and divides them by `m`.
    pub fn deflate(&self, m: i64) -> Laurent {
        let val = Integer::div_ceil(&self.val, &m);
        let prec = Integer::div_ceil(&self.prec, &m);
        let cs = (val..prec).map(|e| self.coeff(e * m)).collect();
        Laurent::from_coeffs(val, prec, cs)
    }
}

/// σ₃(n) for n ≥ 1.
fn sigma3(n: u64) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(3)).sum()
}

/// The q-expansion of j = E₄³/Δ, exact below q^prec.
pub fn j_series(prec: i64) -> Laurent {
    assert!(prec >= 0);
    // j·q = E₄³ / ∏(1 − qⁿ)²⁴, a power series known below q^(prec + 1).
    let n = (prec + 1) as usize;
    let mut e4 = vec![BigInt::zero(); n];
    e4[0] = BigInt::one();
    for (k, c) in e4.iter_mut().enumerate().skip(1) {
        *c = sigma3(k as u64) * 240;
    }
    let e4 = Laurent::from_coeffs(0, n as i64, e4);
    let num = e4.mul(&e4).mul(&e4);
    let mut cs: Vec<BigInt> = (0..n as i64).map(|e| num.coeff(e)).collect();
    // Divide by (1 − qᵏ) twenty-four times for each k: f/(1 − qᵏ) has
    // coefficients g[i] = f[i] + g[i − k].
    for k in 1..n {
        for _ in 0..24 {
            for i in k..n {
                let (lo, hi) = cs.split_at_mut(i);
                hi[0] += &lo[i - k];
            }
        }
    }
    let num = Laurent::from_coeffs(0, n as i64, cs);
    Laurent { val: num.val - 1, prec: num.prec - 1, coeffs: num.coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_coefficients() {
        // 1/q + 744 + 196884q + 21493760q² + 864299970q³.
        let j = j_series(4);
        let want = [1i64, 744, 196884, 21493760, 864299970];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(j.coeff(k as i64 - 1), BigInt::from(*w));
        }
    }

    #[test]
    fn precision_tracking() {
        let j = j_series(10);
        let j2 = j.mul(&j);
        assert_eq!(j2.val, -2);
        assert_eq!(j2.prec, 9);
        assert_eq!(j2.coeff(-2), BigInt::one());
        assert_eq!(j2.coeff(-1), BigInt::from(1488));
    }

    #[test]
    fn inflate_deflate() {
        let j = j_series(6);
        assert_eq!(j.inflate(3).deflate(3), j);
    }
}
