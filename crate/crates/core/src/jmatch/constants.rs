//! The j-invariants of non-CM curves over ℚ with rational 37-, 17- and
//! 11-isogenies.

use num_bigint::BigInt;

use crate::exact::Rational;

fn r(n: BigInt, d: BigInt) -> Rational {
    Rational::new(n, d)
}

fn i(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `{−7·11³, −7·137³·2083³}`.
pub fn j37() -> [Rational; 2] {
    [r(i(-7) * i(11).pow(3), i(1)), r(i(-7) * i(137).pow(3) * i(2083).pow(3), i(1))]
}

/// `{−17·373³/2¹⁷, −17²·101³/2}`.
pub fn j17() -> [Rational; 2] {
    [r(i(-17) * i(373).pow(3), i(2).pow(17)), r(-i(17).pow(2) * i(101).pow(3), i(2))]
}

/// `{−11·131³, −11²}`.
pub fn j11() -> [Rational; 2] {
    [r(i(-11) * i(131).pow(3), i(1)), r(-i(11).pow(2), i(1))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(j37()[0], Rational::from_integer(i(-9317)));
        assert_eq!(j11()[0], Rational::from_integer(i(-24729001)));
        assert_eq!(j11()[1], Rational::from_integer(i(-121)));
        assert_eq!(j17()[1], r(i(-297756989), i(2)));
    }
}
