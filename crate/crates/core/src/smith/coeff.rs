//! Coefficient rings for the elimination kernels.
//!
//! Kernels are written once over [`Coeff`]. The `i64` instance reports
//! overflow instead of wrapping; callers then rerun the same kernel over
//! `BigInt`, so results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Signals that a fixed-width computation left its range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_negative(&self) -> bool;
    /// `|self| < |other|`
    fn abs_lt(&self, other: &Self) -> bool;
    fn neg(&self) -> Result<Self, Overflow>;
    /// Quotient rounded toward zero.
    fn quot(&self, d: &Self) -> Result<Self, Overflow>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow>;
    fn divides_exactly(&self, other: &Self) -> bool;
}

impl Coeff for i64 {
    fn zero_value() -> Self {
        0
    }
    fn one_value() -> Self {
        1
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    #[inline]
    fn vanishes(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    #[inline]
    fn is_negative(&self) -> bool {
        *self < 0
    }
    #[inline]
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    #[inline]
    fn neg(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    #[inline]
    fn quot(&self, d: &Self) -> Result<Self, Overflow> {
        self.checked_div(*d).ok_or(Overflow)
    }
    #[inline]
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*b).and_then(|p| self.checked_sub(p)).ok_or(Overflow)
    }
    #[inline]
    fn divides_exactly(&self, other: &Self) -> bool {
        match *self {
            0 => *other == 0,
            -1 | 1 => true,
            d => other % d == 0,
        }
    }
}

impl Coeff for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn quot(&self, d: &Self) -> Result<Self, Overflow> {
        Ok(self / d)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(self - q * b)
    }
    fn divides_exactly(&self, other: &Self) -> bool {
        if Zero::is_zero(self) {
            Zero::is_zero(other)
        } else {
            other.is_multiple_of(self)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i64_reports_overflow() {
        assert_eq!(i64::MIN.neg(), Err(Overflow));
        assert_eq!(i64::MIN.quot(&-1), Err(Overflow));
        assert_eq!(0i64.sub_mul(&i64::MAX, &2), Err(Overflow));
        assert_eq!(7i64.sub_mul(&2, &3), Ok(1));
    }

    #[test]
    fn division_helpers_agree() {
        for a in -12i64..=12 {
            for d in [-5i64, -2, -1, 1, 3, 4] {
                let big = BigInt::from(a);
                let bd = BigInt::from(d);
                assert_eq!(a.quot(&d).unwrap().to_bigint(), big.quot(&bd).unwrap());
                assert_eq!(d.divides_exactly(&a), bd.divides_exactly(&big));
            }
            assert_eq!(0i64.divides_exactly(&a), a == 0);
        }
    }
}
