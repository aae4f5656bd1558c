//! Exact nonnegative rational edge costs.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

/// A nonnegative rational number kept in lowest terms.
///
/// Arithmetic is exact. Overflow of the underlying 128-bit numerator or
/// denominator panics instead of wrapping, so a returned cost is never a
/// silently rounded value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(Ratio<i128>);

impl Weight {
    pub const ZERO: Weight = Weight(Ratio::new_raw(0, 1));
    pub const ONE: Weight = Weight(Ratio::new_raw(1, 1));

    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidWeight(format!("{numerator}/0")));
        }
        Ok(Weight(Ratio::new(numerator as i128, denominator as i128)))
    }

    pub fn integer(value: u64) -> Self {
        Weight(Ratio::from_integer(value as i128))
    }

    pub fn numerator(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `|self - other|`, the only subtraction a nonnegative type can offer.
    pub fn abs_diff(self, other: Weight) -> Weight {
        if *self.0.denom() == 1 && *other.0.denom() == 1 {
            return Weight(Ratio::new_raw(
                self.0.numer().abs_diff(*other.0.numer()) as i128,
                1,
            ));
        }
        let (hi, lo) = if self >= other {
            (self, other)
        } else {
            (other, self)
        };
        Weight(
            hi.0.checked_sub(&lo.0)
                .unwrap_or_else(|| overflow("subtraction")),
        )
    }
}

#[cold]
fn overflow(op: &str) -> ! {
    panic!("exact weight {op} overflowed 128-bit rational range")
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        if self.0.denom() == rhs.0.denom() && *self.0.denom() == 1 {
            let n = i128::checked_add(*self.0.numer(), *rhs.0.numer())
                .unwrap_or_else(|| overflow("addition"));
            return Weight(Ratio::new_raw(n, 1));
        }
        Weight(
            self.0
                .checked_add(&rhs.0)
                .unwrap_or_else(|| overflow("addition")),
        )
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = *self + rhs;
    }
}

impl Mul for Weight {
    type Output = Weight;

    fn mul(self, rhs: Weight) -> Weight {
        Weight(
            self.0
                .checked_mul(&rhs.0)
                .unwrap_or_else(|| overflow("multiplication")),
        )
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl From<u64> for Weight {
    fn from(value: u64) -> Self {
        Weight::integer(value)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with nonnegative integers and `q > 0`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidWeight(s.to_string());
        let trimmed = s.trim();
        if trimmed.starts_with('-') {
            return Err(bad());
        }
        let (num, den) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (trimmed, "1"),
        };
        let num: u64 = num.parse().map_err(|_| bad())?;
        let den: u64 = den.parse().map_err(|_| bad())?;
        Weight::new(num, den).map_err(|_| bad())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let w: Weight = "6/4".parse().unwrap();
        assert_eq!(w.numerator(), 3);
        assert_eq!(w.denominator(), 2);
        assert_eq!(w.to_string(), "3/2");
        assert_eq!("7".parse::<Weight>().unwrap(), Weight::integer(7));
    }

    #[test]
    fn rejects_negative_and_zero_denominator() {
        assert!("-1".parse::<Weight>().is_err());
        assert!("1/0".parse::<Weight>().is_err());
        assert!("x".parse::<Weight>().is_err());
        assert!("1/-2".parse::<Weight>().is_err());
    }

    #[test]
    fn exact_sum_of_thirds() {
        let third: Weight = "1/3".parse().unwrap();
        assert_eq!(third + third + third, Weight::ONE);
        assert_eq!(Weight::ONE.abs_diff(third), "2/3".parse().unwrap());
        assert_eq!(third.abs_diff(Weight::ONE), "2/3".parse().unwrap());
    }
}
