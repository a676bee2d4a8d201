//! Integer coefficients with an inline `i64` fast path.
//!
//! Values that fit in an `i64` are always stored as [`Int::Small`]; anything
//! larger is promoted to a heap [`BigInt`]. Every operation re-normalizes, so
//! structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(r) => Int::Small(r),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }

    pub fn add(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(r) = a.checked_add(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() + other.to_big())
    }

    pub fn sub(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(r) = a.checked_sub(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() - other.to_big())
    }

    pub fn mul(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(r) = a.checked_mul(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() * other.to_big())
    }

    /// Division that is known to be exact.
    pub fn div_exact(&self, other: &Int) -> Int {
        debug_assert!(!other.is_zero());
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(r) = a.checked_div(*b) {
                debug_assert_eq!(r.wrapping_mul(*b), *a);
                return Int::Small(r);
            }
        }
        let (q, r) = self.to_big().div_rem(&other.to_big());
        debug_assert!(r.is_zero());
        Int::from_big(q)
    }

    /// `Some(self / other)` if the division is exact.
    pub fn checked_div_exact(&self, other: &Int) -> Option<Int> {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if *b != 0 && *b != -1 {
                return if a % b == 0 { Some(Int::Small(a / b)) } else { None };
            }
        }
        let (q, r) = self.to_big().div_rem(&other.to_big());
        r.is_zero().then(|| Int::from_big(q))
    }

    pub fn gcd(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            let g = gcd_u64(a.unsigned_abs(), b.unsigned_abs());
            if g <= i64::MAX as u64 {
                return Int::Small(g as i64);
            }
        }
        Int::from_big(self.to_big().gcd(&other.to_big()))
    }

    pub fn cmp_abs(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&other.to_big().abs()),
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_big(v)
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        Int::add(&self, &rhs)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::ONE
    }
}

impl std::ops::Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        Int::mul(&self, &rhs)
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_on_overflow_and_demotes_back() {
        let big = Int::from(i64::MAX).add(&Int::from(1));
        assert!(matches!(big, Int::Big(_)));
        let back = big.sub(&Int::from(1));
        assert_eq!(back, Int::Small(i64::MAX));
        let sq = Int::from(i64::MIN).mul(&Int::from(-1));
        assert_eq!(sq.to_big(), -BigInt::from(i64::MIN));
        assert_eq!(Int::from(i64::MIN).neg().div_exact(&Int::from(-1)), Int::Small(i64::MIN));
    }

    #[test]
    fn gcd_and_exact_division() {
        assert_eq!(Int::from(-12).gcd(&Int::from(18)), Int::from(6));
        assert_eq!(Int::from(12).checked_div_exact(&Int::from(5)), None);
        assert_eq!(Int::from(-12).checked_div_exact(&Int::from(-4)), Some(Int::from(3)));
        assert_eq!(Int::from(7).checked_div_exact(&Int::from(-1)), Some(Int::from(-7)));
    }
}
