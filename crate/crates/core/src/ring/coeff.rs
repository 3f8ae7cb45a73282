//! Arbitrary-precision integer coefficients with an inline fast path.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An integer that stays in an `i64` until an operation overflows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(BigInt),
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0);
    pub const ONE: Coeff = Coeff::Small(1);

    fn from_big(b: BigInt) -> Coeff {
        match b.to_i64() {
            Some(v) => Coeff::Small(v),
            None => Coeff::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(b) => b.clone(),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(v) => Some(*v),
            Coeff::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Coeff::Small(1) | Coeff::Small(-1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Coeff::Small(v) => v.signum() as i32,
            Coeff::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(v) = a.checked_add(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() + other.to_big())
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(v) = a.checked_sub(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() - other.to_big())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(v) = a.checked_mul(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() * other.to_big())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::Big(-BigInt::from(*v)),
            },
            Coeff::Big(b) => Coeff::from_big(-b),
        }
    }

    pub fn add_assign(&mut self, other: &Coeff) {
        if let (Coeff::Small(a), Coeff::Small(b)) = (&*self, other) {
            if let Some(v) = a.checked_add(*b) {
                *self = Coeff::Small(v);
                return;
            }
        }
        *self = Coeff::from_big(self.to_big() + other.to_big());
    }

    /// Quotient when `other` divides `self` exactly, `None` otherwise.
    pub fn div_exact(&self, other: &Coeff) -> Option<Coeff> {
        if other.is_zero() {
            return None;
        }
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if *b != -1 || *a != i64::MIN {
                return if a % b == 0 { Some(Coeff::Small(a / b)) } else { None };
            }
        }
        let (q, r) = self.to_big().div_rem(&other.to_big());
        if r.is_zero() {
            Some(Coeff::from_big(q))
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Coeff {
        let mut acc = Coeff::ONE;
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<BigInt> for Coeff {
    fn from(b: BigInt) -> Self {
        Coeff::from_big(b)
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::ZERO
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::ZERO
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::ONE
    }
}

impl std::ops::Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        Coeff::add(&self, &rhs)
    }
}

impl std::ops::Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        Coeff::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Coeff::Small(i64::MAX);
        let b = a.add(&Coeff::ONE);
        assert!(matches!(b, Coeff::Big(_)));
        assert_eq!(b.sub(&Coeff::ONE), a);
        let sq = a.mul(&a);
        assert_eq!(sq.div_exact(&a), Some(a.clone()));
        assert_eq!(Coeff::Small(i64::MIN).neg().neg(), Coeff::Small(i64::MIN));
    }

    #[test]
    fn exact_division() {
        assert_eq!(Coeff::Small(12).div_exact(&Coeff::Small(-4)), Some(Coeff::Small(-3)));
        assert_eq!(Coeff::Small(7).div_exact(&Coeff::Small(2)), None);
        assert_eq!(Coeff::Small(7).div_exact(&Coeff::ZERO), None);
    }
}
