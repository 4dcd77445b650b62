//! Exact arithmetic in a quadratic extension ℚ(√r).
//!
//! A `QuadNum` is `x + y·√r` for rationals x, y and a fixed non-square
//! radicand r.  Purely rational values keep `y = 0` and a dummy radicand,
//! so values from different extensions can coexist as long as the
//! irrational ones agree on r (checked at run time).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat, rat_serde, Rat};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadNum {
    #[serde(with = "rat_serde")]
    pub x: Rat,
    #[serde(with = "rat_serde")]
    pub y: Rat,
    #[serde(with = "rat_serde")]
    pub rad: Rat,
}

impl QuadNum {
    pub fn from_rat(x: Rat) -> Self {
        QuadNum {
            x,
            y: Rat::zero(),
            rad: Rat::zero(),
        }
    }

    pub fn new(x: Rat, y: Rat, rad: Rat) -> Self {
        QuadNum { x, y, rad }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// The rational part, panicking if the value is irrational.
    pub fn expect_rational(&self, what: &str) -> Rat {
        assert!(self.y.is_zero(), "{what} is not rational: {self}");
        self.x.clone()
    }

    pub fn conj(&self) -> Self {
        QuadNum {
            x: self.x.clone(),
            y: -self.y.clone(),
            rad: self.rad.clone(),
        }
    }

    /// x² − r·y².
    pub fn norm(&self) -> Rat {
        &self.x * &self.x - &self.rad * &self.y * &self.y
    }

    pub fn trace(&self) -> Rat {
        rat(2) * &self.x
    }

    fn join_rad(&self, other: &Self) -> Rat {
        if self.y.is_zero() {
            other.rad.clone()
        } else {
            assert!(
                other.y.is_zero() || self.rad == other.rad,
                "mixed radicands {} and {}",
                self.rad,
                other.rad
            );
            self.rad.clone()
        }
    }
}

impl PartialEq for QuadNum {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x
            && self.y == other.y
            && (self.y.is_zero() || self.rad == other.rad)
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{} + {}·√({})", self.x, self.y, self.rad)
        }
    }
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        QuadNum {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            rad: self.join_rad(rhs),
        }
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        QuadNum {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            rad: self.join_rad(rhs),
        }
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum {
            x: -self.x.clone(),
            y: -self.y.clone(),
            rad: self.rad.clone(),
        }
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        let rad = self.join_rad(rhs);
        QuadNum {
            x: &self.x * &rhs.x + &rad * &self.y * &rhs.y,
            y: &self.x * &rhs.y + &self.y * &rhs.x,
            rad,
        }
    }
}

impl Div for &QuadNum {
    type Output = QuadNum;
    fn div(self, rhs: &QuadNum) -> QuadNum {
        assert!(!rhs.is_zero(), "division by zero QuadNum");
        let n = rhs.norm();
        let prod = self * &rhs.conj();
        QuadNum {
            x: prod.x / &n,
            y: prod.y / &n,
            rad: prod.rad,
        }
    }
}

/// Canonical ordering key used to list conjugate pairs deterministically:
/// the member with positive irrational part comes first.
pub fn positive_first(a: &QuadNum) -> bool {
    a.y.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn arithmetic_in_sqrt2() {
        let s = QuadNum::new(rat(0), rat(1), rat(2)); // √2
        let t = &s * &s;
        assert_eq!(t, QuadNum::from_rat(rat(2)));
        let u = QuadNum::new(rat(1), rat(1), rat(2)); // 1 + √2
        let inv = &QuadNum::from_rat(rat(1)) / &u;
        assert_eq!(inv, QuadNum::new(rat(-1), rat(1), rat(2)));
        assert_eq!(u.norm(), rat(-1));
        assert_eq!(u.trace(), rat(2));
    }

    #[test]
    fn mixed_rational_operands() {
        let s = QuadNum::new(ratio(1, 2), ratio(-1, 3), rat(5));
        let two = QuadNum::from_rat(rat(2));
        let sum = &s + &two;
        assert_eq!(sum, QuadNum::new(ratio(5, 2), ratio(-1, 3), rat(5)));
        let prod = &s * &two;
        assert_eq!(prod, QuadNum::new(rat(1), ratio(-2, 3), rat(5)));
    }
}
