//! Exact half- and quarter-integers.
//!
//! Theta indices j live in (1/2)Z and alternate-theta degrees in (1/4)Z.
//! Both are stored as scaled integers so that index arithmetic, parity
//! queries and congruences are exact; no floating-point index arithmetic
//! happens anywhere in the crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of (1/2)Z, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// Value n (an integer).
    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Value t/2.
    pub fn from_twice(t: i64) -> Self {
        HalfInt { twice: t }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    /// True when the value is in Z.
    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, if the value is in Z.
    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// (-1)^v for integer v; panics on strict half-integers.
    pub fn parity_sign(self) -> f64 {
        let n = self.as_integer().expect("parity of a strict half-integer");
        if n.rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> Self {
        HalfInt { twice: -self.twice }
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> Self {
        HalfInt { twice: self.twice * rhs }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// An element of (1/4)Z, stored as four times its value.
///
/// Degrees of the alternate theta functions live here (Eq-wise they are
/// m + 1/2 with integral m on the osp side, but the appendix allows any
/// positive quarter-integer).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuarterInt {
    times4: i64,
}

impl QuarterInt {
    pub fn from_int(n: i64) -> Self {
        QuarterInt { times4: 4 * n }
    }

    pub fn from_times4(t: i64) -> Self {
        QuarterInt { times4: t }
    }

    pub fn from_half(h: HalfInt) -> Self {
        QuarterInt { times4: 2 * h.twice() }
    }

    /// m + 1/2 for integer m: the degree of the osp-side alternate thetas.
    pub fn int_plus_half(m: i64) -> Self {
        QuarterInt { times4: 4 * m + 2 }
    }

    pub fn times4(self) -> i64 {
        self.times4
    }

    pub fn to_f64(self) -> f64 {
        self.times4 as f64 / 4.0
    }

    pub fn is_positive(self) -> bool {
        self.times4 > 0
    }
}

impl fmt::Display for QuarterInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.times4 % 4 == 0 {
            write!(f, "{}", self.times4 / 4)
        } else if self.times4 % 2 == 0 {
            write!(f, "{}/2", self.times4 / 2)
        } else {
            write!(f, "{}/4", self.times4)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
        assert_eq!(QuarterInt::from_times4(5).to_string(), "5/4");
        assert_eq!(QuarterInt::int_plus_half(1).to_string(), "3/2");
    }

    #[test]
    fn parity_queries_total() {
        assert!(HalfInt::from_int(7).is_integer());
        assert!(!HalfInt::from_twice(7).is_integer());
        assert_eq!(HalfInt::from_int(-3).parity_sign(), -1.0);
        assert_eq!(HalfInt::from_int(0).parity_sign(), 1.0);
    }

    proptest! {
        #[test]
        fn ring_ops_exact(a in -1000i64..1000, b in -1000i64..1000) {
            let x = HalfInt::from_twice(a);
            let y = HalfInt::from_twice(b);
            prop_assert_eq!((x + y) - y, x);
            prop_assert_eq!(-(-x), x);
            prop_assert_eq!((x * 2).to_f64(), 2.0 * x.to_f64());
        }
    }
}
