//! Exact integer and half-integer quantum numbers.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::Error;

/// An integer or half-integer, stored as twice its value.
///
/// `HalfInt::from_twice(3)` is 3/2. Ordering and equality follow the
/// rational value, so all Kronecker deltas on spins are exact integer
/// comparisons.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    #[inline]
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    #[inline]
    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    #[inline]
    pub const fn twice(self) -> i32 {
        self.0
    }

    #[inline]
    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    #[inline]
    pub const fn is_half_integer(self) -> bool {
        !self.is_integer()
    }

    #[inline]
    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(self) -> Option<i32> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// True when `self - other` is an integer.
    #[inline]
    pub const fn differs_by_integer(self, other: HalfInt) -> bool {
        (self.0 - other.0) % 2 == 0
    }

    /// `(-1)^self` taken as `e^{i pi self}`, evaluated by branch.
    pub fn sign_phase(self) -> Complex64 {
        match self.0.rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    /// Values `-self, -self + 1, ..., self` in ascending order.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> + Clone {
        let top = self.0;
        (-top..=top).step_by(2).map(HalfInt)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    #[inline]
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    #[inline]
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    #[inline]
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl From<i32> for HalfInt {
    fn from(n: i32) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Accepts `"n"` or `"n/2"` with odd `n`. Decimal forms are rejected.
impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::Parse(s.to_owned());
        let t = s.trim();
        let parse_int = |x: &str| -> Result<i32, Error> {
            if x.is_empty() || !x.trim_start_matches(['-', '+']).bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            x.parse::<i32>().map_err(|_| err())
        };
        match t.split_once('/') {
            None => {
                let n = parse_int(t)?;
                n.checked_mul(2).map(HalfInt).ok_or_else(err)
            }
            Some((num, "2")) => {
                let n = parse_int(num)?;
                if n % 2 == 0 {
                    Err(err())
                } else {
                    Ok(HalfInt(n))
                }
            }
            Some(_) => Err(err()),
        }
    }
}
