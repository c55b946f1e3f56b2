//! Half-integral quantum numbers stored exactly as doubled integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A quantum number that may be integral or half-odd-integral.
///
/// The value stored is *twice* the logical value, so `HalfInt::from_twice(3)`
/// is the fraction `3/2`. All arithmetic is integer arithmetic on the doubled
/// value and therefore exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// Build from twice the logical value.
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    /// Build from an integer value.
    pub const fn from_int(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Twice the logical value.
    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub const fn is_integral(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_half_odd(self) -> bool {
        self.twice % 2 != 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub const fn is_zero(self) -> bool {
        self.twice == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// The integer value, when integral.
    pub fn integer_value(self) -> Option<i32> {
        if self.is_integral() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    /// The phase `(-1)^k` for an integral exponent `k = self`.
    ///
    /// Panics if `self` is half-odd: a non-integral exponent in a phase is a
    /// programming error, not a sign to guess at.
    pub fn phase_sign(self) -> i32 {
        let k = self
            .integer_value()
            .unwrap_or_else(|| panic!("phase exponent {self} is not integral"));
        if k.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfInt({self})")
    }
}

/// Failure to parse a half-integer from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseHalfIntError {
    input: String,
}

impl fmt::Display for ParseHalfIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "`{}` is not a half-integer (expected e.g. \"2\", \"-3/2\" or \"1.5\")",
            self.input
        )
    }
}

impl std::error::Error for ParseHalfIntError {}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `"k"`, `"k/2"`, and decimals on the 0.5 grid such as `"1.5"`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseHalfIntError { input: s.to_owned() };
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().map_err(|_| err())?;
            let den: i32 = den.trim().parse().map_err(|_| err())?;
            return match den {
                1 => Ok(HalfInt::from_int(num)),
                2 => Ok(HalfInt::from_twice(num)),
                _ => Err(err()),
            };
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let negative = int_part.trim_start().starts_with('-');
            let whole: i32 = if int_part == "-" || int_part.is_empty() {
                0
            } else {
                int_part.parse().map_err(|_| err())?
            };
            let twice_frac = match frac_part.trim_end_matches('0') {
                "" => 0,
                "5" => 1,
                _ => return Err(err()),
            };
            let twice = 2 * whole + if negative { -twice_frac } else { twice_frac };
            return Ok(HalfInt::from_twice(twice));
        }
        let whole: i32 = s.parse().map_err(|_| err())?;
        Ok(HalfInt::from_int(whole))
    }
}

/// True when `m` belongs to the multiplet of `j`: `|m| <= j` and `j - m` integral.
pub fn multiplet_contains(j: HalfInt, m: HalfInt) -> bool {
    m.abs() <= j && (j - m).is_integral()
}

/// The projections `-j, -j+1, ..., +j` in ascending order.
pub fn projections(j: HalfInt) -> Result<Vec<HalfInt>> {
    if j.is_negative() {
        return Err(Error::NegativeAngularMomentum { name: "j", value: j });
    }
    Ok((-j.twice()..=j.twice())
        .step_by(2)
        .map(HalfInt::from_twice)
        .collect())
}

/// Triangle rule: `|j1 - j2| <= j3 <= j1 + j2` with integral perimeter.
pub fn triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<bool> {
    for (name, j) in [("j1", j1), ("j2", j2), ("j3", j3)] {
        if j.is_negative() {
            return Err(Error::NegativeAngularMomentum { name, value: j });
        }
    }
    let perimeter_integral = (j1 + j2 + j3).is_integral();
    Ok(perimeter_integral && (j1 - j2).abs() <= j3 && j3 <= j1 + j2)
}
