//! Exact arithmetic for coupling coefficients.
//!
//! Two representations are provided: [`ExactRadical`] stores a signed square
//! root of a reduced rational, which is the closed form every Wigner coupling
//! coefficient takes, and [`FactorialVector`] stores a positive rational as a
//! prime-exponent vector so that ratios of factorials never leave the exact
//! domain.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest factorial argument supported by the prime table.
pub const MAX_FACTORIAL: u32 = 200;

/// Primes up to [`MAX_FACTORIAL`], built once.
pub(crate) fn primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = MAX_FACTORIAL as usize;
        let mut sieve = vec![true; limit + 1];
        let mut out = Vec::new();
        for p in 2..=limit {
            if sieve[p] {
                out.push(p as u32);
                for multiple in (p * p..=limit).step_by(p) {
                    sieve[multiple] = false;
                }
            }
        }
        out
    })
}

/// A positive rational stored as a map prime -> signed exponent.
///
/// Multiplication and division are exponent bookkeeping, exact at any
/// magnitude; the value only becomes a big integer pair on demand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorialVector {
    exponents: BTreeMap<u32, i64>,
}

impl FactorialVector {
    pub fn one() -> Self {
        FactorialVector::default()
    }

    /// The factorial `n!` for `n <= MAX_FACTORIAL`, via Legendre's formula.
    pub fn factorial(n: u32) -> Self {
        assert!(
            n <= MAX_FACTORIAL,
            "factorial({n}) exceeds the prime table (max {MAX_FACTORIAL})"
        );
        let mut exponents = BTreeMap::new();
        for &p in primes() {
            if p > n {
                break;
            }
            let mut e = 0i64;
            let mut power = p as u64;
            while power <= n as u64 {
                e += (n as u64 / power) as i64;
                power *= p as u64;
            }
            exponents.insert(p, e);
        }
        FactorialVector { exponents }
    }

    fn merge(&mut self, other: &FactorialVector, sign: i64) {
        for (&p, &e) in &other.exponents {
            let entry = self.exponents.entry(p).or_insert(0);
            *entry += sign * e;
            if *entry == 0 {
                self.exponents.remove(&p);
            }
        }
    }

    pub fn mul_factorial(mut self, n: u32) -> Self {
        self.merge(&FactorialVector::factorial(n), 1);
        self
    }

    pub fn div_factorial(mut self, n: u32) -> Self {
        self.merge(&FactorialVector::factorial(n), -1);
        self
    }

    /// Multiply by a small positive integer (factored over the prime table).
    pub fn mul_int(mut self, mut k: u64) -> Self {
        assert!(k > 0, "FactorialVector holds positive rationals only");
        for &p in primes() {
            let p = p as u64;
            while k.is_multiple_of(p) {
                k /= p;
                let entry = self.exponents.entry(p as u32).or_insert(0);
                *entry += 1;
                if *entry == 0 {
                    self.exponents.remove(&(p as u32));
                }
            }
            if k == 1 {
                break;
            }
        }
        assert!(k == 1, "integer has a prime factor beyond the table");
        self
    }

    /// The value as a coprime `(numerator, denominator)` pair.
    pub fn to_fraction(&self) -> (BigUint, BigUint) {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&p, &e) in &self.exponents {
            let base = BigUint::from(p);
            if e > 0 {
                num *= base.pow(e as u32);
            } else {
                den *= base.pow((-e) as u32);
            }
        }
        (num, den)
    }

    pub fn to_f64(&self) -> f64 {
        let (num, den) = self.to_fraction();
        big_ratio_to_f64(&num, &den)
    }
}

fn big_ln(x: &BigUint) -> f64 {
    debug_assert!(!x.is_zero());
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().expect("small BigUint").ln();
    }
    let shift = bits - 52;
    let mantissa = (x >> shift).to_f64().expect("52-bit mantissa");
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `num/den` in double precision; falls back to logarithms when the exact
/// conversion would overflow.
fn big_ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    const F64_MAX_EXACT_BITS: u64 = 1023;
    if num.bits() <= F64_MAX_EXACT_BITS && den.bits() <= F64_MAX_EXACT_BITS {
        num.to_f64().expect("in range") / den.to_f64().expect("in range")
    } else {
        (big_ln(num) - big_ln(den)).exp()
    }
}

/// Split `x = root^2 * core` with `core` square-free.
///
/// Trial division runs over the prime table; any remaining cofactor is tested
/// for being a perfect square and otherwise kept in the core. Inputs produced
/// by coupling-coefficient arithmetic always factor over the table.
pub(crate) fn square_free_split(x: &BigUint) -> (BigUint, BigUint) {
    let mut rest = x.clone();
    let mut root = BigUint::one();
    let mut core = BigUint::one();
    if rest.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    for &p in primes() {
        let p = BigUint::from(p);
        if &p * &p > rest {
            break;
        }
        let mut e = 0u64;
        loop {
            let (q, r) = rest.div_rem(&p);
            if r.is_zero() {
                rest = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            root *= p.pow((e / 2) as u32);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        if rest.is_one() {
            break;
        }
    }
    if !rest.is_one() {
        let s = rest.sqrt();
        if &s * &s == rest {
            root *= s;
        } else {
            core *= rest;
        }
    }
    (root, core)
}

/// Express `sqrt(num/den)` as `coefficient * sqrt(core)` with `core` a
/// square-free positive integer: `sqrt(p/q) = (rp*g/(rq*sq)) * sqrt(core)`.
pub(crate) fn radical_coeff_core(num: &BigUint, den: &BigUint) -> (BigRational, BigUint) {
    let (rp, sp) = square_free_split(num);
    let (rq, sq) = square_free_split(den);
    let g = sp.gcd(&sq);
    let core = (&sp / &g) * (&sq / &g);
    let coeff = BigRational::new(
        BigInt::from(rp * g),
        BigInt::from(rq * sq),
    );
    (coeff, core)
}

/// A signed square root of a rational: `sign * sqrt(num/den)`.
///
/// `num/den` is kept in lowest terms with `den >= 1`, and `sign == 0` exactly
/// when `num == 0`. Two radicals are equal iff their reduced forms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactRadical {
    sign: i8,
    num: BigUint,
    den: BigUint,
}

impl ExactRadical {
    pub fn zero() -> Self {
        ExactRadical { sign: 0, num: BigUint::zero(), den: BigUint::one() }
    }

    pub fn one() -> Self {
        ExactRadical { sign: 1, num: BigUint::one(), den: BigUint::one() }
    }

    /// `sign * sqrt(num/den)`, reduced.
    pub fn from_sqrt_ratio(sign: i32, num: BigUint, den: BigUint) -> Self {
        assert!(!den.is_zero(), "radical denominator must be positive");
        if sign == 0 || num.is_zero() {
            return ExactRadical::zero();
        }
        let g = num.gcd(&den);
        ExactRadical {
            sign: if sign > 0 { 1 } else { -1 },
            num: num / &g,
            den: den / g,
        }
    }

    /// Convenience form of [`ExactRadical::from_sqrt_ratio`] for small values.
    pub fn sqrt_fraction(sign: i32, num: u64, den: u64) -> Self {
        ExactRadical::from_sqrt_ratio(sign, BigUint::from(num), BigUint::from(den))
    }

    /// The rational `value`, embedded as `sign(value) * sqrt(value^2)`.
    pub fn from_rational(value: &BigRational) -> Self {
        let sign = if value.is_zero() {
            0
        } else if value.is_negative() {
            -1
        } else {
            1
        };
        let num = value.numer().magnitude();
        let den = value.denom().magnitude();
        ExactRadical::from_sqrt_ratio(sign, num * num, den * den)
    }

    pub fn from_integer(value: i64) -> Self {
        let mag = BigUint::from(value.unsigned_abs());
        ExactRadical::from_sqrt_ratio(value.signum() as i32, &mag * &mag, BigUint::one())
    }

    pub fn sign(&self) -> i32 {
        self.sign as i32
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The exact square `num/den` (a reduced nonnegative rational).
    pub fn squared(&self) -> (BigUint, BigUint) {
        (self.num.clone(), self.den.clone())
    }

    /// The square with the sign of the radical attached.
    pub fn signed_square(&self) -> BigRational {
        let mag = BigRational::new(BigInt::from(self.num.clone()), BigInt::from(self.den.clone()));
        match self.sign {
            0 => BigRational::zero(),
            1 => mag,
            _ => -mag,
        }
    }

    pub fn negate(&self) -> Self {
        ExactRadical { sign: -self.sign, num: self.num.clone(), den: self.den.clone() }
    }

    pub fn scale_sign(&self, sign: i32) -> Self {
        match sign.signum() {
            0 => ExactRadical::zero(),
            1 => self.clone(),
            _ => self.negate(),
        }
    }

    /// Double precision value of `sign * sqrt(num/den)`.
    ///
    /// Exact-fraction conversion is used while both parts fit in a double;
    /// beyond that the value goes through logarithms (relative error below
    /// 1e-14 for anything the coupling formulas produce).
    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        self.sign as f64 * big_ratio_to_f64(&self.num, &self.den).sqrt()
    }
}

impl std::ops::Mul for &ExactRadical {
    type Output = ExactRadical;
    fn mul(self, rhs: &ExactRadical) -> ExactRadical {
        ExactRadical::from_sqrt_ratio(
            self.sign as i32 * rhs.sign as i32,
            &self.num * &rhs.num,
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Mul for ExactRadical {
    type Output = ExactRadical;
    fn mul(self, rhs: ExactRadical) -> ExactRadical {
        &self * &rhs
    }
}

impl fmt::Display for ExactRadical {
    /// Renders `-sqrt(1/3)`, `sqrt(2)`, or the plain rational when the
    /// radicand is a perfect square (`1`, `-1/2`, ...).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        let sn = self.num.sqrt();
        let sd = self.den.sqrt();
        if &sn * &sn == self.num && &sd * &sd == self.den {
            if sd.is_one() {
                write!(f, "{sign}{sn}")
            } else {
                write!(f, "{sign}{sn}/{sd}")
            }
        } else if self.den.is_one() {
            write!(f, "{sign}sqrt({})", self.num)
        } else {
            write!(f, "{sign}sqrt({}/{})", self.num, self.den)
        }
    }
}

/// Exact sum of radicals that share one square-free core.
///
/// Terms are reduced to `coefficient * sqrt(core)`; the coefficients add as
/// rationals. Mixing distinct cores is a domain error — the coupling sums
/// this exists for never produce one.
pub fn sum_radicals_common_core(terms: &[ExactRadical]) -> Result<ExactRadical> {
    let mut common_core: Option<BigUint> = None;
    let mut total = BigRational::zero();
    for term in terms {
        if term.is_zero() {
            continue;
        }
        let (coeff, core) = radical_coeff_core(&term.num, &term.den);
        match &common_core {
            None => common_core = Some(core),
            Some(existing) if *existing == core => {}
            Some(_) => return Err(Error::MixedRadicalCores),
        }
        total += coeff * BigRational::from_integer(BigInt::from(term.sign));
    }
    let core = match common_core {
        None => return Ok(ExactRadical::zero()),
        Some(core) => core,
    };
    let sign = if total.is_zero() {
        0
    } else if total.is_negative() {
        -1
    } else {
        1
    };
    let cn = total.numer().magnitude();
    let cd = total.denom().magnitude();
    Ok(ExactRadical::from_sqrt_ratio(sign, cn * cn * core, cd * cd))
}
