//! Wigner coupling coefficients and rotation matrices.
//!
//! Coupling coefficients are evaluated exactly by the Racah closed form in
//! the Condon-Shortley phase convention and come back as [`ExactRadical`]s.
//! An independent ladder-operator construction ([`cg_oracle`]) validates
//! them. The d and D matrices are double precision with exact combinatorial
//! prefactors; the D matrix takes its double-cover branch from the SU(2)
//! element itself.

mod oracle;

pub use oracle::cg_oracle;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::{ExactRadical, FactorialVector};
use crate::halfint::{multiplet_contains, HalfInt};
use crate::orientation::{to_euler, Orientation};
use crate::Amplitude;

/// Labels of a Wigner coupling coefficient `C^{j1 j2 j}_{m1 m2 m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CouplingLabel {
    pub j1: HalfInt,
    pub m1: HalfInt,
    pub j2: HalfInt,
    pub m2: HalfInt,
    /// Total angular momentum.
    pub j: HalfInt,
    /// Total projection.
    pub m: HalfInt,
}

impl CouplingLabel {
    pub fn new(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt) -> Self {
        CouplingLabel { j1, m1, j2, m2, j, m }
    }

    /// All selection rules: projection sum, multiplet membership, triangle.
    pub fn is_allowed(&self) -> bool {
        self.m1 + self.m2 == self.m
            && !self.j1.is_negative()
            && !self.j2.is_negative()
            && !self.j.is_negative()
            && multiplet_contains(self.j1, self.m1)
            && multiplet_contains(self.j2, self.m2)
            && multiplet_contains(self.j, self.m)
            && crate::halfint::triangle_ok(self.j1, self.j2, self.j).unwrap_or(false)
    }
}

/// Labels of a rotation-matrix entry `D^j_{m m'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DMatrixEntryLabel {
    pub j: HalfInt,
    pub m: HalfInt,
    pub mprime: HalfInt,
}

impl DMatrixEntryLabel {
    pub fn new(j: HalfInt, m: HalfInt, mprime: HalfInt) -> Self {
        DMatrixEntryLabel { j, m, mprime }
    }

    pub fn is_valid(&self) -> bool {
        !self.j.is_negative()
            && multiplet_contains(self.j, self.m)
            && multiplet_contains(self.j, self.mprime)
    }
}

/// Largest doubled angular momentum the factorial table supports here.
pub const MAX_DOUBLED_J: i32 = 40;

/// Exact Wigner coupling coefficient in the Condon-Shortley convention.
///
/// Labels violating a selection rule give exact zero, not an error. Values
/// are memoized; the cache is invisible apart from speed.
pub fn cg(label: CouplingLabel) -> ExactRadical {
    if !label.is_allowed() {
        return ExactRadical::zero();
    }
    assert!(
        label.j1.twice() <= MAX_DOUBLED_J && label.j2.twice() <= MAX_DOUBLED_J,
        "coupling labels beyond doubled j = {MAX_DOUBLED_J} are unsupported"
    );
    static CACHE: OnceLock<RwLock<HashMap<CouplingLabel, ExactRadical>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().expect("cg cache poisoned").get(&label) {
        return hit.clone();
    }
    let value = racah_cg(&label);
    cache
        .write()
        .expect("cg cache poisoned")
        .insert(label, value.clone());
    value
}

/// The Racah closed form. All arithmetic exact: the factorial prefactor as a
/// prime-exponent vector, the alternating sum as a big rational.
fn racah_cg(label: &CouplingLabel) -> ExactRadical {
    let (tj1, tm1) = (label.j1.twice(), label.m1.twice());
    let (tj2, tm2) = (label.j2.twice(), label.m2.twice());
    let (tj, tm) = (label.j.twice(), label.m.twice());

    // Integer factorial arguments (all nonnegative once the rules hold).
    let g1 = (tj1 + tj2 - tj) / 2;
    let g2 = (tj1 - tj2 + tj) / 2;
    let g3 = (-tj1 + tj2 + tj) / 2;
    let g4 = (tj1 + tj2 + tj) / 2 + 1;
    let f1 = (tj1 + tm1) / 2;
    let f2 = (tj1 - tm1) / 2;
    let f3 = (tj2 + tm2) / 2;
    let f4 = (tj2 - tm2) / 2;
    let f5 = (tj + tm) / 2;
    let f6 = (tj - tm) / 2;

    let prefactor = FactorialVector::one()
        .mul_int((tj + 1) as u64)
        .mul_factorial(g1 as u32)
        .mul_factorial(g2 as u32)
        .mul_factorial(g3 as u32)
        .div_factorial(g4 as u32)
        .mul_factorial(f1 as u32)
        .mul_factorial(f2 as u32)
        .mul_factorial(f3 as u32)
        .mul_factorial(f4 as u32)
        .mul_factorial(f5 as u32)
        .mul_factorial(f6 as u32);

    let a = (tj - tj2 + tm1) / 2;
    let b = (tj - tj1 - tm2) / 2;
    let k_min = 0.max(-a).max(-b);
    let k_max = g1.min(f2).min(f3);

    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let denom = [k, g1 - k, f2 - k, f3 - k, a + k, b + k]
            .iter()
            .fold(BigInt::one(), |acc, &arg| acc * factorial_bigint(arg as u32));
        let term = BigRational::new(BigInt::one(), denom);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return ExactRadical::zero();
    }

    let sign = if sum.is_negative() { -1 } else { 1 };
    let sn = sum.numer().magnitude();
    let sd = sum.denom().magnitude();
    let (pre_num, pre_den) = prefactor.to_fraction();
    ExactRadical::from_sqrt_ratio(sign, sn * sn * pre_num, sd * sd * pre_den)
}

fn factorial_bigint(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= BigInt::from(i);
    }
    acc
}

/// One term of the small-d sum: exact coefficient and half-angle powers.
#[derive(Clone, Copy)]
struct DTerm {
    coeff: f64,
    cos_pow: i32,
    sin_pow: i32,
}

type DTermCache = RwLock<HashMap<(i32, i32, i32), Vec<DTerm>>>;

fn d_terms(label: &DMatrixEntryLabel) -> Vec<DTerm> {
    static CACHE: OnceLock<DTermCache> = OnceLock::new();
    let key = (label.j.twice(), label.m.twice(), label.mprime.twice());
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().expect("d cache poisoned").get(&key) {
        return hit.clone();
    }

    let (tj, tm, tmp) = key;
    let jm = (tj + tm) / 2;
    let jn = (tj - tm) / 2;
    let jp = (tj + tmp) / 2;
    let jq = (tj - tmp) / 2;
    let diff = (tm - tmp) / 2; // m - m'

    let k_min = 0.max(-diff);
    let k_max = jp.min(jn);
    let mut terms = Vec::with_capacity((k_max - k_min + 1).max(0) as usize);
    for k in k_min..=k_max {
        // coeff^2 = f1! f2! f3! f4! / [(j+m'-k)! k! (m-m'+k)! (j-m-k)!]^2
        let ratio = FactorialVector::one()
            .mul_factorial(jm as u32)
            .mul_factorial(jn as u32)
            .mul_factorial(jp as u32)
            .mul_factorial(jq as u32)
            .div_factorial((jp - k) as u32)
            .div_factorial((jp - k) as u32)
            .div_factorial(k as u32)
            .div_factorial(k as u32)
            .div_factorial((diff + k) as u32)
            .div_factorial((diff + k) as u32)
            .div_factorial((jn - k) as u32)
            .div_factorial((jn - k) as u32);
        let sign = if (diff + k).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        terms.push(DTerm {
            coeff: sign * ratio.to_f64().sqrt(),
            cos_pow: tj - diff - 2 * k,
            sin_pow: diff + 2 * k,
        });
    }
    cache
        .write()
        .expect("d cache poisoned")
        .insert(key, terms.clone());
    terms
}

/// Wigner small-d matrix entry `d^j_{m m'}(beta)`, real.
pub fn wigner_d_small(label: DMatrixEntryLabel, beta: f64) -> f64 {
    assert!(label.is_valid(), "invalid d-matrix label {label:?}");
    let c = (0.5 * beta).cos();
    let s = (0.5 * beta).sin();
    d_terms(&label)
        .iter()
        .map(|t| t.coeff * c.powi(t.cos_pow) * s.powi(t.sin_pow))
        .sum()
}

/// Wigner D-matrix entry
/// `D^j_{m m'}(u) = e^{-i m α} d^j_{m m'}(β) e^{-i m' γ}`
/// on the Euler view of `u`, with the double-cover branch carried by
/// `γ ∈ [0, 4π)`.
pub fn wigner_big_d(label: DMatrixEntryLabel, u: &Orientation) -> Amplitude {
    big_d_from_euler(label, &to_euler(u))
}

/// Same entry on a precomputed Euler view; callers that evaluate many
/// entries of one rotation convert once.
pub(crate) fn big_d_from_euler(label: DMatrixEntryLabel, e: &crate::orientation::EulerAngles) -> Amplitude {
    assert!(label.is_valid(), "invalid D-matrix label {label:?}");
    let d = wigner_d_small(label, e.beta);
    let phase = -(label.m.as_f64() * e.alpha + label.mprime.as_f64() * e.gamma);
    Amplitude::from_polar(d, phase)
}
