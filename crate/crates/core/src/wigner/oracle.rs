//! Independent construction of coupling coefficients by exact ladder
//! operators and Gram-Schmidt orthogonalization.
//!
//! This path never touches the Racah formula: multiplets start from the
//! stretched product state, the lowering operator walks each multiplet down,
//! and lower-J multiplets are obtained by exact orthogonalization against the
//! higher ones at fixed M, with signs fixed by the Condon-Shortley anchor.
//! Intermediate values are sums of radicals with *distinct* square-free
//! cores, so the arithmetic here runs on [`RadicalSum`] rather than on
//! [`ExactRadical`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{radical_coeff_core, ExactRadical};
use crate::halfint::HalfInt;
use crate::wigner::CouplingLabel;

/// A finite sum `Σ coeff_s * sqrt(s)` over square-free integer cores `s`.
#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct RadicalSum {
    terms: std::collections::BTreeMap<BigUint, BigRational>,
}

impl RadicalSum {
    fn zero() -> Self {
        RadicalSum::default()
    }

    fn from_rational(value: BigRational) -> Self {
        let mut sum = RadicalSum::zero();
        sum.add_term(value, BigUint::one());
        sum
    }

    /// `sqrt(value)` for a nonnegative rational.
    fn sqrt_of(value: &BigRational) -> Self {
        assert!(!value.is_negative(), "square root of a negative rational");
        if value.is_zero() {
            return RadicalSum::zero();
        }
        let (coeff, core) = radical_coeff_core(value.numer().magnitude(), value.denom().magnitude());
        let mut sum = RadicalSum::zero();
        sum.add_term(coeff, core);
        sum
    }

    fn add_term(&mut self, coeff: BigRational, core: BigUint) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(core.clone()).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&core);
        }
    }

    fn add(&mut self, other: &RadicalSum) {
        for (core, coeff) in &other.terms {
            self.add_term(coeff.clone(), core.clone());
        }
    }

    fn sub(&mut self, other: &RadicalSum) {
        for (core, coeff) in &other.terms {
            self.add_term(-coeff.clone(), core.clone());
        }
    }

    fn mul(&self, other: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                // sqrt(s) sqrt(t) = g sqrt(st/g^2) with g = gcd(s, t).
                let g = s.gcd(t);
                let core = (s / &g) * (t / &g);
                let coeff = a * b * BigRational::from_integer(BigInt::from(g));
                out.add_term(coeff, core);
            }
        }
        out
    }

    /// The value as a plain rational, when its only core is 1.
    fn to_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (core, coeff) = self.terms.iter().next().unwrap();
                core.is_one().then(|| coeff.clone())
            }
            _ => None,
        }
    }

    /// The value as a pure signed radical, when a single core remains.
    fn to_exact_radical(&self) -> Option<ExactRadical> {
        match self.terms.len() {
            0 => Some(ExactRadical::zero()),
            1 => {
                let (core, coeff) = self.terms.iter().next().unwrap();
                let sign = if coeff.is_negative() { -1 } else { 1 };
                let cn = coeff.numer().magnitude();
                let cd = coeff.denom().magnitude();
                Some(ExactRadical::from_sqrt_ratio(sign, cn * cn * core, cd * cd))
            }
            _ => None,
        }
    }
}

/// `j(j+1) - m(m-1)`, the squared lowering amplitude, exact.
fn lowering_factor(j: HalfInt, m: HalfInt) -> BigRational {
    let tj = i64::from(j.twice());
    let tm = i64::from(m.twice());
    BigRational::new(BigInt::from(tj * (tj + 2) - tm * (tm - 2)), BigInt::from(4))
}

/// A coupled state at fixed (J, M): coefficients over `m1` (with
/// `m2 = M - m1` implied), indexed against `basis`.
type StateVector = Vec<RadicalSum>;

struct CoupledTable {
    /// (twice J, twice M) -> (basis of twice-m1 values, coefficients).
    states: HashMap<(i32, i32), (Vec<i32>, StateVector)>,
}

/// Valid twice-m1 values at fixed twice-M, descending.
fn basis_m1(tj1: i32, tj2: i32, tm: i32) -> Vec<i32> {
    let high = tj1.min(tm + tj2);
    let low = (-tj1).max(tm - tj2);
    let mut out = Vec::new();
    let mut m1 = high;
    while m1 >= low {
        out.push(m1);
        m1 -= 2;
    }
    out
}

fn build_table(j1: HalfInt, j2: HalfInt) -> CoupledTable {
    let (tj1, tj2) = (j1.twice(), j2.twice());
    let mut states: HashMap<(i32, i32), (Vec<i32>, StateVector)> = HashMap::new();

    let tj_max = tj1 + tj2;
    let tj_min = (tj1 - tj2).abs();
    let mut tj = tj_max;
    while tj >= tj_min {
        let top = if tj == tj_max {
            // Stretched state |j1 j1>|j2 j2>.
            let basis = basis_m1(tj1, tj2, tj);
            let mut coeffs = vec![RadicalSum::zero(); basis.len()];
            let idx = basis.iter().position(|&m1| m1 == tj1).expect("stretched index");
            coeffs[idx] = RadicalSum::from_rational(BigRational::one());
            (basis, coeffs)
        } else {
            gram_schmidt_top(tj1, tj2, tj, &states)
        };
        let anchored = fix_anchor_sign(tj1, tj, top);
        states.insert((tj, tj), anchored);

        // Walk the multiplet down with the exact lowering operator.
        let mut tm = tj - 2;
        while tm >= -tj {
            let lowered = lower_once(j1, j2, HalfInt::from_twice(tj), tm, &states);
            states.insert((tj, tm), lowered);
            tm -= 2;
        }
        tj -= 2;
    }
    CoupledTable { states }
}

/// Top state of the J multiplet: any product state at M = J, orthogonalized
/// against every higher multiplet at the same M.
fn gram_schmidt_top(
    tj1: i32,
    tj2: i32,
    tj: i32,
    states: &HashMap<(i32, i32), (Vec<i32>, StateVector)>,
) -> (Vec<i32>, StateVector) {
    let basis = basis_m1(tj1, tj2, tj);
    let higher: Vec<&(Vec<i32>, StateVector)> = {
        let mut tj_higher = tj + 2;
        let mut list = Vec::new();
        while let Some(state) = states.get(&(tj_higher, tj)) {
            list.push(state);
            tj_higher += 2;
        }
        list
    };
    for (cand_idx, _) in basis.iter().enumerate() {
        let mut v: StateVector = vec![RadicalSum::zero(); basis.len()];
        v[cand_idx] = RadicalSum::from_rational(BigRational::one());
        for (hbasis, hcoeffs) in &higher {
            debug_assert_eq!(*hbasis, basis);
            // <J' M | cand> is just the candidate component of |J' M>.
            let overlap = &hcoeffs[cand_idx];
            for (vi, hc) in v.iter_mut().zip(hcoeffs.iter()) {
                vi.sub(&overlap.mul(hc));
            }
        }
        let mut norm_sq = RadicalSum::zero();
        for vi in &v {
            norm_sq.add(&vi.mul(vi));
        }
        let norm_sq = norm_sq
            .to_rational()
            .expect("norm squared of a coupled state must be rational");
        if norm_sq.is_zero() {
            continue;
        }
        // Divide by sqrt(norm_sq): multiply by sqrt(1/norm_sq).
        let scale = RadicalSum::sqrt_of(&norm_sq.recip());
        let coeffs = v.iter().map(|vi| vi.mul(&scale)).collect();
        return (basis, coeffs);
    }
    panic!("no candidate survived Gram-Schmidt at tj = {tj}");
}

/// Enforce the Condon-Shortley anchor: the m1 = j1 component of each
/// multiplet top is strictly positive.
fn fix_anchor_sign(tj1: i32, tj: i32, (basis, coeffs): (Vec<i32>, StateVector)) -> (Vec<i32>, StateVector) {
    let idx = basis
        .iter()
        .position(|&m1| m1 == tj1)
        .expect("anchor component m1 = j1 exists at M = J");
    let anchor = coeffs[idx]
        .to_exact_radical()
        .expect("anchor component is a pure radical");
    assert!(!anchor.is_zero(), "Condon-Shortley anchor vanished at tJ = {tj}");
    if anchor.sign() < 0 {
        let flipped = coeffs
            .iter()
            .map(|c| {
                let mut neg = RadicalSum::zero();
                neg.sub(c);
                neg
            })
            .collect();
        (basis, flipped)
    } else {
        (basis, coeffs)
    }
}

/// Apply J⁻ = j1⁻ + j2⁻ to the stored (J, M+1) state, normalized.
fn lower_once(
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
    tm_new: i32,
    states: &HashMap<(i32, i32), (Vec<i32>, StateVector)>,
) -> (Vec<i32>, StateVector) {
    let (tj1, tj2) = (j1.twice(), j2.twice());
    let (above_basis, above) = states
        .get(&(j.twice(), tm_new + 2))
        .expect("state above must exist");
    let basis = basis_m1(tj1, tj2, tm_new);
    let m_above = HalfInt::from_twice(tm_new + 2);
    let total_factor = lowering_factor(j, m_above);
    let inv_scale = RadicalSum::sqrt_of(&total_factor.recip());

    let coeffs = basis
        .iter()
        .map(|&tm1| {
            let mut acc = RadicalSum::zero();
            // From lowering particle one out of (m1 + 1, m2).
            if let Some(src) = above_basis.iter().position(|&b| b == tm1 + 2) {
                let amp = RadicalSum::sqrt_of(&lowering_factor(j1, HalfInt::from_twice(tm1 + 2)));
                acc.add(&amp.mul(&above[src]));
            }
            // From lowering particle two out of (m1, m2 + 1).
            if let Some(src) = above_basis.iter().position(|&b| b == tm1) {
                let tm2_above = tm_new + 2 - tm1;
                let amp = RadicalSum::sqrt_of(&lowering_factor(j2, HalfInt::from_twice(tm2_above)));
                acc.add(&amp.mul(&above[src]));
            }
            acc.mul(&inv_scale)
        })
        .collect();
    (basis, coeffs)
}

type TableCache = Mutex<HashMap<(i32, i32), Arc<CoupledTable>>>;

fn table_for(j1: HalfInt, j2: HalfInt) -> Arc<CoupledTable> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (j1.twice(), j2.twice());
    let mut guard = cache.lock().expect("oracle cache poisoned");
    if let Some(hit) = guard.get(&key) {
        return Arc::clone(hit);
    }
    let table = Arc::new(build_table(j1, j2));
    guard.insert(key, Arc::clone(&table));
    table
}

/// Largest doubled angular momentum the oracle accepts.
pub const MAX_ORACLE_DOUBLED_J: i32 = 16;

/// Coupling coefficient by the ladder-operator construction.
///
/// Agrees with [`crate::wigner::cg`] exactly; limited to doubled `j <= 16`
/// because the exact orthogonalization cost grows quickly.
pub fn cg_oracle(label: CouplingLabel) -> Result<ExactRadical> {
    for (name, j) in [("j1", label.j1), ("j2", label.j2)] {
        if j.twice() > MAX_ORACLE_DOUBLED_J {
            return Err(Error::OversizeAngularMomentum {
                name,
                value: j,
                max: HalfInt::from_twice(MAX_ORACLE_DOUBLED_J),
            });
        }
    }
    if !label.is_allowed() {
        return Ok(ExactRadical::zero());
    }
    let table = table_for(label.j1, label.j2);
    let key = (label.j.twice(), label.m.twice());
    let Some((basis, coeffs)) = table.states.get(&key) else {
        return Ok(ExactRadical::zero());
    };
    let Some(idx) = basis.iter().position(|&tm1| tm1 == label.m1.twice()) else {
        return Ok(ExactRadical::zero());
    };
    Ok(coeffs[idx]
        .to_exact_radical()
        .expect("coupling coefficients are pure radicals"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn label(tj1: i32, tm1: i32, tj2: i32, tm2: i32, tj: i32, tm: i32) -> CouplingLabel {
        CouplingLabel::new(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm))
    }

    #[test]
    fn radical_sum_products_recombine_cores() {
        // sqrt(6) * sqrt(10) = 2 sqrt(15)
        let a = RadicalSum::sqrt_of(&BigRational::from_integer(6.into()));
        let b = RadicalSum::sqrt_of(&BigRational::from_integer(10.into()));
        let p = a.mul(&b);
        let expected_core = BigUint::from(15u32);
        assert_eq!(p.terms.len(), 1);
        assert_eq!(p.terms[&expected_core], BigRational::from_integer(2.into()));
    }

    #[test]
    fn radical_sum_cancellation() {
        let mut s = RadicalSum::sqrt_of(&BigRational::new(2.into(), 9.into()));
        s.sub(&RadicalSum::sqrt_of(&BigRational::new(2.into(), 9.into())));
        assert!(s.terms.is_empty());
    }

    #[test]
    fn oracle_matches_known_values() {
        assert_eq!(
            cg_oracle(label(1, 1, 1, 1, 2, 2)).unwrap(),
            ExactRadical::one()
        );
        assert_eq!(
            cg_oracle(label(1, 1, 1, -1, 0, 0)).unwrap(),
            ExactRadical::sqrt_fraction(1, 1, 2)
        );
        assert_eq!(
            cg_oracle(label(1, -1, 1, 1, 0, 0)).unwrap(),
            ExactRadical::sqrt_fraction(-1, 1, 2)
        );
        assert_eq!(
            cg_oracle(label(2, 0, 1, 1, 1, 1)).unwrap(),
            ExactRadical::sqrt_fraction(-1, 1, 3)
        );
        assert_eq!(
            cg_oracle(label(2, 2, 1, -1, 1, 1)).unwrap(),
            ExactRadical::sqrt_fraction(1, 2, 3)
        );
    }

    #[test]
    fn oracle_rejects_oversize() {
        let err = cg_oracle(label(18, 0, 2, 0, 18, 0)).unwrap_err();
        assert!(matches!(err, Error::OversizeAngularMomentum { name: "j1", .. }));
    }

    #[test]
    fn oracle_agrees_with_racah_small_sweep() {
        for tj1 in 0..=5 {
            for tj2 in 0..=5 {
                for tj in ((tj1 - tj2).abs()..=(tj1 + tj2)).step_by(2) {
                    for tm1 in (-tj1..=tj1).step_by(2) {
                        for tm2 in (-tj2..=tj2).step_by(2) {
                            let lab = label(tj1, tm1, tj2, tm2, tj, tm1 + tm2);
                            if !lab.is_allowed() {
                                continue;
                            }
                            assert_eq!(
                                crate::wigner::cg(lab),
                                cg_oracle(lab).unwrap(),
                                "disagreement at {lab:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}
