//! Weakly and strongly coupled two-particle bases and the exact frame
//! transformation coefficients connecting them.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exact::ExactRadical;
use crate::halfint::{multiplet_contains, projections, triangle_ok, HalfInt};
use crate::orientation::relative_orientation;
use crate::wavefunctions::{rotor_wavefunction, spinor_function, ParticleState};
use crate::wigner::{big_d_from_euler, cg, CouplingLabel, DMatrixEntryLabel};
use crate::Amplitude;

const HALF: HalfInt = HalfInt::HALF;

fn require_integral(name: &'static str, value: HalfInt) -> Result<()> {
    if !value.is_integral() {
        return Err(Error::NotIntegral { name, value });
    }
    Ok(())
}

fn require_half_odd(name: &'static str, value: HalfInt) -> Result<()> {
    if !value.is_half_odd() || value.is_negative() {
        return Err(Error::NotHalfOdd { name, value });
    }
    Ok(())
}

fn require_triangle(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<()> {
    if !triangle_ok(j1, j2, j3)? {
        return Err(Error::TriangleViolation { j1, j2, j3 });
    }
    Ok(())
}

fn require_projection(
    j_name: &'static str,
    j: HalfInt,
    m_name: &'static str,
    m: HalfInt,
) -> Result<()> {
    if !multiplet_contains(j, m) {
        return Err(Error::ProjectionOutOfMultiplet { j_name, j, m_name, m });
    }
    Ok(())
}

fn require_spinor_branch(
    j_name: &'static str,
    j: HalfInt,
    l_name: &'static str,
    l: HalfInt,
) -> Result<()> {
    if l != j - HALF && l != j + HALF {
        return Err(Error::OrbitalSpinMismatch { j_name, j, l_name, l });
    }
    Ok(())
}

/// The weakly coupled boson basis: lab-frame spherical harmonics of both
/// particles coupled to total (L, M).
pub fn eval_weak_boson(
    total_l: HalfInt,
    total_m: HalfInt,
    l1: HalfInt,
    l2: HalfInt,
    p1: &ParticleState,
    p2: &ParticleState,
) -> Result<Amplitude> {
    require_integral("L", total_l)?;
    require_integral("l1", l1)?;
    require_integral("l2", l2)?;
    require_triangle(l1, l2, total_l)?;
    require_projection("L", total_l, "M", total_m)?;
    let mut sum = Amplitude::default();
    for m1 in projections(l1)? {
        let m2 = total_m - m1;
        if !multiplet_contains(l2, m2) {
            continue;
        }
        let coeff = cg(CouplingLabel::new(l1, m1, l2, m2, total_l, total_m));
        if coeff.is_zero() {
            continue;
        }
        sum += coeff.to_f64()
            * rotor_wavefunction(l1, m1, p1)?
            * rotor_wavefunction(l2, m2, p2)?;
    }
    Ok(sum)
}

/// The strongly coupled boson basis:
/// `sqrt((2L+1)/4π) D^{L*}_{M m1'}(2) ψ^{l1}_{m1'}(1̄)`.
pub fn eval_strong_boson(
    total_l: HalfInt,
    total_m: HalfInt,
    l1: HalfInt,
    m1_prime: HalfInt,
    p1: &ParticleState,
    p2: &ParticleState,
) -> Result<Amplitude> {
    require_integral("L", total_l)?;
    require_integral("l1", l1)?;
    require_projection("L", total_l, "M", total_m)?;
    require_projection("L", total_l, "m1'", m1_prime)?;
    require_projection("l1", l1, "m1'", m1_prime)?;
    let rel = ParticleState::new(relative_orientation(p1.orientation(), p2.orientation()));
    let norm = (f64::from(total_l.twice() + 1) / (4.0 * PI)).sqrt();
    let rotor = big_d_from_euler(
        DMatrixEntryLabel::new(total_l, total_m, m1_prime),
        p2.euler(),
    )
    .conj();
    Ok(norm * rotor * rotor_wavefunction(l1, m1_prime, &rel)?)
}

/// The weakly coupled fermion basis in j-j coupling: lab spinor states of
/// both particles coupled to total (J, N).
#[allow(clippy::too_many_arguments)]
pub fn eval_weak_fermion(
    total_j: HalfInt,
    total_n: HalfInt,
    j1: HalfInt,
    j2: HalfInt,
    l1: HalfInt,
    l2: HalfInt,
    p1: &ParticleState,
    p2: &ParticleState,
) -> Result<Amplitude> {
    require_half_odd("j1", j1)?;
    require_half_odd("j2", j2)?;
    require_spinor_branch("j1", j1, "l1", l1)?;
    require_spinor_branch("j2", j2, "l2", l2)?;
    require_triangle(j1, j2, total_j)?;
    require_projection("J", total_j, "N", total_n)?;
    let mut sum = Amplitude::default();
    for n1 in projections(j1)? {
        let n2 = total_n - n1;
        if !multiplet_contains(j2, n2) {
            continue;
        }
        let coeff = cg(CouplingLabel::new(j1, n1, j2, n2, total_j, total_n));
        if coeff.is_zero() {
            continue;
        }
        sum += coeff.to_f64()
            * spinor_function(j1, n1, l1, p1)?
            * spinor_function(j2, n2, l2, p2)?;
    }
    Ok(sum)
}

/// The strongly coupled fermion basis:
/// `sqrt((2J+1)/4π) D^{J*}_{N, n1'+σ2'}(2) ψ^{j1}_{n1'}(1̄)`.
#[allow(clippy::too_many_arguments)]
pub fn eval_strong_fermion(
    total_j: HalfInt,
    total_n: HalfInt,
    j1: HalfInt,
    n1_prime: HalfInt,
    sigma2_prime: HalfInt,
    l1: HalfInt,
    p1: &ParticleState,
    p2: &ParticleState,
) -> Result<Amplitude> {
    require_half_odd("j1", j1)?;
    require_spinor_branch("j1", j1, "l1", l1)?;
    require_projection("j1", j1, "n1'", n1_prime)?;
    if sigma2_prime.abs() != HALF {
        return Err(Error::InvalidSpinProjection { value: sigma2_prime });
    }
    let body_projection = n1_prime + sigma2_prime;
    require_projection("J", total_j, "n1'+σ2'", body_projection)?;
    require_projection("J", total_j, "N", total_n)?;
    let rel = ParticleState::new(relative_orientation(p1.orientation(), p2.orientation()));
    let norm = (f64::from(total_j.twice() + 1) / (4.0 * PI)).sqrt();
    let rotor = big_d_from_euler(
        DMatrixEntryLabel::new(total_j, total_n, body_projection),
        p2.euler(),
    )
    .conj();
    Ok(norm * rotor * spinor_function(j1, n1_prime, l1, &rel)?)
}

/// Exact coefficients of the boson frame transformation: the strong-basis
/// weight of each body projection `m1'` is
/// `(-1)^{l1 - m1'} C^{L l1 l2}_{m1' -m1' 0}`.
pub fn frame_coeffs_boson(
    total_l: HalfInt,
    l1: HalfInt,
    l2: HalfInt,
) -> Result<BTreeMap<HalfInt, ExactRadical>> {
    require_integral("L", total_l)?;
    require_integral("l1", l1)?;
    require_integral("l2", l2)?;
    require_triangle(l1, l2, total_l)?;
    let mut coeffs = BTreeMap::new();
    for m1_prime in projections(l1.min(total_l))? {
        let c = cg(CouplingLabel::new(
            total_l,
            m1_prime,
            l1,
            -m1_prime,
            l2,
            HalfInt::ZERO,
        ));
        coeffs.insert(m1_prime, c.scale_sign((l1 - m1_prime).phase_sign()));
    }
    Ok(coeffs)
}

/// Exact coefficients of the fermion frame transformation over body labels
/// `(n1', σ2')`:
/// `(-1)^{σ2'+1/2} C^{j2 1/2 l2}_{-σ2' σ2' 0} (-1)^{j1-n1'} C^{J j1 j2}_{(n1'+σ2') -n1' σ2'}`.
pub fn frame_coeffs_fermion(
    total_j: HalfInt,
    j1: HalfInt,
    j2: HalfInt,
    l2: HalfInt,
) -> Result<BTreeMap<(HalfInt, HalfInt), ExactRadical>> {
    require_half_odd("j1", j1)?;
    require_half_odd("j2", j2)?;
    require_spinor_branch("j2", j2, "l2", l2)?;
    require_triangle(j1, j2, total_j)?;
    let mut coeffs = BTreeMap::new();
    for n1_prime in projections(j1)? {
        for sigma2_prime in [-HALF, HALF] {
            if !multiplet_contains(total_j, n1_prime + sigma2_prime) {
                continue;
            }
            let spin_part = cg(CouplingLabel::new(
                j2,
                -sigma2_prime,
                HALF,
                sigma2_prime,
                l2,
                HalfInt::ZERO,
            ));
            let rotor_part = cg(CouplingLabel::new(
                total_j,
                n1_prime + sigma2_prime,
                j1,
                -n1_prime,
                j2,
                sigma2_prime,
            ));
            let sign =
                (sigma2_prime + HALF).phase_sign() * (j1 - n1_prime).phase_sign();
            coeffs.insert(
                (n1_prime, sigma2_prime),
                (&spin_part * &rotor_part).scale_sign(sign),
            );
        }
    }
    Ok(coeffs)
}
