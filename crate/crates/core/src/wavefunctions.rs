//! Rotor, spin, and spinor wavefunction families.
//!
//! All three families are defined through conjugated D-matrix entries on the
//! particle's own orientation:
//!
//! * rotor:  `ψ^l_m = sqrt((2l+1)/4π) D^{l*}_{m 0}`
//! * spin:   `χ_σ = Σ_{σ'} D^{1/2*}_{σ σ'}`
//! * spinor: `ψ^j_n = Σ C^{l 1/2 j}_{m' σ' n} ψ^l_{m'} χ_{σ'}`
//!
//! The same spinor sum serves lab states (at the particle's lab orientation)
//! and body states (at the relative orientation).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::halfint::{multiplet_contains, HalfInt};
use crate::orientation::{to_euler, EulerAngles, Orientation};
use crate::wigner::{big_d_from_euler, cg, CouplingLabel, DMatrixEntryLabel};
use crate::Amplitude;

/// A particle carrying the full Euler triple of its frame.
///
/// The Euler view is fixed at construction so repeated wavefunction
/// evaluations against one state share it.
#[derive(Clone, Copy, Debug)]
pub struct ParticleState {
    orientation: Orientation,
    euler: EulerAngles,
}

impl ParticleState {
    pub fn new(orientation: Orientation) -> Self {
        ParticleState { orientation, euler: to_euler(&orientation) }
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn euler(&self) -> &EulerAngles {
        &self.euler
    }
}

impl From<Orientation> for ParticleState {
    fn from(orientation: Orientation) -> Self {
        ParticleState::new(orientation)
    }
}

const HALF: HalfInt = HalfInt::HALF;

/// The rotor (spherical-harmonic) wavefunction `ψ^l_m`.
///
/// Equals `Y_{lm}(θ, φ)` of the particle's body z̄-axis direction and is
/// independent of its axial Euler angle. Half-integral `l` is a domain
/// error: a point particle carries no orbital angular momentum about its own
/// axis, so the body projection is pinned to zero and needs integral `l`.
pub fn rotor_wavefunction(l: HalfInt, m: HalfInt, p: &ParticleState) -> Result<Amplitude> {
    if !l.is_integral() {
        return Err(Error::NotIntegral { name: "l", value: l });
    }
    if l.is_negative() {
        return Err(Error::NegativeAngularMomentum { name: "l", value: l });
    }
    if !multiplet_contains(l, m) {
        return Err(Error::ProjectionOutOfMultiplet { j_name: "l", j: l, m_name: "m", m });
    }
    let norm = (f64::from(l.twice() + 1) / (4.0 * PI)).sqrt();
    let d = big_d_from_euler(DMatrixEntryLabel::new(l, m, HalfInt::ZERO), p.euler());
    Ok(norm * d.conj())
}

/// The spin function `χ_σ = Σ_{σ'} D^{1/2*}_{σ σ'}`.
pub fn spin_function(sigma: HalfInt, p: &ParticleState) -> Result<Amplitude> {
    if sigma.abs() != HALF {
        return Err(Error::InvalidSpinProjection { value: sigma });
    }
    let mut sum = Amplitude::default();
    for sigma_prime in [-HALF, HALF] {
        sum += big_d_from_euler(DMatrixEntryLabel::new(HALF, sigma, sigma_prime), p.euler())
            .conj();
    }
    Ok(sum)
}

/// The spinor function `ψ^j_n` for `l = j ± 1/2`, the coupled sum of rotor
/// and spin parts with `m' + σ' = n` enforced.
pub fn spinor_function(j: HalfInt, n: HalfInt, l: HalfInt, p: &ParticleState) -> Result<Amplitude> {
    if !j.is_half_odd() || j.is_negative() {
        return Err(Error::NotHalfOdd { name: "j", value: j });
    }
    if l != j - HALF && l != j + HALF {
        return Err(Error::OrbitalSpinMismatch { j_name: "j", j, l_name: "l", l });
    }
    if !multiplet_contains(j, n) {
        return Err(Error::ProjectionOutOfMultiplet { j_name: "j", j, m_name: "n", m: n });
    }
    let mut sum = Amplitude::default();
    for sigma_prime in [-HALF, HALF] {
        let m_prime = n - sigma_prime;
        if !multiplet_contains(l, m_prime) {
            continue;
        }
        let coeff = cg(CouplingLabel::new(l, m_prime, HALF, sigma_prime, j, n));
        if coeff.is_zero() {
            continue;
        }
        sum += coeff.to_f64()
            * rotor_wavefunction(l, m_prime, p)?
            * spin_function(sigma_prime, p)?;
    }
    Ok(sum)
}
