//! Orientations as SU(2) group elements with z-y-z Euler-angle views.
//!
//! The stored representation is the Cayley-Klein pair `(a, b)`, so
//! composition and inversion are exact group operations and the half-integral
//! double-cover sign is never lost. Euler angles are a derived view with
//! `alpha` in `[0, 2π)`, `beta` in `[0, π]`, and `gamma` spanning `[0, 4π)`
//! to cover both SU(2) preimages of each spatial rotation.

use num_complex::Complex64;
use std::f64::consts::PI;

const TWO_PI: f64 = 2.0 * PI;
const FOUR_PI: f64 = 4.0 * PI;

/// z-y-z Euler angles; `gamma` runs over `[0, 4π)` for the double cover.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl EulerAngles {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        EulerAngles { alpha, beta, gamma }
    }
}

/// An SU(2) element: `|a|^2 + |b|^2 = 1`.
///
/// `Orientation` with `(-a, -b)` is a distinct value from `(a, b)`; the two
/// preimages of one spatial rotation differ by the sign every half-integral
/// representation sees.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Orientation {
    a: Complex64,
    b: Complex64,
}

impl Orientation {
    /// Build from raw Cayley-Klein parameters, renormalizing.
    pub fn from_cayley_klein(a: Complex64, b: Complex64) -> Self {
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        assert!(norm > 1e-8, "Cayley-Klein pair too close to zero");
        Orientation { a: a / norm, b: b / norm }
    }

    pub const fn identity() -> Self {
        Orientation { a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0) }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// The other SU(2) preimage of the same spatial rotation.
    pub fn antipode(&self) -> Self {
        Orientation { a: -self.a, b: -self.b }
    }

    /// Largest entrywise distance between two elements.
    pub fn distance(&self, other: &Orientation) -> f64 {
        (self.a - other.a).norm().max((self.b - other.b).norm())
    }
}

/// `a = cos(β/2) e^{-i(α+γ)/2}`, `b = -sin(β/2) e^{-i(α-γ)/2}` (z-y-z).
pub fn from_euler(e: &EulerAngles) -> Orientation {
    let half_beta = 0.5 * e.beta;
    let plus = Complex64::from_polar(1.0, -0.5 * (e.alpha + e.gamma));
    let minus = Complex64::from_polar(1.0, -0.5 * (e.alpha - e.gamma));
    Orientation {
        a: half_beta.cos() * plus,
        b: -half_beta.sin() * minus,
    }
}

/// Inverse view of [`from_euler`], entrywise (not merely up to sign).
///
/// At the gimbal degeneracy (`|b| ~ 0` or `|a| ~ 0`) the convention is
/// `alpha = 0` with all the axial rotation folded into `gamma`, so the output
/// is deterministic there.
pub fn to_euler(u: &Orientation) -> EulerAngles {
    const DEGENERATE: f64 = 1e-14;
    let an = u.a.norm();
    let bn = u.b.norm();
    let beta = 2.0 * bn.atan2(an);
    if bn < DEGENERATE {
        // b ~ 0: a = e^{-i gamma/2} under the alpha = 0 convention.
        let gamma = (-2.0 * u.a.arg()).rem_euclid(FOUR_PI);
        return EulerAngles::new(0.0, beta, gamma);
    }
    if an < DEGENERATE {
        // a ~ 0: -b = e^{+i gamma/2} under the alpha = 0 convention.
        let gamma = (2.0 * (-u.b).arg()).rem_euclid(FOUR_PI);
        return EulerAngles::new(0.0, beta, gamma);
    }
    let half_sum = -u.a.arg(); // (alpha + gamma)/2 mod 2π
    let half_diff = -(-u.b).arg(); // (alpha - gamma)/2 mod 2π
    let alpha = (half_sum + half_diff).rem_euclid(TWO_PI);
    let mut gamma = (half_sum - half_diff).rem_euclid(FOUR_PI);
    // half_sum and half_diff are only known modulo 2π, which leaves gamma
    // ambiguous by 2π; resolve the branch against the larger entry.
    let candidate = from_euler(&EulerAngles::new(alpha, beta, gamma));
    let aligned = if an >= bn {
        (candidate.a * u.a.conj()).re > 0.0
    } else {
        (candidate.b * u.b.conj()).re > 0.0
    };
    if !aligned {
        gamma = (gamma + TWO_PI).rem_euclid(FOUR_PI);
    }
    EulerAngles::new(alpha, beta, gamma)
}

/// SU(2) group product `u1 · u2`, renormalized.
pub fn compose(u1: &Orientation, u2: &Orientation) -> Orientation {
    let a = u1.a * u2.a - u1.b * u2.b.conj();
    let b = u1.a * u2.b + u1.b * u2.a.conj();
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    Orientation { a: a / norm, b: b / norm }
}

/// Group inverse `(a*, -b)`.
pub fn inverse(u: &Orientation) -> Orientation {
    Orientation { a: u.a.conj(), b: -u.b }
}

/// The body-frame orientation of particle one as seen from particle two:
/// `ū = u2⁻¹ · u1`, so that `compose(u2, ū) = u1`.
pub fn relative_orientation(u1: &Orientation, u2: &Orientation) -> Orientation {
    compose(&inverse(u2), u1)
}

/// Spherical angles `(theta, phi)` of the body z̄-axis: `(beta, alpha)` of
/// the Euler view. The axial angle gamma does not enter.
pub fn direction_of(u: &Orientation) -> (f64, f64) {
    let e = to_euler(u);
    (e.beta, e.alpha)
}
