//! Angular-momentum frame transformations on the SU(2) double cover.
//!
//! The crate couples two-particle angular momenta exactly — Wigner coupling
//! coefficients come back as signed square roots of rationals — and evaluates
//! rotor, spin, and spinor wavefunctions numerically so that the frame
//! transformations relating weakly coupled (lab) and strongly coupled (body)
//! bases can be certified identity by identity, including the addition
//! theorem for half-integral angular momentum.
//!
//! Module map:
//!
//! * [`halfint`] — exact integral/half-integral quantum numbers
//! * [`exact`] — signed-radical values and prime-exponent factorials
//! * [`orientation`] — SU(2) elements with z-y-z Euler views
//! * [`wigner`] — coupling coefficients (Racah form + ladder oracle), d/D
//! * [`wavefunctions`] — rotor, spin, and spinor families
//! * [`identities`] — coupled bases, frame coefficients, residual checkers

pub mod error;
pub mod exact;
pub mod halfint;
pub mod identities;
pub mod orientation;
pub mod wavefunctions;
pub mod wigner;

/// Complex double-precision amplitude of a wavefunction or D-matrix entry.
pub type Amplitude = num_complex::Complex64;

pub use error::Error;
pub use exact::{sum_radicals_common_core, ExactRadical, FactorialVector};
pub use halfint::{projections, triangle_ok, HalfInt};
pub use identities::{
    check_identity, standard_suite, CheckOptions, IdentityKind, Labels, ResidualReport,
    SuiteEntry,
};
pub use orientation::{
    compose, direction_of, from_euler, inverse, relative_orientation, to_euler, EulerAngles,
    Orientation,
};
pub use wavefunctions::{rotor_wavefunction, spin_function, spinor_function, ParticleState};
pub use wigner::{cg, cg_oracle, wigner_big_d, wigner_d_small, CouplingLabel, DMatrixEntryLabel};
