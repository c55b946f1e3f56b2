//! Domain errors shared by all modules.

use crate::halfint::HalfInt;
use thiserror::Error;

/// Violations of the angular-momentum domain rules.
///
/// Every variant names the rule that was broken; callers that feed
/// user-supplied labels (the CLI, mostly) surface these verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{name} = {value} must be nonnegative")]
    NegativeAngularMomentum { name: &'static str, value: HalfInt },

    #[error("{name} = {value} must be integral")]
    NotIntegral { name: &'static str, value: HalfInt },

    #[error("{name} = {value} must be half-odd-integral")]
    NotHalfOdd { name: &'static str, value: HalfInt },

    #[error("projection {m_name} = {m} is not in the multiplet of {j_name} = {j}")]
    ProjectionOutOfMultiplet {
        j_name: &'static str,
        j: HalfInt,
        m_name: &'static str,
        m: HalfInt,
    },

    #[error("({j1}, {j2}, {j3}) violates the triangle rule")]
    TriangleViolation { j1: HalfInt, j2: HalfInt, j3: HalfInt },

    #[error("spin projection {value} must be +1/2 or -1/2")]
    InvalidSpinProjection { value: HalfInt },

    #[error("{l_name} = {l} must be {j_name} ± 1/2 for {j_name} = {j}")]
    OrbitalSpinMismatch {
        j_name: &'static str,
        j: HalfInt,
        l_name: &'static str,
        l: HalfInt,
    },

    #[error("radical terms do not share a common square-free core")]
    MixedRadicalCores,

    #[error("{name} = {value} exceeds the supported maximum {max}")]
    OversizeAngularMomentum {
        name: &'static str,
        value: HalfInt,
        max: HalfInt,
    },

    #[error("identity `{identity}` requires the label `{label}`")]
    MissingLabel {
        identity: &'static str,
        label: &'static str,
    },

    #[error("sample count must be at least 1")]
    NoSamples,
}

pub type Result<T> = std::result::Result<T, Error>;
