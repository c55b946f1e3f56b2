//! Residual checkers for the frame-transformation identities.
//!
//! Each identity is evaluated two-sided over seeded orientation samples: the
//! left side goes through lab-frame coupled sums only, the right side through
//! the relative orientation and strong-basis machinery only, so a shared bug
//! cannot cancel. Reports carry the maximum absolute residual, the sampling
//! seed, and optionally the per-sample breakdown.

mod bases;
pub mod sampling;

pub use bases::{
    eval_strong_boson, eval_strong_fermion, eval_weak_boson, eval_weak_fermion,
    frame_coeffs_boson, frame_coeffs_fermion,
};

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::halfint::{multiplet_contains, projections, triangle_ok, HalfInt};
use crate::orientation::{relative_orientation, to_euler, EulerAngles, Orientation};
use crate::wavefunctions::{rotor_wavefunction, spin_function, spinor_function, ParticleState};
use crate::wigner::{big_d_from_euler, cg, CouplingLabel, DMatrixEntryLabel};
use crate::Amplitude;

const HALF: HalfInt = HalfInt::HALF;

/// The identity families under test, one per equation set of the frame
/// transformation story.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// Wavefunction transformation into the body frame (rotor, spin, spinor).
    GroupComposition,
    /// Contraction of a coupled pair of boson D entries into one rotor entry.
    DProductBoson,
    /// Weak boson basis equals the strongly coupled expansion.
    FrameBoson,
    /// Legendre addition theorem (the L = 0 boson case).
    LegendreBoson,
    /// Contraction of rotor x spin D entries on particle one.
    DProductFermionSpin,
    /// Contraction of rotor x spin D entries on the frame particle.
    DProductFermionBody,
    /// Contraction of two spinor D entries into the total-J rotor entry.
    DContractionJ,
    /// Weak fermion basis equals the strongly coupled expansion.
    FrameFermion,
    /// Addition theorem for half-integral angular momentum (the J = 0 case).
    AdditionFermion,
    /// Addition theorem restricted to pure spin states.
    SingletSpin,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 10] = [
        IdentityKind::GroupComposition,
        IdentityKind::DProductBoson,
        IdentityKind::FrameBoson,
        IdentityKind::LegendreBoson,
        IdentityKind::DProductFermionSpin,
        IdentityKind::DProductFermionBody,
        IdentityKind::DContractionJ,
        IdentityKind::FrameFermion,
        IdentityKind::AdditionFermion,
        IdentityKind::SingletSpin,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityKind::GroupComposition => "group-composition",
            IdentityKind::DProductBoson => "d-product-boson",
            IdentityKind::FrameBoson => "frame-boson",
            IdentityKind::LegendreBoson => "legendre-boson",
            IdentityKind::DProductFermionSpin => "d-product-fermion-spin",
            IdentityKind::DProductFermionBody => "d-product-fermion-body",
            IdentityKind::DContractionJ => "d-contraction-j",
            IdentityKind::FrameFermion => "frame-fermion",
            IdentityKind::AdditionFermion => "addition-fermion",
            IdentityKind::SingletSpin => "singlet-spin",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Failure to recognize an identity name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseIdentityError {
    input: String,
}

impl fmt::Display for ParseIdentityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown identity `{}`", self.input)
    }
}

impl std::error::Error for ParseIdentityError {}

impl FromStr for IdentityKind {
    type Err = ParseIdentityError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "singlet" => return Ok(IdentityKind::SingletSpin),
            "legendre" => return Ok(IdentityKind::LegendreBoson),
            _ => {}
        }
        IdentityKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or_else(|| ParseIdentityError { input: s.to_owned() })
    }
}

/// Angular-momentum labels for a check; the set a given identity reads is
/// validated in [`check_identity`], unused labels are ignored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    pub l: Option<HalfInt>,
    pub l1: Option<HalfInt>,
    pub l2: Option<HalfInt>,
    pub j: Option<HalfInt>,
    pub j1: Option<HalfInt>,
    pub j2: Option<HalfInt>,
    pub total_l: Option<HalfInt>,
    pub total_m: Option<HalfInt>,
    pub total_j: Option<HalfInt>,
    pub total_n: Option<HalfInt>,
}

/// Sampling and tolerance settings for a check run.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub record_per_sample: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { samples: 100, seed: 42, tolerance: 1e-12, record_per_sample: false }
    }
}

/// One sampled orientation tuple and its residual.
#[derive(Clone, Debug)]
pub struct SampleResidual {
    pub orientations: Vec<EulerAngles>,
    pub residual: f64,
}

/// Outcome of one identity check.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub kind: IdentityKind,
    /// Label renderings in a fixed per-identity order.
    pub params: Vec<(&'static str, String)>,
    /// Requested sample count; four degenerate pairs are always appended.
    pub samples: usize,
    pub seed: u64,
    pub max_abs_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub per_sample: Option<Vec<SampleResidual>>,
}

fn missing(identity: &'static str, label: &'static str) -> Error {
    Error::MissingLabel { identity, label }
}

/// The per-sample evaluation plan for one identity with fixed labels.
enum Plan {
    GroupCompositionRotor { l: HalfInt },
    GroupCompositionSpin,
    GroupCompositionSpinor { j: HalfInt, l: HalfInt },
    DProductBoson { l1: HalfInt, l2: HalfInt, total_l: HalfInt },
    FrameBoson { l1: HalfInt, l2: HalfInt, total_l: HalfInt, total_m: Option<HalfInt> },
    LegendreBoson { l: HalfInt },
    DProductFermionSpin { l1: HalfInt, j1: HalfInt },
    DProductFermionBody { l2: HalfInt, j2: HalfInt },
    DContractionJ { j1: HalfInt, j2: HalfInt, total_j: HalfInt },
    FrameFermion {
        j1: HalfInt,
        j2: HalfInt,
        l1: HalfInt,
        l2: HalfInt,
        total_j: HalfInt,
        total_n: Option<HalfInt>,
    },
    AdditionFermion { j: HalfInt, l1: HalfInt, l2: HalfInt },
    SingletSpin,
}

fn render(value: HalfInt) -> String {
    value.to_string()
}

fn render_opt(value: Option<HalfInt>) -> String {
    value.map_or_else(|| "all".to_owned(), render)
}

fn build_plan(
    kind: IdentityKind,
    labels: &Labels,
) -> Result<(Plan, Vec<(&'static str, String)>)> {
    match kind {
        IdentityKind::GroupComposition => match (labels.j, labels.l) {
            (Some(j), l_opt) => {
                if !j.is_half_odd() || j.is_negative() {
                    return Err(Error::NotHalfOdd { name: "j", value: j });
                }
                let l = l_opt.ok_or_else(|| missing("group-composition", "l"))?;
                if l != j - HALF && l != j + HALF {
                    return Err(Error::OrbitalSpinMismatch {
                        j_name: "j",
                        j,
                        l_name: "l",
                        l,
                    });
                }
                let params = vec![("j", render(j)), ("l", render(l))];
                Ok((Plan::GroupCompositionSpinor { j, l }, params))
            }
            (None, Some(l)) => {
                if !l.is_integral() {
                    return Err(Error::NotIntegral { name: "l", value: l });
                }
                if l.is_negative() {
                    return Err(Error::NegativeAngularMomentum { name: "l", value: l });
                }
                Ok((Plan::GroupCompositionRotor { l }, vec![("l", render(l))]))
            }
            (None, None) => Ok((Plan::GroupCompositionSpin, vec![("target", "spin".to_owned())])),
        },
        IdentityKind::DProductBoson => {
            let l1 = labels.l1.ok_or_else(|| missing("d-product-boson", "l1"))?;
            let l2 = labels.l2.ok_or_else(|| missing("d-product-boson", "l2"))?;
            let total_l = labels.total_l.ok_or_else(|| missing("d-product-boson", "L"))?;
            for (name, l) in [("l1", l1), ("l2", l2), ("L", total_l)] {
                if !l.is_integral() {
                    return Err(Error::NotIntegral { name, value: l });
                }
            }
            if !triangle_ok(l1, l2, total_l)? {
                return Err(Error::TriangleViolation { j1: l1, j2: l2, j3: total_l });
            }
            let params = vec![("l1", render(l1)), ("l2", render(l2)), ("L", render(total_l))];
            Ok((Plan::DProductBoson { l1, l2, total_l }, params))
        }
        IdentityKind::FrameBoson => {
            let l1 = labels.l1.ok_or_else(|| missing("frame-boson", "l1"))?;
            let l2 = labels.l2.ok_or_else(|| missing("frame-boson", "l2"))?;
            let total_l = labels.total_l.ok_or_else(|| missing("frame-boson", "L"))?;
            for (name, l) in [("l1", l1), ("l2", l2), ("L", total_l)] {
                if !l.is_integral() {
                    return Err(Error::NotIntegral { name, value: l });
                }
            }
            if !triangle_ok(l1, l2, total_l)? {
                return Err(Error::TriangleViolation { j1: l1, j2: l2, j3: total_l });
            }
            if let Some(m) = labels.total_m {
                if !multiplet_contains(total_l, m) {
                    return Err(Error::ProjectionOutOfMultiplet {
                        j_name: "L",
                        j: total_l,
                        m_name: "M",
                        m,
                    });
                }
            }
            let params = vec![
                ("l1", render(l1)),
                ("l2", render(l2)),
                ("L", render(total_l)),
                ("M", render_opt(labels.total_m)),
            ];
            Ok((Plan::FrameBoson { l1, l2, total_l, total_m: labels.total_m }, params))
        }
        IdentityKind::LegendreBoson => {
            let l = labels.l.ok_or_else(|| missing("legendre-boson", "l"))?;
            if !l.is_integral() {
                return Err(Error::NotIntegral { name: "l", value: l });
            }
            if l.is_negative() {
                return Err(Error::NegativeAngularMomentum { name: "l", value: l });
            }
            Ok((Plan::LegendreBoson { l }, vec![("l", render(l))]))
        }
        IdentityKind::DProductFermionSpin => {
            let l1 = labels.l1.ok_or_else(|| missing("d-product-fermion-spin", "l1"))?;
            let j1 = labels.j1.ok_or_else(|| missing("d-product-fermion-spin", "j1"))?;
            if !j1.is_half_odd() || j1.is_negative() {
                return Err(Error::NotHalfOdd { name: "j1", value: j1 });
            }
            if l1 != j1 - HALF && l1 != j1 + HALF {
                return Err(Error::OrbitalSpinMismatch { j_name: "j1", j: j1, l_name: "l1", l: l1 });
            }
            let params = vec![("l1", render(l1)), ("j1", render(j1))];
            Ok((Plan::DProductFermionSpin { l1, j1 }, params))
        }
        IdentityKind::DProductFermionBody => {
            let l2 = labels.l2.ok_or_else(|| missing("d-product-fermion-body", "l2"))?;
            let j2 = labels.j2.ok_or_else(|| missing("d-product-fermion-body", "j2"))?;
            if !j2.is_half_odd() || j2.is_negative() {
                return Err(Error::NotHalfOdd { name: "j2", value: j2 });
            }
            if l2 != j2 - HALF && l2 != j2 + HALF {
                return Err(Error::OrbitalSpinMismatch { j_name: "j2", j: j2, l_name: "l2", l: l2 });
            }
            let params = vec![("l2", render(l2)), ("j2", render(j2))];
            Ok((Plan::DProductFermionBody { l2, j2 }, params))
        }
        IdentityKind::DContractionJ => {
            let j1 = labels.j1.ok_or_else(|| missing("d-contraction-j", "j1"))?;
            let j2 = labels.j2.ok_or_else(|| missing("d-contraction-j", "j2"))?;
            let total_j = labels.total_j.ok_or_else(|| missing("d-contraction-j", "J"))?;
            if !triangle_ok(j1, j2, total_j)? {
                return Err(Error::TriangleViolation { j1, j2, j3: total_j });
            }
            let params =
                vec![("j1", render(j1)), ("j2", render(j2)), ("J", render(total_j))];
            Ok((Plan::DContractionJ { j1, j2, total_j }, params))
        }
        IdentityKind::FrameFermion => {
            let j1 = labels.j1.ok_or_else(|| missing("frame-fermion", "j1"))?;
            let j2 = labels.j2.ok_or_else(|| missing("frame-fermion", "j2"))?;
            let l1 = labels.l1.ok_or_else(|| missing("frame-fermion", "l1"))?;
            let l2 = labels.l2.ok_or_else(|| missing("frame-fermion", "l2"))?;
            let total_j = labels.total_j.ok_or_else(|| missing("frame-fermion", "J"))?;
            for (j_name, j, l_name, l) in [("j1", j1, "l1", l1), ("j2", j2, "l2", l2)] {
                if !j.is_half_odd() || j.is_negative() {
                    return Err(Error::NotHalfOdd { name: j_name, value: j });
                }
                if l != j - HALF && l != j + HALF {
                    return Err(Error::OrbitalSpinMismatch { j_name, j, l_name, l });
                }
            }
            if !triangle_ok(j1, j2, total_j)? {
                return Err(Error::TriangleViolation { j1, j2, j3: total_j });
            }
            if let Some(n) = labels.total_n {
                if !multiplet_contains(total_j, n) {
                    return Err(Error::ProjectionOutOfMultiplet {
                        j_name: "J",
                        j: total_j,
                        m_name: "N",
                        m: n,
                    });
                }
            }
            let params = vec![
                ("j1", render(j1)),
                ("j2", render(j2)),
                ("l1", render(l1)),
                ("l2", render(l2)),
                ("J", render(total_j)),
                ("N", render_opt(labels.total_n)),
            ];
            Ok((
                Plan::FrameFermion { j1, j2, l1, l2, total_j, total_n: labels.total_n },
                params,
            ))
        }
        IdentityKind::AdditionFermion => {
            let j = labels.j.ok_or_else(|| missing("addition-fermion", "j"))?;
            let l1 = labels.l1.ok_or_else(|| missing("addition-fermion", "l1"))?;
            let l2 = labels.l2.ok_or_else(|| missing("addition-fermion", "l2"))?;
            if !j.is_half_odd() || j.is_negative() {
                return Err(Error::NotHalfOdd { name: "j", value: j });
            }
            for (l_name, l) in [("l1", l1), ("l2", l2)] {
                if l != j - HALF && l != j + HALF {
                    return Err(Error::OrbitalSpinMismatch { j_name: "j", j, l_name, l });
                }
            }
            let params = vec![("j", render(j)), ("l1", render(l1)), ("l2", render(l2))];
            Ok((Plan::AdditionFermion { j, l1, l2 }, params))
        }
        IdentityKind::SingletSpin => Ok((Plan::SingletSpin, Vec::new())),
    }
}

/// Evaluate one identity over seeded orientation pairs and report the
/// largest residual.
///
/// The requested samples are drawn from the counter-based generator; four
/// gimbal-degenerate pairs are appended afterwards. Per-sample residuals are
/// keyed by index, so the report does not depend on evaluation order.
pub fn check_identity(
    kind: IdentityKind,
    labels: &Labels,
    opts: &CheckOptions,
) -> Result<ResidualReport> {
    if opts.samples == 0 {
        return Err(Error::NoSamples);
    }
    let (plan, params) = build_plan(kind, labels)?;

    let mut max_abs_residual = 0.0f64;
    let mut per_sample = opts.record_per_sample.then(Vec::new);
    let drawn = (0..opts.samples as u64).map(|i| sampling::pair_at(opts.seed, i));
    for (u1, u2) in drawn.chain(sampling::degenerate_pairs()) {
        let residual = plan.residual(&u1, &u2)?;
        max_abs_residual = max_abs_residual.max(residual);
        if let Some(list) = per_sample.as_mut() {
            list.push(SampleResidual {
                orientations: vec![to_euler(&u1), to_euler(&u2)],
                residual,
            });
        }
    }

    Ok(ResidualReport {
        kind,
        params,
        samples: opts.samples,
        seed: opts.seed,
        max_abs_residual,
        tolerance: opts.tolerance,
        pass: max_abs_residual <= opts.tolerance,
        per_sample,
    })
}

impl Plan {
    /// Largest |LHS - RHS| over the identity's internal projection labels at
    /// one orientation pair.
    fn residual(&self, u1: &Orientation, u2: &Orientation) -> Result<f64> {
        let p1 = ParticleState::new(*u1);
        let p2 = ParticleState::new(*u2);
        let e2 = *p2.euler();
        let rel = ParticleState::new(relative_orientation(u1, u2));
        let mut worst = 0.0f64;
        let mut track = |lhs: Amplitude, rhs: Amplitude| {
            worst = worst.max((lhs - rhs).norm());
        };
        match *self {
            Plan::GroupCompositionRotor { l } => {
                for m in projections(l)? {
                    let lhs = rotor_wavefunction(l, m, &p1)?;
                    let mut rhs = Amplitude::default();
                    for m_prime in projections(l)? {
                        rhs += big_d_from_euler(DMatrixEntryLabel::new(l, m, m_prime), &e2).conj()
                            * rotor_wavefunction(l, m_prime, &rel)?;
                    }
                    track(lhs, rhs);
                }
            }
            Plan::GroupCompositionSpin => {
                for sigma in [-HALF, HALF] {
                    let lhs = spin_function(sigma, &p1)?;
                    let mut rhs = Amplitude::default();
                    for sigma_prime in [-HALF, HALF] {
                        rhs += big_d_from_euler(DMatrixEntryLabel::new(HALF, sigma, sigma_prime), &e2)
                            .conj()
                            * spin_function(sigma_prime, &rel)?;
                    }
                    track(lhs, rhs);
                }
            }
            Plan::GroupCompositionSpinor { j, l } => {
                for n in projections(j)? {
                    let lhs = spinor_function(j, n, l, &p1)?;
                    let mut rhs = Amplitude::default();
                    for n_prime in projections(j)? {
                        rhs += big_d_from_euler(DMatrixEntryLabel::new(j, n, n_prime), &e2).conj()
                            * spinor_function(j, n_prime, l, &rel)?;
                    }
                    track(lhs, rhs);
                }
            }
            Plan::DProductBoson { l1, l2, total_l } => {
                for total_m in projections(total_l)? {
                    for m1_prime in projections(l1)? {
                        let mut lhs = Amplitude::default();
                        for m1 in projections(l1)? {
                            let m2 = total_m - m1;
                            if !multiplet_contains(l2, m2) {
                                continue;
                            }
                            let coeff = cg(CouplingLabel::new(l1, m1, l2, m2, total_l, total_m));
                            if coeff.is_zero() {
                                continue;
                            }
                            lhs += coeff.to_f64()
                                * big_d_from_euler(DMatrixEntryLabel::new(l1, m1, m1_prime), &e2)
                                    .conj()
                                * big_d_from_euler(
                                    DMatrixEntryLabel::new(l2, m2, HalfInt::ZERO),
                                    &e2,
                                )
                                .conj();
                        }
                        let coeff = cg(CouplingLabel::new(
                            l1,
                            m1_prime,
                            l2,
                            HalfInt::ZERO,
                            total_l,
                            m1_prime,
                        ));
                        let rhs = if coeff.is_zero() {
                            Amplitude::default()
                        } else {
                            coeff.to_f64()
                                * big_d_from_euler(
                                    DMatrixEntryLabel::new(total_l, total_m, m1_prime),
                                    &e2,
                                )
                                .conj()
                        };
                        track(lhs, rhs);
                    }
                }
            }
            Plan::FrameBoson { l1, l2, total_l, total_m } => {
                let coeffs = frame_coeffs_boson(total_l, l1, l2)?;
                let m_values = match total_m {
                    Some(m) => vec![m],
                    None => projections(total_l)?,
                };
                for m in m_values {
                    let lhs = eval_weak_boson(total_l, m, l1, l2, &p1, &p2)?;
                    let mut rhs = Amplitude::default();
                    for (&m1_prime, coeff) in &coeffs {
                        if coeff.is_zero() {
                            continue;
                        }
                        rhs += coeff.to_f64()
                            * eval_strong_boson(total_l, m, l1, m1_prime, &p1, &p2)?;
                    }
                    track(lhs, rhs);
                }
            }
            Plan::LegendreBoson { l } => {
                track(
                    legendre_boson_lhs(l, &p1, &p2)?,
                    rotor_wavefunction(l, HalfInt::ZERO, &rel)?,
                );
            }
            Plan::DProductFermionSpin { l1, j1 } => {
                for n1 in projections(j1)? {
                    for n1_prime in projections(j1)? {
                        for sigma1_prime in [-HALF, HALF] {
                            let m1_prime = n1_prime - sigma1_prime;
                            if !multiplet_contains(l1, m1_prime) {
                                continue;
                            }
                            let mut lhs = Amplitude::default();
                            for sigma1 in [-HALF, HALF] {
                                let m1 = n1 - sigma1;
                                if !multiplet_contains(l1, m1) {
                                    continue;
                                }
                                let coeff =
                                    cg(CouplingLabel::new(l1, m1, HALF, sigma1, j1, n1));
                                if coeff.is_zero() {
                                    continue;
                                }
                                lhs += coeff.to_f64()
                                    * big_d_from_euler(DMatrixEntryLabel::new(l1, m1, m1_prime), &e2)
                                        .conj()
                                    * big_d_from_euler(
                                        DMatrixEntryLabel::new(HALF, sigma1, sigma1_prime),
                                        &e2,
                                    )
                                    .conj();
                            }
                            let coeff = cg(CouplingLabel::new(
                                l1,
                                m1_prime,
                                HALF,
                                sigma1_prime,
                                j1,
                                n1_prime,
                            ));
                            let rhs = coeff.to_f64()
                                * big_d_from_euler(DMatrixEntryLabel::new(j1, n1, n1_prime), &e2)
                                    .conj();
                            track(lhs, rhs);
                        }
                    }
                }
            }
            Plan::DProductFermionBody { l2, j2 } => {
                for n2 in projections(j2)? {
                    for sigma2_prime in [-HALF, HALF] {
                        let mut lhs = Amplitude::default();
                        for sigma2 in [-HALF, HALF] {
                            let m2 = n2 - sigma2;
                            if !multiplet_contains(l2, m2) {
                                continue;
                            }
                            let coeff = cg(CouplingLabel::new(l2, m2, HALF, sigma2, j2, n2));
                            if coeff.is_zero() {
                                continue;
                            }
                            lhs += coeff.to_f64()
                                * big_d_from_euler(DMatrixEntryLabel::new(l2, m2, HalfInt::ZERO), &e2)
                                    .conj()
                                * big_d_from_euler(
                                    DMatrixEntryLabel::new(HALF, sigma2, sigma2_prime),
                                    &e2,
                                )
                                .conj();
                        }
                        let coeff = cg(CouplingLabel::new(
                            l2,
                            HalfInt::ZERO,
                            HALF,
                            sigma2_prime,
                            j2,
                            sigma2_prime,
                        ));
                        let rhs = coeff.to_f64()
                            * big_d_from_euler(DMatrixEntryLabel::new(j2, n2, sigma2_prime), &e2)
                                .conj();
                        track(lhs, rhs);
                    }
                }
            }
            Plan::DContractionJ { j1, j2, total_j } => {
                for total_n in projections(total_j)? {
                    for n1_prime in projections(j1)? {
                        for sigma2_prime in [-HALF, HALF] {
                            let body = n1_prime + sigma2_prime;
                            if !multiplet_contains(total_j, body) {
                                continue;
                            }
                            let coeff = cg(CouplingLabel::new(
                                j1,
                                n1_prime,
                                j2,
                                sigma2_prime,
                                total_j,
                                body,
                            ));
                            let lhs = coeff.to_f64()
                                * big_d_from_euler(DMatrixEntryLabel::new(total_j, total_n, body), &e2)
                                    .conj();
                            let mut rhs = Amplitude::default();
                            for n1 in projections(j1)? {
                                let n2 = total_n - n1;
                                if !multiplet_contains(j2, n2) {
                                    continue;
                                }
                                let coeff =
                                    cg(CouplingLabel::new(j1, n1, j2, n2, total_j, total_n));
                                if coeff.is_zero() {
                                    continue;
                                }
                                rhs += coeff.to_f64()
                                    * big_d_from_euler(DMatrixEntryLabel::new(j1, n1, n1_prime), &e2)
                                        .conj()
                                    * big_d_from_euler(
                                        DMatrixEntryLabel::new(j2, n2, sigma2_prime),
                                        &e2,
                                    )
                                    .conj();
                            }
                            track(lhs, rhs);
                        }
                    }
                }
            }
            Plan::FrameFermion { j1, j2, l1, l2, total_j, total_n } => {
                let coeffs = frame_coeffs_fermion(total_j, j1, j2, l2)?;
                let n_values = match total_n {
                    Some(n) => vec![n],
                    None => projections(total_j)?,
                };
                for n in n_values {
                    let lhs = eval_weak_fermion(total_j, n, j1, j2, l1, l2, &p1, &p2)?;
                    let mut rhs = Amplitude::default();
                    for (&(n1_prime, sigma2_prime), coeff) in &coeffs {
                        if coeff.is_zero() {
                            continue;
                        }
                        rhs += coeff.to_f64()
                            * eval_strong_fermion(
                                total_j,
                                n,
                                j1,
                                n1_prime,
                                sigma2_prime,
                                l1,
                                &p1,
                                &p2,
                            )?;
                    }
                    track(lhs, rhs);
                }
            }
            Plan::AdditionFermion { j, l1, l2 } => {
                track(
                    addition_fermion_lhs(j, l1, l2, &p1, &p2)?,
                    addition_fermion_rhs(j, l1, l2, &rel)?,
                );
            }
            Plan::SingletSpin => {
                track(singlet_lhs(&p1, &p2)?, singlet_rhs(&rel)?);
            }
        }
        Ok(worst)
    }
}

/// Left side of the Legendre addition theorem:
/// `sqrt(4π/(2l+1)) Σ_m (-1)^m ψ^l_{-m}(1) ψ^l_m(2)`.
pub fn legendre_boson_lhs(
    l: HalfInt,
    p1: &ParticleState,
    p2: &ParticleState,
) -> Result<Amplitude> {
    let mut sum = Amplitude::default();
    for m in projections(l)? {
        sum += f64::from(m.phase_sign())
            * rotor_wavefunction(l, -m, p1)?
            * rotor_wavefunction(l, m, p2)?;
    }
    Ok((4.0 * PI / f64::from(l.twice() + 1)).sqrt() * sum)
}

/// Left side of the fermion addition theorem:
/// `sqrt(4π/(2j+1)) Σ_n (-1)^{j+n} ψ^j_{-n}(1) ψ^j_n(2)`.
pub fn addition_fermion_lhs(
    j: HalfInt,
    l1: HalfInt,
    l2: HalfInt,
    p1: &ParticleState,
    p2: &ParticleState,
) -> Result<Amplitude> {
    let mut sum = Amplitude::default();
    for n in projections(j)? {
        sum += f64::from((j + n).phase_sign())
            * spinor_function(j, -n, l1, p1)?
            * spinor_function(j, n, l2, p2)?;
    }
    Ok((4.0 * PI / f64::from(j.twice() + 1)).sqrt() * sum)
}

/// Right side of the fermion addition theorem:
/// `(-1)^{j-1/2} [ψ^j_{1/2}(1̄) ± ψ^j_{-1/2}(1̄)]/sqrt(2)`, `+` for
/// `l2 = j + 1/2` and `-` for `l2 = j - 1/2`. Body states carry `l1`.
pub fn addition_fermion_rhs(
    j: HalfInt,
    l1: HalfInt,
    l2: HalfInt,
    rel: &ParticleState,
) -> Result<Amplitude> {
    let branch = if l2 == j + HALF { 1.0 } else { -1.0 };
    let up = spinor_function(j, HALF, l1, rel)?;
    let down = spinor_function(j, -HALF, l1, rel)?;
    Ok(f64::from((j - HALF).phase_sign()) * (up + branch * down) / 2.0f64.sqrt())
}

/// Left side of the spin-singlet addition theorem:
/// `[χ_{1/2}(1) χ_{-1/2}(2) - χ_{-1/2}(1) χ_{1/2}(2)]/sqrt(2)`.
pub fn singlet_lhs(p1: &ParticleState, p2: &ParticleState) -> Result<Amplitude> {
    Ok((spin_function(HALF, p1)? * spin_function(-HALF, p2)?
        - spin_function(-HALF, p1)? * spin_function(HALF, p2)?)
        / 2.0f64.sqrt())
}

/// Right side of the spin-singlet addition theorem:
/// `[χ_{1/2}(1̄) - χ_{-1/2}(1̄)]/sqrt(2)`.
pub fn singlet_rhs(rel: &ParticleState) -> Result<Amplitude> {
    Ok((spin_function(HALF, rel)? - spin_function(-HALF, rel)?) / 2.0f64.sqrt())
}

/// One entry of the default verification sweep.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub kind: IdentityKind,
    pub labels: Labels,
    pub samples: usize,
}

/// The desk-scale sweep over every identity: coupling labels run up to
/// `max_doubled_j` (totals over their full triangle ranges), the Legendre
/// checker up to `l = 5`, frame transformations at 50 samples and all other
/// checkers at 100.
pub fn standard_suite(max_doubled_j: i32) -> Vec<SuiteEntry> {
    let mut entries = Vec::new();
    let max_l = max_doubled_j / 2; // largest integral label
    let h = HalfInt::from_twice;

    // Rotor, spin, and spinor transformation laws.
    for l in 0..=max_l {
        entries.push(SuiteEntry {
            kind: IdentityKind::GroupComposition,
            labels: Labels { l: Some(HalfInt::from_int(l)), ..Labels::default() },
            samples: 100,
        });
    }
    entries.push(SuiteEntry {
        kind: IdentityKind::GroupComposition,
        labels: Labels::default(),
        samples: 100,
    });
    for tj in (1..=max_doubled_j).step_by(2) {
        for tl in [tj - 1, tj + 1] {
            entries.push(SuiteEntry {
                kind: IdentityKind::GroupComposition,
                labels: Labels { j: Some(h(tj)), l: Some(h(tl)), ..Labels::default() },
                samples: 100,
            });
        }
    }

    // Boson D-product contractions.
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for total in (l1 - l2).abs()..=(l1 + l2) {
                entries.push(SuiteEntry {
                    kind: IdentityKind::DProductBoson,
                    labels: Labels {
                        l1: Some(HalfInt::from_int(l1)),
                        l2: Some(HalfInt::from_int(l2)),
                        total_l: Some(HalfInt::from_int(total)),
                        ..Labels::default()
                    },
                    samples: 100,
                });
            }
        }
    }

    // Boson frame transformation, every (L, M).
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            for total in (l1 - l2).abs()..=(l1 + l2) {
                for tm in (-2 * total..=2 * total).step_by(2) {
                    entries.push(SuiteEntry {
                        kind: IdentityKind::FrameBoson,
                        labels: Labels {
                            l1: Some(HalfInt::from_int(l1)),
                            l2: Some(HalfInt::from_int(l2)),
                            total_l: Some(HalfInt::from_int(total)),
                            total_m: Some(h(tm)),
                            ..Labels::default()
                        },
                        samples: 50,
                    });
                }
            }
        }
    }

    // Legendre addition theorem.
    for l in 0..=max_l.max(5) {
        entries.push(SuiteEntry {
            kind: IdentityKind::LegendreBoson,
            labels: Labels { l: Some(HalfInt::from_int(l)), ..Labels::default() },
            samples: 100,
        });
    }

    // Fermion D-product contractions.
    for tj in (1..=max_doubled_j).step_by(2) {
        for tl in [tj - 1, tj + 1] {
            if tl / 2 > max_l {
                continue;
            }
            entries.push(SuiteEntry {
                kind: IdentityKind::DProductFermionSpin,
                labels: Labels { l1: Some(h(tl)), j1: Some(h(tj)), ..Labels::default() },
                samples: 100,
            });
            entries.push(SuiteEntry {
                kind: IdentityKind::DProductFermionBody,
                labels: Labels { l2: Some(h(tl)), j2: Some(h(tj)), ..Labels::default() },
                samples: 100,
            });
        }
    }

    // Total-J contraction.
    for tj1 in (1..=max_doubled_j).step_by(2) {
        for tj2 in (1..=max_doubled_j).step_by(2) {
            for ttotal in ((tj1 - tj2).abs()..=(tj1 + tj2)).step_by(2) {
                entries.push(SuiteEntry {
                    kind: IdentityKind::DContractionJ,
                    labels: Labels {
                        j1: Some(h(tj1)),
                        j2: Some(h(tj2)),
                        total_j: Some(h(ttotal)),
                        ..Labels::default()
                    },
                    samples: 100,
                });
            }
        }
    }

    // Fermion frame transformation, every branch and (J, N).
    for tj1 in (1..=max_doubled_j).step_by(2) {
        for tj2 in (1..=max_doubled_j).step_by(2) {
            for tl1 in [tj1 - 1, tj1 + 1] {
                for tl2 in [tj2 - 1, tj2 + 1] {
                    for ttotal in ((tj1 - tj2).abs()..=(tj1 + tj2)).step_by(2) {
                        for tn in (-ttotal..=ttotal).step_by(2) {
                            entries.push(SuiteEntry {
                                kind: IdentityKind::FrameFermion,
                                labels: Labels {
                                    j1: Some(h(tj1)),
                                    j2: Some(h(tj2)),
                                    l1: Some(h(tl1)),
                                    l2: Some(h(tl2)),
                                    total_j: Some(h(ttotal)),
                                    total_n: Some(h(tn)),
                                    ..Labels::default()
                                },
                                samples: 50,
                            });
                        }
                    }
                }
            }
        }
    }

    // Fermion addition theorem, all four branches.
    for tj in (1..=max_doubled_j).step_by(2) {
        for tl1 in [tj - 1, tj + 1] {
            for tl2 in [tj - 1, tj + 1] {
                entries.push(SuiteEntry {
                    kind: IdentityKind::AdditionFermion,
                    labels: Labels {
                        j: Some(h(tj)),
                        l1: Some(h(tl1)),
                        l2: Some(h(tl2)),
                        ..Labels::default()
                    },
                    samples: 100,
                });
            }
        }
    }

    entries.push(SuiteEntry {
        kind: IdentityKind::SingletSpin,
        labels: Labels::default(),
        samples: 100,
    });

    entries
}
