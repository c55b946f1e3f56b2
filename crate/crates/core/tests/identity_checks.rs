//! End-to-end checks of the identity harness: the per-equation examples,
//! the symmetry properties of the addition theorems, determinism of the
//! reports, and the full five-seed sweep.

mod common;

use std::f64::consts::PI;

use spinor_frames::halfint::HalfInt;
use spinor_frames::identities::{
    addition_fermion_lhs, addition_fermion_rhs, check_identity, eval_weak_boson,
    eval_weak_fermion, legendre_boson_lhs, sampling, singlet_lhs, standard_suite, CheckOptions,
    IdentityKind, Labels,
};
use spinor_frames::orientation::{
    compose, direction_of, from_euler, relative_orientation, to_euler,
};
use spinor_frames::wavefunctions::{rotor_wavefunction, ParticleState};

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn states(seed: u64, index: u64) -> (ParticleState, ParticleState) {
    let (u1, u2) = sampling::pair_at(seed, index);
    (ParticleState::new(u1), ParticleState::new(u2))
}

#[test]
fn legendre_rhs_matches_recurrence_oracle() {
    // The right side of the addition theorem is sqrt((2l+1)/4π) P_l(cos θ̄).
    let mut worst = 0.0f64;
    for index in 0..100 {
        let (u1, u2) = sampling::pair_at(700, index);
        let rel = relative_orientation(&u1, &u2);
        let (theta_bar, _) = direction_of(&rel);
        let rel_state = ParticleState::new(rel);
        for l in 0..=5i32 {
            let rhs = rotor_wavefunction(h(2 * l), h(0), &rel_state).unwrap();
            let oracle = (f64::from(2 * l + 1) / (4.0 * PI)).sqrt()
                * common::legendre_p(l as u32, theta_bar.cos());
            worst = worst.max((rhs.re - oracle).abs().max(rhs.im.abs()));
        }
    }
    assert!(worst < 1e-12, "{worst}");
}

#[test]
fn weak_boson_scalar_reduces_to_body_wavefunction() {
    // L = 0, l1 = l2 = l: the coupled lab sum collapses onto
    // (-1)^l ψ^l_0(1̄)/sqrt(4π).
    let mut worst = 0.0f64;
    for index in 0..50 {
        let (p1, p2) = states(701, index);
        let rel = ParticleState::new(relative_orientation(p1.orientation(), p2.orientation()));
        for l in 0..=3i32 {
            let weak = eval_weak_boson(h(0), h(0), h(2 * l), h(2 * l), &p1, &p2).unwrap();
            let body = rotor_wavefunction(h(2 * l), h(0), &rel).unwrap()
                * f64::from(h(2 * l).phase_sign())
                / (4.0 * PI).sqrt();
            worst = worst.max((weak - body).norm());
        }
    }
    assert!(worst < 1e-12, "{worst}");
}

#[test]
fn scalar_couplings_are_rotationally_invariant() {
    let mut worst = 0.0f64;
    for index in 0..25 {
        let (u1, u2) = sampling::pair_at(702, index);
        let r = sampling::orientation_at(703, index, 2);
        let (p1, p2) = (ParticleState::new(u1), ParticleState::new(u2));
        let (q1, q2) = (
            ParticleState::new(compose(&r, &u1)),
            ParticleState::new(compose(&r, &u2)),
        );
        for l in 0..=3i32 {
            let before = eval_weak_boson(h(0), h(0), h(2 * l), h(2 * l), &p1, &p2).unwrap();
            let after = eval_weak_boson(h(0), h(0), h(2 * l), h(2 * l), &q1, &q2).unwrap();
            worst = worst.max((before - after).norm());
        }
        for (tj, tl1, tl2) in [(1, 0, 0), (1, 2, 2), (3, 2, 4), (7, 6, 8)] {
            let before =
                eval_weak_fermion(h(0), h(0), h(tj), h(tj), h(tl1), h(tl2), &p1, &p2).unwrap();
            let after =
                eval_weak_fermion(h(0), h(0), h(tj), h(tj), h(tl1), h(tl2), &q1, &q2).unwrap();
            worst = worst.max((before - after).norm());
        }
        let before = singlet_lhs(&p1, &p2).unwrap();
        let after = singlet_lhs(&q1, &q2).unwrap();
        worst = worst.max((before - after).norm());
    }
    assert!(worst < 1e-12, "{worst}");
}

#[test]
fn legendre_left_side_is_exchange_symmetric() {
    let mut worst = 0.0f64;
    for index in 0..50 {
        let (p1, p2) = states(704, index);
        for l in 0..=5i32 {
            let forward = legendre_boson_lhs(h(2 * l), &p1, &p2).unwrap();
            let swapped = legendre_boson_lhs(h(2 * l), &p2, &p1).unwrap();
            worst = worst.max((forward - swapped).norm());
        }
    }
    assert!(worst < 1e-12, "{worst}");
}

#[test]
fn addition_left_side_is_exchange_antisymmetric() {
    let mut worst = 0.0f64;
    for index in 0..50 {
        let (p1, p2) = states(705, index);
        for tj in [1, 3, 5, 7] {
            for tl in [tj - 1, tj + 1] {
                let forward = addition_fermion_lhs(h(tj), h(tl), h(tl), &p1, &p2).unwrap();
                let swapped = addition_fermion_lhs(h(tj), h(tl), h(tl), &p2, &p1).unwrap();
                worst = worst.max((forward + swapped).norm());
            }
        }
    }
    assert!(worst < 1e-12, "{worst}");
}

#[test]
fn legendre_residual_ignores_axial_angles() {
    // Both sides of the boson addition theorem are blind to γ of either
    // particle: re-randomizing the axial angles moves nothing.
    let mut worst = 0.0f64;
    for index in 0..50 {
        let (u1, u2) = sampling::pair_at(706, index);
        let mut e1 = to_euler(&u1);
        let mut e2 = to_euler(&u2);
        e1.gamma = 4.0 * PI * sampling::unit_f64(707, index, 0);
        e2.gamma = 4.0 * PI * sampling::unit_f64(707, index, 1);
        let (p1, p2) = (ParticleState::new(u1), ParticleState::new(u2));
        let (q1, q2) = (
            ParticleState::new(from_euler(&e1)),
            ParticleState::new(from_euler(&e2)),
        );
        for l in 0..=5i32 {
            let l = h(2 * l);
            let lhs_residual = {
                let rel = ParticleState::new(relative_orientation(
                    p1.orientation(),
                    p2.orientation(),
                ));
                (legendre_boson_lhs(l, &p1, &p2).unwrap()
                    - rotor_wavefunction(l, h(0), &rel).unwrap())
                .norm()
            };
            let rerandomized_residual = {
                let rel = ParticleState::new(relative_orientation(
                    q1.orientation(),
                    q2.orientation(),
                ));
                (legendre_boson_lhs(l, &q1, &q2).unwrap()
                    - rotor_wavefunction(l, h(0), &rel).unwrap())
                .norm()
            };
            worst = worst.max((lhs_residual - rerandomized_residual).abs());
        }
    }
    assert!(worst < 1e-13, "{worst}");
}

#[test]
fn addition_fermion_requires_consistent_gamma_propagation() {
    let j = h(3);
    let (l1, l2) = (h(2), h(4));
    let mut max_broken = 0.0f64;
    let mut worst_consistent = 0.0f64;
    for index in 0..20 {
        let (u1, u2) = sampling::pair_at(708, index);
        let p1 = ParticleState::new(u1);
        let stale_rel = ParticleState::new(relative_orientation(&u1, &u2));

        let mut e2 = to_euler(&u2);
        e2.gamma = (e2.gamma + 0.7).rem_euclid(4.0 * PI);
        let perturbed = from_euler(&e2);
        let p2 = ParticleState::new(perturbed);
        let lhs = addition_fermion_lhs(j, l1, l2, &p1, &p2).unwrap();

        // Holding (1̄) fixed while γ₂ moved breaks the identity...
        let stale_rhs = addition_fermion_rhs(j, l1, l2, &stale_rel).unwrap();
        max_broken = max_broken.max((lhs - stale_rhs).norm());

        // ...recomputing (1̄) restores it.
        let fresh_rel = ParticleState::new(relative_orientation(&u1, &perturbed));
        let fresh_rhs = addition_fermion_rhs(j, l1, l2, &fresh_rel).unwrap();
        worst_consistent = worst_consistent.max((lhs - fresh_rhs).norm());
    }
    assert!(worst_consistent < 1e-12, "consistent path drifted: {worst_consistent}");
    assert!(max_broken > 1e-3, "stale body frame went unnoticed: {max_broken}");
}

#[test]
fn reports_are_bitwise_deterministic() {
    let opts = CheckOptions { samples: 40, record_per_sample: true, ..CheckOptions::default() };
    let labels = Labels { j: Some(h(3)), l1: Some(h(2)), l2: Some(h(2)), ..Labels::default() };
    let a = check_identity(IdentityKind::AdditionFermion, &labels, &opts).unwrap();
    let b = check_identity(IdentityKind::AdditionFermion, &labels, &opts).unwrap();
    assert_eq!(a.max_abs_residual.to_bits(), b.max_abs_residual.to_bits());
    let (pa, pb) = (a.per_sample.unwrap(), b.per_sample.unwrap());
    assert_eq!(pa.len(), pb.len());
    for (x, y) in pa.iter().zip(pb.iter()) {
        assert_eq!(x.residual.to_bits(), y.residual.to_bits());
    }
}

#[test]
fn full_sweep_passes_for_five_seeds() {
    let entries = standard_suite(7);
    for seed in [42, 7, 1234, 99_991, 20_260_808] {
        for entry in &entries {
            let report = check_identity(
                entry.kind,
                &entry.labels,
                &CheckOptions { samples: 100, seed, tolerance: 1e-12, record_per_sample: false },
            )
            .unwrap();
            assert!(
                report.pass,
                "seed {seed}: {} {:?} residual {}",
                entry.kind, report.params, report.max_abs_residual
            );
        }
    }
}
