//! Structural properties tying the SU(2) representation to the D matrices:
//! homomorphism, unitarity, the double-cover sign, and the relative
//! orientation acting as the group quotient.

use proptest::prelude::*;
use spinor_frames::halfint::{projections, HalfInt};
use spinor_frames::identities::sampling;
use spinor_frames::orientation::{
    compose, from_euler, relative_orientation, to_euler, EulerAngles, Orientation,
};
use spinor_frames::wigner::{wigner_big_d, DMatrixEntryLabel};
use spinor_frames::Amplitude;

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn d_matrix(j: HalfInt, u: &Orientation) -> Vec<Vec<Amplitude>> {
    let ms = projections(j).unwrap();
    ms.iter()
        .map(|&m| {
            ms.iter()
                .map(|&mp| wigner_big_d(DMatrixEntryLabel::new(j, m, mp), u))
                .collect()
        })
        .collect()
}

#[test]
fn homomorphism_over_200_seeded_pairs() {
    for tj in [1, 2, 3, 4, 5] {
        let j = h(tj);
        let dim = (tj + 1) as usize;
        let mut worst = 0.0f64;
        for index in 0..200 {
            let (u1, u2) = sampling::pair_at(1001, index);
            let product = d_matrix(j, &compose(&u1, &u2));
            let d1 = d_matrix(j, &u1);
            let d2 = d_matrix(j, &u2);
            for r in 0..dim {
                for c in 0..dim {
                    let contracted: Amplitude = (0..dim).map(|k| d1[r][k] * d2[k][c]).sum();
                    worst = worst.max((product[r][c] - contracted).norm());
                }
            }
        }
        assert!(worst < 1e-12, "j={j}: {worst}");
    }
}

#[test]
fn double_cover_sign_is_exact() {
    for tj in [1, 2, 3, 4, 5] {
        let j = h(tj);
        let sign = if tj % 2 == 0 { 1.0 } else { -1.0 };
        let mut worst = 0.0f64;
        for index in 0..50 {
            let u = sampling::orientation_at(77, index, 0);
            let flipped = u.antipode();
            for &m in &projections(j).unwrap() {
                for &mp in &projections(j).unwrap() {
                    let label = DMatrixEntryLabel::new(j, m, mp);
                    let direct = wigner_big_d(label, &u);
                    let mirrored = wigner_big_d(label, &flipped);
                    worst = worst.max((direct - sign * mirrored).norm());
                }
            }
        }
        assert!(worst < 1e-13, "j={j}: {worst}");
    }
}

#[test]
fn d_matrices_are_unitary() {
    for tj in [1, 2, 3, 4, 5] {
        let j = h(tj);
        let dim = (tj + 1) as usize;
        let mut worst = 0.0f64;
        for index in 0..50 {
            let u = sampling::orientation_at(4242, index, 1);
            let d = d_matrix(j, &u);
            for r in 0..dim {
                for c in 0..dim {
                    let dot: Amplitude = (0..dim).map(|k| d[r][k] * d[c][k].conj()).sum();
                    let want = if r == c { 1.0 } else { 0.0 };
                    worst = worst.max((dot - Amplitude::new(want, 0.0)).norm());
                }
            }
        }
        assert!(worst < 1e-13, "j={j}: {worst}");
    }
}

#[test]
fn relative_orientation_factorizes_spinor_rotations() {
    // D^{1/2}(u1) = D^{1/2}(u2) · D^{1/2}(ū) entrywise, 500 seeded pairs.
    let j = h(1);
    let mut worst = 0.0f64;
    for index in 0..500 {
        let (u1, u2) = sampling::pair_at(31_337, index);
        let rel = relative_orientation(&u1, &u2);
        let lhs = d_matrix(j, &u1);
        let d2 = d_matrix(j, &u2);
        let dr = d_matrix(j, &rel);
        for r in 0..2 {
            for c in 0..2 {
                let rhs: Amplitude = (0..2).map(|k| d2[r][k] * dr[k][c]).sum();
                worst = worst.max((lhs[r][c] - rhs).norm());
            }
        }
    }
    assert!(worst < 1e-13, "{worst}");
}

proptest! {
    #[test]
    fn euler_round_trip_is_entrywise(
        alpha in 0.0..(2.0 * std::f64::consts::PI),
        cos_beta in -1.0f64..1.0,
        gamma in 0.0..(4.0 * std::f64::consts::PI),
    ) {
        let u = from_euler(&EulerAngles::new(alpha, cos_beta.acos(), gamma));
        let back = from_euler(&to_euler(&u));
        prop_assert!(back.distance(&u) < 1e-12);
    }

    #[test]
    fn compose_then_invert_returns_home(
        a1 in 0.0..std::f64::consts::TAU, b1 in 0.0..std::f64::consts::PI,
        g1 in 0.0..(2.0 * std::f64::consts::TAU),
        a2 in 0.0..std::f64::consts::TAU, b2 in 0.0..std::f64::consts::PI,
        g2 in 0.0..(2.0 * std::f64::consts::TAU),
    ) {
        let u1 = from_euler(&EulerAngles::new(a1, b1, g1));
        let u2 = from_euler(&EulerAngles::new(a2, b2, g2));
        let rel = relative_orientation(&u1, &u2);
        prop_assert!(compose(&u2, &rel).distance(&u1) < 1e-13);
    }
}
