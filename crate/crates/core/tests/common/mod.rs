//! Independent oracles shared by the integration tests.
//!
//! Everything here is computed by textbook recurrences, never through the
//! library's D-matrix or coupling machinery, so agreement is evidence rather
//! than tautology.

#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

/// Associated Legendre function P_l^m(x) by the standard three-term
/// recurrence, without the Condon-Shortley factor (Numerical Recipes form).
pub fn assoc_legendre(l: u32, m: u32, x: f64) -> f64 {
    assert!(m <= l, "assoc_legendre requires m <= l");
    let somx2 = ((1.0 - x) * (1.0 + x)).sqrt();
    let mut pmm = 1.0;
    for i in 1..=m {
        pmm *= (2 * i - 1) as f64 * somx2;
    }
    if l == m {
        return pmm;
    }
    let mut pmmp1 = x * (2 * m + 1) as f64 * pmm;
    if l == m + 1 {
        return pmmp1;
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        pll = (x * (2 * ll - 1) as f64 * pmmp1 - (ll + m - 1) as f64 * pmm) / (ll - m) as f64;
        pmm = pmmp1;
        pmmp1 = pll;
    }
    pll
}

/// Legendre polynomial P_l(x).
pub fn legendre_p(l: u32, x: f64) -> f64 {
    assoc_legendre(l, 0, x)
}

/// Spherical harmonic Y_{l m}(theta, phi) with the Condon-Shortley phase,
/// built from the recurrence above and exact factorial ratios.
pub fn sph_harm(l: i32, m: i32, theta: f64, phi: f64) -> Complex64 {
    assert!(m.abs() <= l);
    if m < 0 {
        let conj = sph_harm(l, -m, theta, phi).conj();
        return if (-m) % 2 == 0 { conj } else { -conj };
    }
    let mut ratio = 1.0; // (l - m)! / (l + m)!
    for k in (l - m + 1)..=(l + m) {
        ratio /= k as f64;
    }
    let norm = (f64::from(2 * l + 1) / (4.0 * PI) * ratio).sqrt();
    let cs_phase = if m % 2 == 0 { 1.0 } else { -1.0 };
    let plm = assoc_legendre(l as u32, m as u32, theta.cos());
    cs_phase * norm * plm * Complex64::from_polar(1.0, f64::from(m) * phi)
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            // Evaluate P_n(x) and P_{n-1}(x) by upward recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = pk;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let mut p0 = 1.0;
        let mut p1 = x;
        for k in 2..=n {
            let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
            p0 = p1;
            p1 = pk;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (nodes, weights) = gauss_legendre(16);
        // Integral of x^k over [-1, 1].
        for k in 0..=31u32 {
            let quad: f64 = nodes
                .iter()
                .zip(&weights)
                .map(|(x, w)| w * x.powi(k as i32))
                .sum();
            let exact = if k % 2 == 1 { 0.0 } else { 2.0 / f64::from(k + 1) };
            assert!((quad - exact).abs() < 1e-14, "x^{k}");
        }
    }

    #[test]
    fn legendre_values() {
        assert!((legendre_p(1, 0.5) - 0.5).abs() < 1e-15);
        assert!((legendre_p(2, 0.5) - (3.0 * 0.25 - 1.0) / 2.0).abs() < 1e-15);
    }
}
