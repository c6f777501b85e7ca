// Copyright 2026 The cpk authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Independent reference implementations shared by the integration tests.
//!
//! Nothing here calls into the crate's special functions or quadrature: the
//! oracles use double-exponential quadrature and elementary functions only.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

/// Tanh-sinh quadrature of `f` over [a, b], refining the step until two
/// successive levels agree to `tol` relative.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let h_half = 0.5 * (b - a);
    let point = |t: f64| {
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let x = u.tanh();
        let w = FRAC_PI_2 * t.cosh() / (cu * cu);
        // Distance to the nearer endpoint computed without cancellation.
        let dist = h_half / (u.abs().exp() * cu);
        let xx = if x < 0.0 { a + dist } else { b - dist };
        if dist == 0.0 {
            0.0
        } else {
            let v = w * f(xx);
            if v.is_finite() {
                v
            } else {
                0.0
            }
        }
    };
    de_refine(point, 3.5, tol) * h_half
}

/// Exp-sinh quadrature of `f` over [a, ∞) for integrands that decay at
/// least exponentially.
pub fn exp_sinh(f: impl Fn(f64) -> f64, a: f64, tol: f64) -> f64 {
    let point = |t: f64| {
        let e = (FRAC_PI_2 * t.sinh()).exp();
        let w = FRAC_PI_2 * t.cosh() * e;
        let v = w * f(a + e);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    de_refine(point, 4.0, tol)
}

fn de_refine(point: impl Fn(f64) -> f64, t_max: f64, tol: f64) -> f64 {
    let mut h = 0.5;
    let mut sum: f64 = point(0.0);
    let mut k = 1;
    while (k as f64) * h <= t_max {
        let t = k as f64 * h;
        sum += point(t) + point(-t);
        k += 1;
    }
    let mut estimate = sum * h;
    for _ in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= t_max {
            let t = k as f64 * h;
            sum += point(t) + point(-t);
            k += 2;
        }
        let next = sum * h;
        if (next - estimate).abs() <= tol * next.abs() {
            return next;
        }
        estimate = next;
    }
    estimate
}

/// E₁(x) = Γ(0, x) by quadrature of ∫₁^∞ e^{−xt}/t dt.
pub fn e1(x: f64) -> f64 {
    exp_sinh(|t| (-x * (1.0 + t)).exp() / (1.0 + t), 0.0, 1e-15)
}

/// Γ(n, x) for integer n by direct quadrature of ∫ₓ^∞ t^{n−1}e^{−t} dt.
pub fn gamma_upper(n: i32, x: f64) -> f64 {
    let scale = (-x).exp();
    scale * exp_sinh(|u| (x + u).powi(n - 1) * (-u).exp(), 0.0, 1e-15)
}

/// A_k(y) = ∫₀^y z^{2k}/(1 + β²z²) dz for k ≤ 3, by series when βy is
/// small and by the arctangent closed form otherwise.
pub fn a_k(k: u32, y: f64, beta: f64) -> f64 {
    let by = beta * y;
    if by < 0.5 {
        let mut sum = 0.0;
        let mut pow = y.powi(2 * k as i32 + 1);
        let b2 = -by * by;
        for j in 0..200 {
            let term = pow / f64::from(2 * k + 2 * j + 1);
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
            pow *= b2;
        }
        sum
    } else {
        let b2 = beta * beta;
        let a0 = by.atan() / beta;
        let a1 = (y - a0) / b2;
        let a2 = (y.powi(3) / 3.0 - a1) / b2;
        let a3 = (y.powi(5) / 5.0 - a2) / b2;
        [a0, a1, a2, a3][k as usize]
    }
}

/// The zero-temperature β_p-expansion blocks (J0, J1, J2) of the
/// short-separation factor for a single oscillator, integration order
/// swapped so only elementary functions remain. `force` adds the extra y.
pub fn zero_t_blocks(beta: f64, force: bool) -> [f64; 3] {
    let w = |y: f64| if force { y } else { 1.0 };
    let split = 1.0 / beta;
    let tol = 1e-14;
    let integral = |g: &dyn Fn(f64) -> f64| {
        tanh_sinh(g, 0.0, split, tol) + exp_sinh(|u| g(split + u), 0.0, tol)
    };
    let j0 = integral(&|y: f64| (-y).exp() * w(y) * y * y * a_k(0, y, beta));
    let j1 = integral(&|y: f64| {
        if y == 0.0 {
            return 0.0;
        }
        (-y).exp() * w(y) * (a_k(2, y, beta) / y - 3.0 * y * a_k(1, y, beta))
    });
    let j2 = integral(&|y: f64| {
        if y == 0.0 {
            return 0.0;
        }
        (-y).exp()
            * w(y)
            * (2.0 * a_k(2, y, beta) - a_k(3, y, beta) / (y * y) + y * y * a_k(1, y, beta))
    });
    [j0, j1, j2]
}

/// Reference short-separation factor: (J0 + J1β_p + J2β_p²)/6 for the
/// energy, /24 for the force.
pub fn zero_t_short_factor(beta_a: f64, beta_p: f64, force: bool) -> f64 {
    let [j0, j1, j2] = zero_t_blocks(beta_a, force);
    let norm = if force { 24.0 } else { 6.0 };
    (j0 + beta_p * (j1 + beta_p * j2)) / norm
}

/// g_i(τ) = Σ_{l≥1} (τl)^i Γ(0, τl) with quadrature E₁.
pub fn g_sum(tau: f64, i: i32) -> f64 {
    let mut sum = 0.0;
    for l in 1..100_000 {
        let x = tau * l as f64;
        let term = x.powi(i) * e1(x);
        sum += term;
        if x > 40.0 && term < 1e-17 * sum {
            break;
        }
    }
    sum
}

/// Relative difference |a − b|/|b|.
pub fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}
