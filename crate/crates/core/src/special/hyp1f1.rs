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

use super::gamma::upper_gamma_cf;
use crate::error::{domain, Result};
use statrs::function::gamma::ln_gamma;

const EPS: f64 = 1e-17;

fn check(b: f64, x: f64) -> Result<()> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(domain(format!("₁F₁(1, b; x) needs b > 0 (b = {b})")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("₁F₁(1, b; x) needs finite x ≥ 0 (x = {x})")));
    }
    Ok(())
}

/// ₁F₁(1, b; x) = Σ_j Γ(b) x^j / Γ(b + j).
///
/// ```
/// let v = cpk_core::special::hyp1f1_one(2.0, 1.0).unwrap();
/// assert!((v - (std::f64::consts::E - 1.0)).abs() < 1e-14);
/// ```
pub fn hyp1f1_one(b: f64, x: f64) -> Result<f64> {
    check(b, x)?;
    if x < b {
        Ok(series(b, x))
    } else {
        Ok(scaled_unchecked(b, x) * x.exp())
    }
}

/// e^{−x}·₁F₁(1, b; x), bounded for all x ≥ 0.
pub fn hyp1f1_one_scaled(b: f64, x: f64) -> Result<f64> {
    check(b, x)?;
    Ok(scaled_unchecked(b, x))
}

pub(crate) fn scaled_unchecked(b: f64, x: f64) -> f64 {
    if x < b {
        return series(b, x) * (-x).exp();
    }
    if b == 1.0 {
        return 1.0;
    }
    // e^{−x} ₁F₁(1,b;x) = Γ(b) x^{1−b} − (b−1) e^{−x} K(b−1, x)
    let lead = (ln_gamma_exact(b) + (1.0 - b) * x.ln()).exp();
    lead - (b - 1.0) * (-x).exp() * upper_gamma_cf(b - 1.0, x)
}

fn series(b: f64, x: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut j = 0.0;
    loop {
        term *= x / (b + j);
        sum += term;
        j += 1.0;
        if term < EPS * sum || j > 10_000.0 {
            return sum;
        }
    }
}

/// ln Γ(b), exact-factorial based for small integer b.
fn ln_gamma_exact(b: f64) -> f64 {
    if b.fract() == 0.0 && b <= 171.0 {
        let mut p = 1.0f64;
        let mut k = 2.0;
        while k < b {
            p *= k;
            k += 1.0;
        }
        p.ln()
    } else {
        ln_gamma(b)
    }
}
