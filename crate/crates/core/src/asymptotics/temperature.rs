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

use crate::error::{domain, Result};
use crate::special::expint_e1_scaled;

/// Temperature functions of the large-separation expansion.
///
/// With q = e^{−τ}:
/// s₀ = 1/(e^τ − 1), s₁ = τe^τ/(e^τ − 1)², … , s₅, and
/// g_i = τ^i Σ_{l≥1} l^i Γ(0, τl), computed on demand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TempFunctions {
    pub tau: f64,
    pub s0: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
    pub s4: f64,
    pub s5: f64,
}

impl TempFunctions {
    pub fn new(tau: f64) -> Result<Self> {
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(domain(format!("τ must be positive, got {tau}")));
        }
        let q = (-tau).exp();
        let d = -(-tau).exp_m1();
        let t = tau;
        let s0 = q / d;
        let s1 = t * q / (d * d);
        let s2 = t.powi(2) * q * (1.0 + q) / d.powi(3);
        let s3 = t.powi(3) * q * (1.0 + q * (4.0 + q)) / d.powi(4);
        let s4 = t.powi(4) * q * (1.0 + q * (11.0 + q * (11.0 + q))) / d.powi(5);
        let s5 = t.powi(5) * q * (1.0 + q * (26.0 + q * (66.0 + q * (26.0 + q)))) / d.powi(6);
        Ok(Self {
            tau,
            s0,
            s1,
            s2,
            s3,
            s4,
            s5,
        })
    }

    /// g_i = Σ_{l≥1} (τl)^i Γ(0, τl).
    pub fn g(&self, i: i32) -> f64 {
        let mut sum = 0.0;
        for l in 1..10_000_000u64 {
            let x = self.tau * l as f64;
            let term = (f64::from(i) * x.ln() - x).exp() * expint_e1_scaled(x);
            sum += term;
            if x > f64::from(i) + 1.0 && term <= 1e-17 * sum {
                break;
            }
        }
        sum
    }
}
