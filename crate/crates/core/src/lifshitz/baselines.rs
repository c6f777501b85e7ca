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

use crate::error::{domain, CpkError, Result};
use crate::units::{C, HBAR};
use std::f64::consts::PI;

/// Ideal-metal, static-polarizability, zero-temperature energy E₀ = −3ħcα(0)/(8πa⁴)
/// and force F₀ = −3ħcα(0)/(2πa⁵). α(0) is a polarizability volume in m³.
pub fn ideal_baselines(a: f64, alpha0: Option<f64>) -> Result<(f64, f64)> {
    if !(a > 0.0) {
        return Err(domain(format!("separation must be positive, got {a} m")));
    }
    let alpha0 = alpha0.ok_or_else(|| CpkError::Config("absolute values need α(0)".into()))?;
    let e0 = -3.0 * HBAR * C * alpha0 / (8.0 * PI * a.powi(4));
    let f0 = -3.0 * HBAR * C * alpha0 / (2.0 * PI * a.powi(5));
    Ok((e0, f0))
}

/// Casimir energy per unit area between two ideal-metal plates, −π²ħc/(720a³).
pub fn plate_energy(a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(domain(format!("separation must be positive, got {a} m")));
    }
    Ok(-PI * PI * HBAR * C / (720.0 * a.powi(3)))
}
