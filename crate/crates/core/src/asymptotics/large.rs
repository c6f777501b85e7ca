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

use super::temperature::TempFunctions;
use crate::error::{domain, CpkError, Result};
use crate::lifshitz::{Quantity, Validity};
use crate::materials::{AtomModel, MetalModel};
use crate::units::DimensionlessState;

/// Below this separation the large-separation expansion is flagged.
pub const LARGE_BRANCH_MIN_SEPARATION: f64 = 0.5e-6;

/// The large-separation factor as a polynomial in the small parameters:
/// factor = base + beta_p1·β_p + beta_p2·β_p² + beta_a2·Σ_n c_n β_{A,n}².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LargeCoefficients {
    pub base: f64,
    pub beta_p1: f64,
    pub beta_p2: f64,
    pub beta_a2: f64,
}

impl LargeCoefficients {
    pub fn evaluate(&self, beta_p: f64, weighted_beta_a_sq: f64) -> f64 {
        self.base
            + beta_p * (self.beta_p1 + beta_p * self.beta_p2)
            + self.beta_a2 * weighted_beta_a_sq
    }
}

/// Coefficients at dimensionless temperature τ > 0.
pub fn large_coefficients(tau: f64, q: Quantity) -> Result<LargeCoefficients> {
    let t = TempFunctions::new(tau)?;
    let (s0, s1, s2, s3, s4, s5) = (t.s0, t.s1, t.s2, t.s3, t.s4, t.s5);
    Ok(match q {
        Quantity::Energy => {
            let p = tau / 6.0;
            LargeCoefficients {
                base: p * (1.0 + 2.0 * s0 + 2.0 * s1 + s2),
                beta_p1: -p * (3.0 * s2 + 3.0 * s3 - t.g(4)),
                beta_p2: p * (2.0 * s2 + 2.0 * s3 + 3.0 * s4 - s5 + t.g(6)),
                beta_a2: -p * (2.0 * s2 + 2.0 * s3 + s4),
            }
        }
        Quantity::Force => {
            let p = tau / 24.0;
            LargeCoefficients {
                base: p * (3.0 + 6.0 * s0 + 6.0 * s1 + 3.0 * s2 + s3),
                beta_p1: -2.0 * p * (3.0 * s2 + 3.0 * s3 + s4),
                beta_p2: p * (6.0 * s2 + 6.0 * s3 + 5.0 * s4 + 3.0 * s5 - t.g(6)),
                beta_a2: -p * (6.0 * s2 + 6.0 * s3 + 3.0 * s4 + s5),
            }
        }
    })
}

/// Σ_n c_n β_{A,n}², or `UnsupportedModel` for tabulated atoms.
pub(crate) fn weighted_beta_a_sq(state: &DimensionlessState, atom: &AtomModel) -> Result<f64> {
    let oscillators = atom.oscillators().ok_or_else(|| {
        CpkError::UnsupportedModel("asymptotic expansions need an oscillator polarizability".into())
    })?;
    Ok(oscillators
        .iter()
        .map(|o| o.weight * (state.omega_c / o.omega0).powi(2))
        .sum())
}

fn check_metal(metal: &MetalModel) -> Result<()> {
    match metal {
        MetalModel::Drude { .. } => Err(CpkError::UnsupportedModel(
            "asymptotic expansions assume a plasma or ideal wall".into(),
        )),
        _ => Ok(()),
    }
}

/// η or κ from the large-separation expansion at the state's temperature.
pub fn large_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    q: Quantity,
) -> Result<(f64, Validity)> {
    check_metal(metal)?;
    if !(state.tau > 0.0) {
        return Err(domain("the large-separation expansion needs T > 0"));
    }
    let sum_beta_sq = weighted_beta_a_sq(state, atom)?;
    let value = large_coefficients(state.tau, q)?.evaluate(state.beta_p, sum_beta_sq);
    let validity = if state.a < LARGE_BRANCH_MIN_SEPARATION {
        Validity::Warning("below_large_regime")
    } else {
        Validity::Ok
    };
    Ok((value, validity))
}

/// η(a, T) from the large-separation expansion.
///
/// ```
/// use cpk_core::{asymptotics::eta_large, materials::registry, units::reduce};
///
/// let reg = registry();
/// let he = &reg.atom("he-star").unwrap().model;
/// let state = reduce(2.0e-6, 300.0, &reg.gold, he).unwrap();
/// let (eta, _) = eta_large(&state, &reg.gold, he).unwrap();
/// assert!((eta - 0.9659).abs() < 1e-3);
/// ```
pub fn eta_large(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
) -> Result<(f64, Validity)> {
    large_factor(state, metal, atom, Quantity::Energy)
}

/// κ(a, T) from the large-separation expansion.
pub fn kappa_large(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
) -> Result<(f64, Validity)> {
    large_factor(state, metal, atom, Quantity::Force)
}

/// Classical high-temperature limit: η → τ/6, κ → τ/8.
pub fn high_t_factor(tau: f64, q: Quantity) -> Result<f64> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(domain(format!("τ must be positive, got {tau}")));
    }
    Ok(match q {
        Quantity::Energy => tau / 6.0,
        Quantity::Force => tau / 8.0,
    })
}
