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

use super::config::{ComputeConfig, CorrectionResult, Factor, Method, Quantity, TruncationReport};
use super::kernel::y_integral;
use super::reflection::Wall;
use super::zero_t::zero_t_factor;
use crate::error::{domain, CpkError, Result};
use crate::materials::{AtomModel, MetalModel};
use crate::units::DimensionlessState;

/// Consecutive negligible terms required before the sum is cut.
const QUIET_TERMS: usize = 3;

/// η(a, T): the Lifshitz free energy divided by |E₀(a)|.
pub fn free_energy_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
) -> Result<Factor> {
    matsubara_factor(state, metal, atom, cfg, Quantity::Energy)
}

/// κ(a, T): the Lifshitz force divided by |F₀(a)|.
pub fn force_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
) -> Result<Factor> {
    matsubara_factor(state, metal, atom, cfg, Quantity::Force)
}

/// (τ/12)·Σ′_l α(iξ_l)/α(0)·∫_{ζ_l}^∞ e^{−y}{2y²r∥ + ζ_l²(r⊥ − r∥)} dy, and the
/// τ/48 force analogue with an extra factor y.
pub fn matsubara_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
    q: Quantity,
) -> Result<Factor> {
    cfg.validate()?;
    if !(state.tau > 0.0) {
        return Err(domain(
            "Matsubara summation needs T > 0; use the zero-temperature factor",
        ));
    }
    let wall = Wall::new(metal, state.omega_c);
    let prefactor = q.lifshitz_prefactor() * state.tau;
    let mut sum = 0.0;
    let mut quiet = 0;
    let mut prev;
    let mut last = 0.0;
    let mut l = 0usize;
    loop {
        if l >= cfg.matsubara_max_terms {
            return Err(CpkError::Truncation {
                partial: prefactor * sum,
                l_used: l,
            });
        }
        let zeta = state.zeta(l);
        let weight = if l == 0 { 0.5 } else { 1.0 };
        let ratio = atom.ratio_unchecked(zeta * state.omega_c);
        let decay = (-zeta).exp();
        let term = if decay == 0.0 || ratio == 0.0 {
            0.0
        } else {
            weight * ratio * decay * y_integral(&wall, cfg, zeta, q)?
        };
        sum += term;
        prev = last;
        last = term;
        l += 1;
        if l > 1 && term.abs() <= cfg.matsubara_rel_tol * sum.abs() {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    // Successive terms differ by e^{−τ} times an algebraically varying factor,
    // so their ratio tends to e^{−τ}: from below it is still rising, from above
    // it is falling. The larger of the two bounds the rest of the tail.
    let last_ratio = if prev != 0.0 { last / prev } else { 0.0 };
    let ratio = last_ratio.max((-state.tau).exp());
    let tail = if ratio > 0.0 && ratio < 1.0 {
        last * ratio / (1.0 - ratio)
    } else {
        last.abs()
    };
    Ok(Factor {
        value: prefactor * sum,
        truncation: TruncationReport {
            l_used: l,
            est_tail: (prefactor * tail).abs(),
        },
    })
}

/// η and κ from the Lifshitz formula; T = 0 switches to the continuous
/// frequency integral.
pub fn lifshitz_correction(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
) -> Result<CorrectionResult> {
    let (eta, kappa) = if state.tau > 0.0 {
        (
            free_energy_factor(state, metal, atom, cfg)?,
            force_factor(state, metal, atom, cfg)?,
        )
    } else {
        (
            zero_t_factor(state, metal, atom, cfg, Quantity::Energy)?,
            zero_t_factor(state, metal, atom, cfg, Quantity::Force)?,
        )
    };
    let mut r = CorrectionResult::new(eta.value, kappa.value, Method::Lifshitz);
    r.truncation = TruncationReport {
        l_used: eta.truncation.l_used.max(kappa.truncation.l_used),
        est_tail: eta.truncation.est_tail.max(kappa.truncation.est_tail),
    };
    r.with_absolute(state.a, atom.alpha0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::reduce;

    fn ideal_static(a: f64, t: f64) -> (DimensionlessState, MetalModel, AtomModel) {
        let atom = AtomModel::static_atom();
        let s = reduce(a, t, &MetalModel::Ideal, &atom).unwrap();
        (s, MetalModel::Ideal, atom)
    }

    #[test]
    fn high_temperature_limits() {
        // τ ≈ 14.8: the exponentially small corrections are below 1e-3.
        let (s, m, at) = ideal_static(9e-6, 300.0);
        let cfg = ComputeConfig::default();
        let eta = free_energy_factor(&s, &m, &at, &cfg).unwrap().value;
        let kappa = force_factor(&s, &m, &at, &cfg).unwrap().value;
        assert!((eta * 6.0 / s.tau - 1.0).abs() < 1e-3);
        assert!((kappa * 8.0 / s.tau - 1.0).abs() < 1e-3);
    }

    #[test]
    fn low_temperature_tends_to_one() {
        let (s, m, at) = ideal_static(1e-6, 1.0);
        let cfg = ComputeConfig::default();
        let eta = free_energy_factor(&s, &m, &at, &cfg).unwrap().value;
        assert!((eta - 1.0).abs() < 1e-6, "{eta}");
    }

    #[test]
    fn rejects_zero_temperature_and_reports_cap() {
        let (s, m, at) = ideal_static(1e-6, 0.0);
        assert!(free_energy_factor(&s, &m, &at, &ComputeConfig::default()).is_err());
        let (s, m, at) = ideal_static(1e-6, 300.0);
        let cfg = ComputeConfig {
            matsubara_max_terms: 2,
            ..Default::default()
        };
        assert!(matches!(
            free_energy_factor(&s, &m, &at, &cfg),
            Err(CpkError::Truncation { l_used: 2, .. })
        ));
    }
}
