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

use super::config::{ComputeConfig, Factor, Quantity, TruncationReport};
use super::kernel::y_integral;
use super::reflection::Wall;
use crate::error::{CpkError, Result};
use crate::materials::{AtomModel, MetalModel};
use crate::quadrature::integrate_adaptive;
use crate::units::DimensionlessState;

/// Upper limit of the ζ-integral; the integrand carries e^{−ζ}.
const ZETA_MAX: f64 = 250.0;

/// η(a, 0) or κ(a, 0): the Matsubara sum replaced by (1/12)∫₀^∞ dζ (or 1/48).
/// The temperature stored in `state` is ignored.
pub fn zero_t_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
    q: Quantity,
) -> Result<Factor> {
    cfg.validate()?;
    let wall = Wall::new(metal, state.omega_c);
    let mut failure: Option<CpkError> = None;
    let f = |zeta: f64| {
        let decay = (-zeta).exp();
        if decay == 0.0 {
            return 0.0;
        }
        match y_integral(&wall, cfg, zeta, q) {
            Ok(v) => atom.ratio_unchecked(zeta * state.omega_c) * decay * v,
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        }
    };
    let (v, _) = integrate_adaptive(f, 0.0, ZETA_MAX, cfg.zero_t_xi_rel_tol, 0.0)?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Factor {
        value: q.lifshitz_prefactor() * v,
        truncation: TruncationReport::default(),
    })
}

/// η(a, T = 0).
pub fn zero_t_energy_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
) -> Result<Factor> {
    zero_t_factor(state, metal, atom, cfg, Quantity::Energy)
}

/// κ(a, T = 0).
pub fn zero_t_force_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    cfg: &ComputeConfig,
) -> Result<Factor> {
    zero_t_factor(state, metal, atom, cfg, Quantity::Force)
}
