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

use super::config::ComputeConfig;
use super::reflection::{fresnel, Wall};
use crate::error::{domain, CpkError, Result};
use crate::materials::{AtomModel, MetalModel};
use crate::quadrature::laguerre60;
use crate::units::{reduce, K_B};
use std::f64::consts::PI;

/// Largest 4πα(0)N accepted as "rarefied".
pub const RAREFACTION_LIMIT: f64 = 1e-3;

/// ln(1 − x)/x, finite at x = 0.
#[inline]
fn ln1m_over(x: f64) -> f64 {
    if x.abs() < 1e-300 {
        -1.0
    } else {
        (-x).ln_1p() / x
    }
}

/// Free energy per unit area (J/m²) of a rarefied dielectric semispace of
/// atoms, ε_D(iξ) = 1 + 4πα(iξ)N, facing the metal wall across a gap `a`.
///
/// The term linear in N satisfies −∂_a F/N = F^AM(a, T), so the single-atom
/// results can be cross-checked against it.
pub fn two_semispace_free_energy(
    a: f64,
    temperature: f64,
    number_density: f64,
    atom: &AtomModel,
    metal: &MetalModel,
    cfg: &ComputeConfig,
) -> Result<f64> {
    cfg.validate()?;
    let alpha0 = atom
        .alpha0
        .ok_or_else(|| CpkError::Config("two-semispace energy needs α(0)".into()))?;
    if !(number_density >= 0.0) {
        return Err(domain("number density must be nonnegative"));
    }
    let strength = 4.0 * PI * alpha0 * number_density;
    if strength >= RAREFACTION_LIMIT {
        return Err(domain(format!(
            "4πα(0)N = {strength:e} exceeds the rarefaction limit"
        )));
    }
    let state = reduce(a, temperature, metal, atom)?;
    if !(state.tau > 0.0) {
        return Err(domain("two-semispace free energy needs T > 0"));
    }
    let wall = Wall::new(metal, state.omega_c);
    let rule = laguerre60();
    let mut sum = 0.0;
    let mut quiet = 0;
    for l in 0..cfg.matsubara_max_terms {
        let zeta = state.zeta(l);
        let decay = (-zeta).exp();
        if decay == 0.0 {
            break;
        }
        let delta = strength * atom.ratio_unchecked(zeta * state.omega_c);
        let integral = rule.integrate(|u| {
            let y = zeta + u;
            let (dp, dn) = if zeta == 0.0 {
                (delta / (2.0 + delta), 0.0)
            } else {
                fresnel(zeta * zeta * delta, zeta, y)
            };
            let (mp, mn) = wall.coefficients(cfg.reflection, zeta, y);
            let e = (-y).exp();
            let (ap, an) = (dp * mp, dn * mn);
            y * (ap * ln1m_over(ap * e) + an * ln1m_over(an * e))
        });
        let term = if l == 0 { 0.5 } else { 1.0 } * decay * integral;
        sum += term;
        if l > 0 && term.abs() <= cfg.matsubara_rel_tol * sum.abs() {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    Ok(K_B * temperature / (2.0 * PI) / (4.0 * a * a) * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::registry;

    fn he() -> AtomModel {
        registry()
            .atom("he-star")
            .unwrap()
            .model
            .clone()
            .with_alpha0(4.7e-29)
            .unwrap()
    }

    #[test]
    fn vanishes_without_atoms() {
        let reg = registry();
        let f = two_semispace_free_energy(
            1e-6,
            300.0,
            0.0,
            &he(),
            &reg.gold,
            &ComputeConfig::default(),
        )
        .unwrap();
        assert_eq!(f, 0.0);
    }

    #[test]
    fn linear_in_density() {
        let reg = registry();
        let cfg = ComputeConfig::default();
        let f1 = two_semispace_free_energy(1e-6, 300.0, 1e18, &he(), &reg.gold, &cfg).unwrap();
        let f2 = two_semispace_free_energy(1e-6, 300.0, 2e18, &he(), &reg.gold, &cfg).unwrap();
        assert!(f1 < 0.0);
        assert!((f2 / f1 - 2.0).abs() < 1e-8);
    }

    #[test]
    fn dense_medium_rejected() {
        let reg = registry();
        let r = two_semispace_free_energy(
            1e-6,
            300.0,
            1e25,
            &he(),
            &reg.gold,
            &ComputeConfig::default(),
        );
        assert!(matches!(r, Err(CpkError::Domain(_))));
    }
}
