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

use super::series::{check_beta, sigma_scaled};
use crate::error::{CpkError, Result};
use crate::lifshitz::{Factor, Quantity, TruncationReport, Validity};
use crate::materials::{AtomModel, MetalModel};
use crate::special::ln_gamma_scaled_unchecked;
use crate::units::DimensionlessState;
use std::f64::consts::FRAC_PI_2;

/// Above this separation the zero-temperature short-distance form is flagged.
pub const SHORT_BRANCH_MAX_SEPARATION: f64 = 1.5e-6;

/// Coefficients of β_p⁰, β_p¹ and β_p² in the short-separation bracket for a
/// single oscillator term, before the 1/6 (energy) or 1/24 (force) prefactor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShortBlocks {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
    /// Largest number of terms used by any of the six series.
    pub terms: usize,
    /// Sum of the series error estimates, in units of the bracket.
    pub error_estimate: f64,
}

impl ShortBlocks {
    /// b0 + b1·β_p + b2·β_p².
    pub fn bracket(&self, beta_p: f64) -> f64 {
        self.b0 + beta_p * (self.b1 + beta_p * self.b2)
    }

    /// The static-atom (β_A → 0) limit.
    pub fn static_limit(q: Quantity) -> Self {
        let (b0, b1, b2) = match q {
            Quantity::Energy => (6.0, -19.2, 120.0 * 62.0 / 105.0),
            Quantity::Force => (24.0, -96.0, 720.0 * 62.0 / 105.0),
        };
        Self {
            b0,
            b1,
            b2,
            terms: 0,
            error_estimate: 0.0,
        }
    }
}

fn prefactor(q: Quantity) -> f64 {
    match q {
        Quantity::Energy => 1.0 / 6.0,
        Quantity::Force => 1.0 / 24.0,
    }
}

/// The three blocks at β_A = `beta` (0 ≤ β < 1).
///
/// ```
/// use cpk_core::asymptotics::short_blocks;
/// use cpk_core::Quantity;
///
/// let b = short_blocks(1e-3, Quantity::Energy).unwrap();
/// assert!((b.b0 - 6.0).abs() < 1e-3);
/// ```
pub fn short_blocks(beta: f64, q: Quantity) -> Result<ShortBlocks> {
    if beta == 0.0 {
        return Ok(ShortBlocks::static_limit(q));
    }
    check_beta(beta)?;
    let x = 1.0 / beta;
    let lx = x.ln();
    let shift = match q {
        Quantity::Energy => 0,
        Quantity::Force => 1,
    };
    // x^m·Γ(δ, x) with the quantity substitution applied to δ.
    let pg = |m: f64, delta: i32| (m * lx + ln_gamma_scaled_unchecked(delta + shift, x) - x).exp();
    let s: Vec<_> = (1..=6)
        .map(|w| sigma_scaled(beta, w, q))
        .collect::<Result<_>>()?;
    let b0 = x.powi(4) * s[0].value + FRAC_PI_2 * pg(1.0, 3) - x * s[1].value;
    let b1 = 4.0 * x.powi(5) * s[2].value + FRAC_PI_2 * (pg(5.0, 0) + 3.0 * pg(3.0, 2))
        - 4.0 * pg(4.0, 1)
        - 8.0 / 3.0 * pg(2.0, 3)
        + 4.0 * s[3].value;
    let b2 = -x.powi(6) * s[4].value - 10.0 / 3.0 * pg(6.0, 0) - 2.0 / 3.0 * pg(4.0, 2)
        + 22.0 / 15.0 * pg(2.0, 4)
        + FRAC_PI_2 * (2.0 * pg(5.0, 1) + pg(7.0, -1) - pg(3.0, 3))
        + s[5].value;
    let weights = [x.powi(4), x, 4.0 * x.powi(5), 4.0, x.powi(6), 1.0];
    let error_estimate = s
        .iter()
        .zip(weights)
        .map(|(t, w)| t.error_estimate * w)
        .sum();
    let terms = s.iter().map(|t| t.terms).max().unwrap_or(0);
    Ok(ShortBlocks {
        b0,
        b1,
        b2,
        terms,
        error_estimate,
    })
}

/// η(a, 0) from the short-separation expansion.
pub fn eta_short(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
) -> Result<(Factor, Validity)> {
    short_factor(state, metal, atom, Quantity::Energy)
}

/// κ(a, 0) from the short-separation expansion.
pub fn kappa_short(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
) -> Result<(Factor, Validity)> {
    short_factor(state, metal, atom, Quantity::Force)
}

/// Σ_n c_n·(1/6 or 1/24)·[B0 + B1β_p + B2β_p²] at β_A = β_{A,n}. The
/// temperature in `state` is ignored.
pub fn short_factor(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    q: Quantity,
) -> Result<(Factor, Validity)> {
    if let MetalModel::Drude { .. } = metal {
        return Err(CpkError::UnsupportedModel(
            "asymptotic expansions assume a plasma or ideal wall".into(),
        ));
    }
    let oscillators = atom.oscillators().ok_or_else(|| {
        CpkError::UnsupportedModel("asymptotic expansions need an oscillator polarizability".into())
    })?;
    let pairs: Vec<(f64, f64)> = if oscillators.is_empty() {
        vec![(1.0, 0.0)]
    } else {
        oscillators
            .iter()
            .map(|o| (o.weight, state.omega_c / o.omega0))
            .collect()
    };
    let mut value = 0.0;
    let mut report = TruncationReport::default();
    for (weight, beta) in pairs {
        let blocks = short_blocks(beta, q)?;
        value += weight * blocks.bracket(state.beta_p);
        report.l_used = report.l_used.max(blocks.terms);
        report.est_tail += weight * blocks.error_estimate * prefactor(q);
    }
    let mut validity = Validity::Ok;
    if state.beta_p > 1.0 / (4.0 * std::f64::consts::PI) {
        validity = Validity::Warning("below_plasma_wavelength");
    } else if state.a > SHORT_BRANCH_MAX_SEPARATION {
        validity = Validity::Warning("beyond_short_regime");
    }
    Ok((
        Factor {
            value: prefactor(q) * value,
            truncation: report,
        },
        validity,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::registry;
    use crate::units::reduce;

    #[test]
    fn static_limit_is_approached() {
        for q in [Quantity::Energy, Quantity::Force] {
            let lim = ShortBlocks::static_limit(q);
            let b = short_blocks(2e-3, q).unwrap();
            assert!((b.b0 / lim.b0 - 1.0).abs() < 2e-2);
            assert!((b.b1 / lim.b1 - 1.0).abs() < 2e-2);
            assert!((b.b2 / lim.b2 - 1.0).abs() < 5e-2);
        }
    }

    #[test]
    fn ideal_static_short_factor_is_one() {
        let state = reduce(0.3e-6, 0.0, &MetalModel::Ideal, &AtomModel::static_atom()).unwrap();
        let (eta, _) = eta_short(&state, &MetalModel::Ideal, &AtomModel::static_atom()).unwrap();
        let (kappa, _) =
            kappa_short(&state, &MetalModel::Ideal, &AtomModel::static_atom()).unwrap();
        assert_eq!(eta.value, 1.0);
        assert_eq!(kappa.value, 1.0);
    }

    #[test]
    fn out_of_regime_is_refused() {
        let reg = registry();
        let he = &reg.atom("he-star").unwrap().model;
        let state = reduce(50e-9, 0.0, &reg.gold, he).unwrap();
        assert!(matches!(
            eta_short(&state, &reg.gold, he),
            Err(CpkError::OutOfRegime(_))
        ));
    }

    #[test]
    fn validity_flags() {
        let reg = registry();
        let he = &reg.atom("he-star").unwrap().model;
        let near = reduce(120e-9, 0.0, &reg.gold, he).unwrap();
        assert_eq!(
            eta_short(&near, &reg.gold, he).unwrap().1,
            Validity::Warning("below_plasma_wavelength")
        );
        let far = reduce(3e-6, 0.0, &reg.gold, he).unwrap();
        assert_eq!(
            eta_short(&far, &reg.gold, he).unwrap().1,
            Validity::Warning("beyond_short_regime")
        );
        let mid = reduce(0.5e-6, 0.0, &reg.gold, he).unwrap();
        assert_eq!(eta_short(&mid, &reg.gold, he).unwrap().1, Validity::Ok);
    }
}
