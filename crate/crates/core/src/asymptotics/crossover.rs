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

use super::large::large_factor;
use super::short::short_factor;
use crate::error::{domain, Result};
use crate::lifshitz::{CorrectionResult, Method, Quantity, TruncationReport, Validity};
use crate::materials::{AtomModel, MetalModel};
use crate::units::{reduce, DimensionlessState};

/// Separations (m) below which the short-separation branch is used, one for
/// the energy and one for the force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JoiningPoints {
    pub energy: f64,
    pub force: f64,
}

impl JoiningPoints {
    pub fn get(&self, q: Quantity) -> f64 {
        match q {
            Quantity::Energy => self.energy,
            Quantity::Force => self.force,
        }
    }
}

/// How [`crossover_select`] chooses the branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CrossoverPolicy {
    /// Use these joining points.
    Fixed(JoiningPoints),
    /// Locate the joining points with [`auto_joining_points`] on every call.
    Auto,
}

/// Search window and resolution of the automatic joining point.
pub const JOIN_GRID_START: f64 = 0.8e-6;
pub const JOIN_GRID_STOP: f64 = 2.0e-6;
pub const JOIN_GRID_POINTS: usize = 20;

/// `n` logarithmically spaced points from `start` to `stop` inclusive.
pub fn log_grid(start: f64, stop: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let (l0, l1) = (start.ln(), stop.ln());
            (0..n)
                .map(|i| {
                    if i == 0 {
                        start
                    } else if i == n - 1 {
                        stop
                    } else {
                        (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp()
                    }
                })
                .collect()
        }
    }
}

/// Both branches at separation `a`: (short, large).
pub fn branch_pair(
    a: f64,
    temperature: f64,
    metal: &MetalModel,
    atom: &AtomModel,
    q: Quantity,
) -> Result<(f64, f64)> {
    let state = reduce(a, temperature, metal, atom)?;
    let short = short_factor(&state, metal, atom, q)?.0.value;
    let large = large_factor(&state, metal, atom, q)?.0;
    Ok((short, large))
}

/// Joining point for one quantity: on the search grid, the first interior
/// local minimum of |short − large|, or the global minimum if the gap is
/// monotone over the window.
pub fn auto_joining_point(
    metal: &MetalModel,
    atom: &AtomModel,
    temperature: f64,
    q: Quantity,
) -> Result<f64> {
    if !(temperature > 0.0) {
        return Err(domain("automatic joining needs T > 0"));
    }
    let grid = log_grid(JOIN_GRID_START, JOIN_GRID_STOP, JOIN_GRID_POINTS);
    let gaps = grid
        .iter()
        .map(|&a| branch_pair(a, temperature, metal, atom, q).map(|(s, l)| (s - l).abs()))
        .collect::<Result<Vec<_>>>()?;
    let interior = (1..gaps.len() - 1).find(|&i| gaps[i] <= gaps[i - 1] && gaps[i] <= gaps[i + 1]);
    let index = interior.unwrap_or_else(|| {
        gaps.iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0)
    });
    Ok(grid[index])
}

/// Energy and force joining points.
pub fn auto_joining_points(
    metal: &MetalModel,
    atom: &AtomModel,
    temperature: f64,
) -> Result<JoiningPoints> {
    Ok(JoiningPoints {
        energy: auto_joining_point(metal, atom, temperature, Quantity::Energy)?,
        force: auto_joining_point(metal, atom, temperature, Quantity::Force)?,
    })
}

/// η and κ from whichever asymptotic branch applies at `state.a`.
///
/// At T = 0 the short-separation branch is used at every separation.
pub fn crossover_select(
    state: &DimensionlessState,
    metal: &MetalModel,
    atom: &AtomModel,
    policy: CrossoverPolicy,
) -> Result<CorrectionResult> {
    let joining = match policy {
        CrossoverPolicy::Fixed(j) => Some(j),
        CrossoverPolicy::Auto if state.tau > 0.0 => {
            Some(auto_joining_points(metal, atom, state.temperature)?)
        }
        CrossoverPolicy::Auto => None,
    };
    let pick = |q: Quantity| -> Result<(f64, Method, Validity, TruncationReport)> {
        let use_short = state.tau == 0.0 || joining.is_none_or(|j| state.a < j.get(q));
        if use_short {
            let (f, v) = short_factor(state, metal, atom, q)?;
            Ok((f.value, Method::AsymptShort, v, f.truncation))
        } else {
            let (value, v) = large_factor(state, metal, atom, q)?;
            Ok((value, Method::AsymptLarge, v, TruncationReport::default()))
        }
    };
    let (eta, method, v_eta, t_eta) = pick(Quantity::Energy)?;
    let (kappa, kappa_method, v_kappa, t_kappa) = pick(Quantity::Force)?;
    let mut result = CorrectionResult::new(eta, kappa, method);
    result.kappa_method = kappa_method;
    result.validity = v_eta.or(v_kappa);
    result.truncation = TruncationReport {
        l_used: t_eta.l_used.max(t_kappa.l_used),
        est_tail: t_eta.est_tail.max(t_kappa.est_tail),
    };
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::registry;

    #[test]
    fn grid_endpoints() {
        let g = log_grid(0.8e-6, 2.0e-6, 20);
        assert_eq!(g.len(), 20);
        assert_eq!(g[0], 0.8e-6);
        assert_eq!(g[19], 2.0e-6);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn branch_choice_follows_joining_points() {
        let reg = registry();
        let he = reg.atom("he-star").unwrap();
        let policy = CrossoverPolicy::Fixed(he.joining);
        let near = reduce(150e-9, 300.0, &reg.gold, &he.model).unwrap();
        let r = crossover_select(&near, &reg.gold, &he.model, policy).unwrap();
        assert_eq!(
            (r.method, r.kappa_method),
            (Method::AsymptShort, Method::AsymptShort)
        );
        let mid = reduce(1.4e-6, 300.0, &reg.gold, &he.model).unwrap();
        let r = crossover_select(&mid, &reg.gold, &he.model, policy).unwrap();
        assert_eq!(
            (r.method, r.kappa_method),
            (Method::AsymptLarge, Method::AsymptShort)
        );
        let far = reduce(8e-6, 300.0, &reg.gold, &he.model).unwrap();
        let r = crossover_select(&far, &reg.gold, &he.model, policy).unwrap();
        assert_eq!(r.method, Method::AsymptLarge);
        assert!((r.eta / (far.tau / 6.0) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn zero_temperature_uses_short_branch() {
        let reg = registry();
        let na = &reg.atom("na").unwrap().model;
        let s = reduce(3e-6, 0.0, &reg.gold, na).unwrap();
        let r = crossover_select(&s, &reg.gold, na, CrossoverPolicy::Auto).unwrap();
        assert_eq!(r.method, Method::AsymptShort);
    }
}
