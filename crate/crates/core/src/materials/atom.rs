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

use super::table::PolarizabilityTable;
use crate::error::{domain, CpkError, Result};

/// One term c_n/(1 + ξ²/ω₀ₙ²) of an oscillator polarizability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillator {
    pub weight: f64,
    pub omega0: f64,
}

/// Frequency dependence of α(iξ)/α(0).
#[derive(Debug, Clone, PartialEq)]
pub enum Polarizability {
    Static,
    SingleOscillator { omega0: f64 },
    MultiOscillator(Vec<Oscillator>),
    Tabulated(PolarizabilityTable),
}

/// Dynamic polarizability of an atom. The static value α(0) (m³) is optional
/// because η and κ do not depend on it.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomModel {
    pub alpha0: Option<f64>,
    pub polarizability: Polarizability,
}

impl AtomModel {
    pub fn static_atom() -> Self {
        Self {
            alpha0: None,
            polarizability: Polarizability::Static,
        }
    }

    pub fn single_oscillator(omega0: f64) -> Result<Self> {
        if !(omega0 > 0.0) || !omega0.is_finite() {
            return Err(CpkError::State(format!(
                "oscillator frequency must be positive, got {omega0}"
            )));
        }
        Ok(Self {
            alpha0: None,
            polarizability: Polarizability::SingleOscillator { omega0 },
        })
    }

    pub fn multi_oscillator(terms: Vec<Oscillator>) -> Result<Self> {
        if terms.is_empty() {
            return Err(CpkError::State(
                "multi-oscillator model needs at least one term".into(),
            ));
        }
        if terms.iter().any(|t| !(t.weight > 0.0) || !(t.omega0 > 0.0)) {
            return Err(CpkError::State(
                "oscillator weights and frequencies must be positive".into(),
            ));
        }
        let total: f64 = terms.iter().map(|t| t.weight).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(CpkError::State(format!(
                "oscillator weights must sum to 1, got {total}"
            )));
        }
        Ok(Self {
            alpha0: None,
            polarizability: Polarizability::MultiOscillator(terms),
        })
    }

    pub fn tabulated(table: PolarizabilityTable) -> Self {
        Self {
            alpha0: None,
            polarizability: Polarizability::Tabulated(table),
        }
    }

    pub fn with_alpha0(mut self, alpha0: f64) -> Result<Self> {
        if !(alpha0 > 0.0) || !alpha0.is_finite() {
            return Err(CpkError::Config(format!(
                "α(0) must be positive, got {alpha0}"
            )));
        }
        self.alpha0 = Some(alpha0);
        Ok(self)
    }

    /// Oscillator terms; an empty list for a static atom and `None` for a
    /// tabulated one.
    pub fn oscillators(&self) -> Option<Vec<Oscillator>> {
        match &self.polarizability {
            Polarizability::Static => Some(Vec::new()),
            Polarizability::SingleOscillator { omega0 } => Some(vec![Oscillator {
                weight: 1.0,
                omega0: *omega0,
            }]),
            Polarizability::MultiOscillator(terms) => Some(terms.clone()),
            Polarizability::Tabulated(_) => None,
        }
    }

    /// α(iξ)/α(0) for ξ ≥ 0 (rad/s).
    pub fn ratio_at(&self, xi: f64) -> Result<f64> {
        if !(xi >= 0.0) {
            return Err(domain(format!(
                "imaginary frequency must be nonnegative, got {xi}"
            )));
        }
        Ok(self.ratio_unchecked(xi))
    }

    pub(crate) fn ratio_unchecked(&self, xi: f64) -> f64 {
        match &self.polarizability {
            Polarizability::Static => 1.0,
            Polarizability::SingleOscillator { omega0 } => 1.0 / (1.0 + (xi / omega0).powi(2)),
            Polarizability::MultiOscillator(terms) => terms
                .iter()
                .map(|t| t.weight / (1.0 + (xi / t.omega0).powi(2)))
                .sum(),
            Polarizability::Tabulated(table) => table.ratio_at(xi),
        }
    }
}
