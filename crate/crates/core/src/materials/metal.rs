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

/// Largest γ/ω_p ratio accepted for a Drude metal.
pub const DEFAULT_MAX_DRUDE_RATIO: f64 = 0.1;

/// Dielectric response of the wall on the imaginary frequency axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetalModel {
    Ideal,
    Plasma { omega_p: f64 },
    Drude { omega_p: f64, gamma: f64 },
}

/// ε(iξ), with an explicit marker for the divergent cases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Permittivity {
    Finite(f64),
    Infinite,
}

impl MetalModel {
    pub fn plasma(omega_p: f64) -> Result<Self> {
        if !(omega_p > 0.0) || !omega_p.is_finite() {
            return Err(CpkError::State(format!(
                "plasma frequency must be positive, got {omega_p}"
            )));
        }
        Ok(Self::Plasma { omega_p })
    }

    pub fn drude(omega_p: f64, gamma: f64) -> Result<Self> {
        Self::drude_with_limit(omega_p, gamma, DEFAULT_MAX_DRUDE_RATIO)
    }

    /// Drude metal with a caller-chosen upper bound on γ/ω_p.
    pub fn drude_with_limit(omega_p: f64, gamma: f64, max_ratio: f64) -> Result<Self> {
        Self::plasma(omega_p)?;
        if !(gamma > 0.0) || gamma >= max_ratio * omega_p {
            return Err(CpkError::State(format!(
                "Drude relaxation must satisfy 0 < γ < {max_ratio}·ω_p (γ = {gamma}, ω_p = {omega_p})"
            )));
        }
        Ok(Self::Drude { omega_p, gamma })
    }

    pub fn plasma_frequency(&self) -> Option<f64> {
        match *self {
            Self::Ideal => None,
            Self::Plasma { omega_p } | Self::Drude { omega_p, .. } => Some(omega_p),
        }
    }

    /// ε(iξ) for ξ ≥ 0.
    pub fn permittivity_at(&self, xi: f64) -> Result<Permittivity> {
        if !(xi >= 0.0) {
            return Err(domain(format!(
                "imaginary frequency must be nonnegative, got {xi}"
            )));
        }
        Ok(match *self {
            Self::Ideal => Permittivity::Infinite,
            _ if xi == 0.0 => Permittivity::Infinite,
            Self::Plasma { omega_p } => Permittivity::Finite(1.0 + (omega_p / xi).powi(2)),
            Self::Drude { omega_p, gamma } => {
                Permittivity::Finite(1.0 + omega_p * omega_p / (xi * (xi + gamma)))
            }
        })
    }
}
