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

use crate::error::{CpkError, Result};
use crate::lifshitz::baselines::ideal_baselines;
use std::fmt;

/// Reflection coefficients used for the metal wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReflectionModel {
    /// Exact Fresnel coefficients of the semi-infinite medium.
    #[default]
    Fresnel,
    /// Leontovich surface-impedance coefficients with Z = ζ/√(ζ² + ζ²(ε − 1)).
    Impedance,
}

/// Which correction factor is being computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// η, the free-energy factor.
    Energy,
    /// κ, the force factor.
    Force,
}

impl Quantity {
    /// Normalization of the Matsubara sum: F/E₀ = (τ/12)Σ′…, force uses τ/48.
    pub(crate) fn lifshitz_prefactor(self) -> f64 {
        match self {
            Self::Energy => 1.0 / 12.0,
            Self::Force => 1.0 / 48.0,
        }
    }
}

/// Which evaluation produced a correction factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Lifshitz,
    AsymptLarge,
    AsymptShort,
    HighT,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Lifshitz => "lifshitz",
            Self::AsymptLarge => "asympt_large",
            Self::AsymptShort => "asympt_short",
            Self::HighT => "high_T",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Soft regime check attached to every result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validity {
    #[default]
    Ok,
    Warning(&'static str),
}

impl Validity {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::Warning(w) => w,
        }
    }

    pub(crate) fn or(self, other: Self) -> Self {
        match self {
            Self::Ok => other,
            w => w,
        }
    }
}

/// Numerical knobs for the direct Lifshitz evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComputeConfig {
    /// Relative tolerance of each y-integral.
    pub quad_rel_tol: f64,
    /// A Matsubara term is negligible below this fraction of the running sum.
    pub matsubara_rel_tol: f64,
    /// Hard cap on the number of Matsubara terms.
    pub matsubara_max_terms: usize,
    /// Relative tolerance of the ζ-integral at T = 0.
    pub zero_t_xi_rel_tol: f64,
    pub reflection: ReflectionModel,
}

impl Default for ComputeConfig {
    fn default() -> Self {
        Self {
            quad_rel_tol: 1e-10,
            matsubara_rel_tol: 1e-10,
            matsubara_max_terms: 1_000_000,
            zero_t_xi_rel_tol: 1e-9,
            reflection: ReflectionModel::Fresnel,
        }
    }
}

impl ComputeConfig {
    pub fn with_reflection(mut self, reflection: ReflectionModel) -> Self {
        self.reflection = reflection;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("quad_rel_tol", self.quad_rel_tol),
            ("matsubara_rel_tol", self.matsubara_rel_tol),
            ("zero_t_xi_rel_tol", self.zero_t_xi_rel_tol),
        ] {
            if !(v > 0.0 && v <= 1e-3) {
                return Err(CpkError::Config(format!(
                    "{name} must lie in (0, 1e-3], got {v}"
                )));
            }
        }
        if self.matsubara_max_terms == 0 {
            return Err(CpkError::Config(
                "matsubara_max_terms must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// How a Matsubara sum was truncated.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TruncationReport {
    /// Number of Matsubara terms summed (0 for closed forms and T = 0 integrals).
    pub l_used: usize,
    /// Geometric estimate of the neglected tail, in units of the factor.
    pub est_tail: f64,
}

/// One correction factor with its truncation report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Factor {
    pub value: f64,
    pub truncation: TruncationReport,
}

/// Both correction factors, optional absolute values and their origin.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionResult {
    pub eta: f64,
    pub kappa: f64,
    /// η·E₀ in J, present when α(0) is known.
    pub energy: Option<f64>,
    /// κ·F₀ in N, present when α(0) is known.
    pub force: Option<f64>,
    pub method: Method,
    pub kappa_method: Method,
    pub truncation: TruncationReport,
    pub validity: Validity,
}

impl CorrectionResult {
    pub fn new(eta: f64, kappa: f64, method: Method) -> Self {
        Self {
            eta,
            kappa,
            energy: None,
            force: None,
            method,
            kappa_method: method,
            truncation: TruncationReport::default(),
            validity: Validity::Ok,
        }
    }

    /// Fills `energy` and `force` from α(0); leaves them empty when α(0) is
    /// unknown.
    pub fn with_absolute(mut self, a: f64, alpha0: Option<f64>) -> Result<Self> {
        if let Some(alpha0) = alpha0 {
            let (e0, f0) = ideal_baselines(a, Some(alpha0))?;
            self.energy = Some(self.eta * e0);
            self.force = Some(self.kappa * f0);
        }
        Ok(self)
    }

    /// Method label; a single tag when both factors share a branch.
    pub fn method_label(&self) -> String {
        if self.method == self.kappa_method {
            self.method.tag().to_string()
        } else {
            format!("{}/{}", self.method.tag(), self.kappa_method.tag())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        ComputeConfig::default().validate().unwrap();
        let bad = ComputeConfig {
            quad_rel_tol: 0.1,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = ComputeConfig {
            matsubara_max_terms: 0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn absolute_values_follow_factors() {
        let r = CorrectionResult::new(0.5, 0.25, Method::Lifshitz)
            .with_absolute(1e-6, Some(1e-30))
            .unwrap();
        let (e0, f0) = ideal_baselines(1e-6, Some(1e-30)).unwrap();
        assert_eq!(r.energy, Some(0.5 * e0));
        assert_eq!(r.force, Some(0.25 * f0));
        let r = CorrectionResult::new(0.5, 0.25, Method::Lifshitz)
            .with_absolute(1e-6, None)
            .unwrap();
        assert_eq!(r.energy, None);
    }

    #[test]
    fn labels() {
        let mut r = CorrectionResult::new(1.0, 1.0, Method::AsymptShort);
        assert_eq!(r.method_label(), "asympt_short");
        r.kappa_method = Method::AsymptLarge;
        assert_eq!(r.method_label(), "asympt_short/asympt_large");
    }
}
