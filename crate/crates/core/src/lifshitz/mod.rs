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

//! Direct evaluation of the atom-wall Lifshitz formula.

mod baselines;
mod config;
mod kernel;
mod matsubara;
mod reflection;
mod semispace;
mod zero_t;

pub use baselines::{ideal_baselines, plate_energy};
pub use config::{
    ComputeConfig, CorrectionResult, Factor, Method, Quantity, ReflectionModel, TruncationReport,
    Validity,
};
pub use matsubara::{force_factor, free_energy_factor, lifshitz_correction, matsubara_factor};
pub use reflection::{impedance_coefficients, reflection_coefficients};
pub use semispace::{two_semispace_free_energy, RAREFACTION_LIMIT};
pub use zero_t::{zero_t_energy_factor, zero_t_factor, zero_t_force_factor};
