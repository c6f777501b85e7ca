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

//! Wall permittivity, atomic polarizability, tabulated-data ingestion and the
//! built-in presets.

mod atom;
mod metal;
mod registry;
mod table;

pub use atom::{AtomModel, Oscillator, Polarizability};
pub use metal::{MetalModel, Permittivity, DEFAULT_MAX_DRUDE_RATIO};
pub use registry::{registry, AtomPreset, Registry, GOLD_PLASMA_WAVELENGTH};
pub use table::{atomic_unit_of_frequency, load_polarizability_table, PolarizabilityTable};
