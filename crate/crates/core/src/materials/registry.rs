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

use super::{AtomModel, MetalModel};
use crate::asymptotics::JoiningPoints;
use crate::units::plasma_frequency_from_wavelength;

/// Plasma wavelength of gold, m.
pub const GOLD_PLASMA_WAVELENGTH: f64 = 137e-9;

/// A named atom with its default branch joining points.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomPreset {
    pub name: &'static str,
    pub label: &'static str,
    pub model: AtomModel,
    pub joining: JoiningPoints,
}

/// Built-in wall and atom parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct Registry {
    pub gold: MetalModel,
    pub atoms: Vec<AtomPreset>,
}

impl Registry {
    /// Looks an atom up by name, case-insensitively. `he*`, `he-star` and
    /// `hestar` all name metastable helium.
    pub fn atom(&self, name: &str) -> Option<&AtomPreset> {
        let key = name.trim().to_ascii_lowercase();
        let key = match key.as_str() {
            "he*" | "hestar" | "he_star" | "he" => "he-star",
            other => other,
        };
        self.atoms.iter().find(|a| a.name == key)
    }

    pub fn metal(&self, name: &str) -> Option<MetalModel> {
        match name.trim().to_ascii_lowercase().as_str() {
            "au" | "gold" => Some(self.gold),
            "ideal" => Some(MetalModel::Ideal),
            _ => None,
        }
    }
}

fn oscillator(omega0: f64) -> AtomModel {
    AtomModel::single_oscillator(omega0).expect("positive preset frequency")
}

/// The wall and atoms of the reference calculations.
///
/// Gold uses ω_p = 2πc/λ_p with λ_p = 137 nm; the atoms use single-oscillator
/// frequencies of 1.794e15 (He*), 3.25e15 (Na) and 2.36e15 rad/s (Cs).
pub fn registry() -> Registry {
    let wp = plasma_frequency_from_wavelength(GOLD_PLASMA_WAVELENGTH).expect("positive wavelength");
    let preset = |name, label, omega0, energy_um: f64, force_um: f64| AtomPreset {
        name,
        label,
        model: oscillator(omega0),
        joining: JoiningPoints {
            energy: energy_um * 1e-6,
            force: force_um * 1e-6,
        },
    };
    Registry {
        gold: MetalModel::Plasma { omega_p: wp },
        atoms: vec![
            preset("he-star", "He*", 1.794e15, 1.3, 1.5),
            preset("na", "Na", 3.25e15, 1.0, 1.2),
            preset("cs", "Cs", 2.36e15, 1.1, 1.4),
        ],
    }
}
