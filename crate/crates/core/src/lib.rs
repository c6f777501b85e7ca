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

//! Casimir-Polder interaction between a ground-state atom and a metal wall.
//!
//! The crate evaluates the correction factors η (free energy) and κ (force)
//! relative to the ideal-metal, static-polarizability, zero-temperature
//! baselines. Two independent routes are provided:
//!
//! * [`lifshitz`]: direct Matsubara summation of the Lifshitz formula with
//!   semi-infinite quadrature, plus the zero-temperature integral form.
//! * [`asymptotics`]: closed-form large-separation (finite temperature) and
//!   short-separation (zero temperature) expansions, and a crossover rule
//!   that picks between them.
//!
//! ```
//! use cpk_core::{materials::registry, units::reduce, lifshitz, ComputeConfig};
//!
//! let reg = registry();
//! let he = reg.atom("he-star").unwrap();
//! let state = reduce(1.0e-6, 300.0, &reg.gold, &he.model).unwrap();
//! let eta = lifshitz::free_energy_factor(&state, &reg.gold, &he.model, &ComputeConfig::default())
//!     .unwrap();
//! assert!((eta.value - 0.927).abs() < 2e-3);
//! ```

// `!(x > 0.0)` also rejects NaN, which `x <= 0.0` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod golden;
pub mod lifshitz;
pub mod materials;
pub mod par;
pub mod quadrature;
pub mod report;
pub mod special;
pub mod units;

pub use error::{CpkError, Result};
pub use lifshitz::{ComputeConfig, CorrectionResult, Method, Quantity, ReflectionModel};
pub use materials::{AtomModel, MetalModel};
pub use units::DimensionlessState;
