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

//! Closed-form asymptotic correction factors.
//!
//! At large separations the factors are polynomials in β_p and β_A with
//! temperature-dependent coefficients. At short separations (T = 0) they are
//! built from six alternating series of incomplete gamma and ₁F₁ functions.
//! [`crossover_select`] joins the two.

mod crossover;
mod large;
mod series;
mod short;
mod temperature;

pub use crossover::{
    auto_joining_point, auto_joining_points, branch_pair, crossover_select, log_grid,
    CrossoverPolicy, JoiningPoints, JOIN_GRID_POINTS, JOIN_GRID_START, JOIN_GRID_STOP,
};
pub use large::{
    eta_large, high_t_factor, kappa_large, large_coefficients, large_factor, LargeCoefficients,
    LARGE_BRANCH_MIN_SEPARATION,
};
pub use series::{sigma_series, SeriesTerm, MAX_SERIES_TERMS};
pub use short::{
    eta_short, kappa_short, short_blocks, short_factor, ShortBlocks, SHORT_BRANCH_MAX_SEPARATION,
};
pub use temperature::TempFunctions;

/// Temperature functions at τ > 0.
pub fn temp_functions(tau: f64) -> crate::Result<TempFunctions> {
    TempFunctions::new(tau)
}
