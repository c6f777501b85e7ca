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

use thiserror::Error;

/// Errors produced anywhere in the numerical pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CpkError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported incomplete-gamma order {0} (|n| must be at most 64)")]
    UnsupportedOrder(i32),

    #[error("polarizability table, line {line}: {message}")]
    Ingestion { line: usize, message: String },

    #[error("invalid model state: {0}")]
    State(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("Matsubara sum not converged after {l_used} terms (partial value {partial:e})")]
    Truncation { partial: f64, l_used: usize },

    #[error("quadrature failed: {0}")]
    Quadrature(String),

    #[error("series Σ{which} not converged within {terms} terms")]
    Series { which: u8, terms: usize },

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),
}

pub type Result<T> = std::result::Result<T, CpkError>;

pub(crate) fn domain(msg: impl Into<String>) -> CpkError {
    CpkError::Domain(msg.into())
}
