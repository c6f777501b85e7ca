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

//! Upper incomplete gamma function of integer order and the confluent
//! hypergeometric function ₁F₁(1, b; x), each with an overflow-safe scaled form.

mod gamma;
mod hyp1f1;

pub use gamma::{inc_gamma_upper, inc_gamma_upper_scaled, ln_inc_gamma_upper_scaled, MAX_ORDER};
pub use hyp1f1::{hyp1f1_one, hyp1f1_one_scaled};

pub(crate) use gamma::{expint_e1_scaled, ln_gamma_scaled_unchecked};
pub(crate) use hyp1f1::scaled_unchecked as hyp1f1_scaled_unchecked;
