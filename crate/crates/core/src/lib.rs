//! Exact arithmetic for the multivariate Apéry-like family
//! `1 / (Π_j [1 - Σ_{i in block j} x_i] - α x_1 ⋯ x_d)`: closed-form coefficients,
//! independent series oracles, recurrences and supercongruence checks.

pub mod arith;
pub mod coeff;
pub mod congruence;
pub mod error;
pub mod recurrence;
pub mod series;

pub use arith::{binom_ext, multinomial_ext, padic_valuation, Integer, Valuation};
pub use coeff::{a_lambda_coeff, FamilySpec, MultiIndex, NamedSequence, Partition};
pub use error::{Error, Result};
