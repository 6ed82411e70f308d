//! Independent oracles: Taylor expansion of `1/Q`, constant terms of Laurent
//! polynomial powers, products of linear forms, and eta-quotient q-expansions.

pub mod eta;
pub mod laurent;
pub mod macmahon;
pub mod poly;
pub mod table;

pub use eta::{
    eta_quotient_qexp, euler_product, modular_parametrization_sides,
    verify_modular_parametrization, EtaFactor, QSeries, FORM_F, HAUPTMODUL_T,
};
pub use laurent::{constant_term_power, mixed_constant_term, LaurentPoly};
pub use macmahon::{
    det_i_minus_ax, linear_form_coefficient, macmahon_check, macmahon_sides, IntMatrix,
};
pub use poly::SparsePoly;
pub use table::{expand, expand_with, CoeffTable, ExpandConfig, FillOrder, DEFAULT_MAX_CELLS};

use crate::coeff::FamilySpec;

/// Denominator polynomial of a family member.
pub fn family_denominator(spec: &FamilySpec) -> SparsePoly {
    SparsePoly::family_denominator(spec)
}
