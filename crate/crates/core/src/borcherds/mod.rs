//! Borcherds exponents of class polynomials and their congruences mod ℓ.

mod congruence;
mod exponents;
mod recipe;
mod twisted;

pub use congruence::{
    default_verify_order, fit_congruence, fit_congruence_with, fit_series, parse_congruence_doc,
    CongruenceDoc, CongruenceFormula,
};
pub use exponents::{
    exact_exponents, exact_exponents_of, log_derivative_exact, log_derivative_mod,
    log_derivative_mod_of, reduce, ExponentTable,
};
pub use recipe::{parse_recipe, Recipe, MAX_EXPONENT};
pub use twisted::{
    nu, nu_closed_form, nu_sequence, twisted_forward, twisted_inverse, twisted_roundtrip,
};
