//! Truncated q-series, polynomials, and classical level-one expansions.

mod forms;
mod gauss;
mod poly;
mod series;

pub use forms::{
    as_j_polynomial, cusp_monomial_basis, decompose_weight, delta, eisenstein, euler_product,
    jfunction, monomial_solutions, Monomial,
};
pub use gauss::{f2, f2_numeric, pd_log_coeffs};
pub use poly::Poly;
pub use series::QSeries;
