//! Supersingular polynomials, Hecke operators and eigenforms mod ℓ.

mod brute;
mod hecke;
mod kaneko;

pub use brute::{supersingular_j_invariants, supersingular_poly_bruteforce, BRUTE_FORCE_LIMIT};
pub use hecke::{eigenbasis, eisenstein_cusp_split, hecke_tp, EigenformBasis};
pub use kaneko::{
    reduced_eisenstein_poly, supersingular_poly, weight_decomposition, WeightDecomposition,
};
