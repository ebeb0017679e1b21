//! Borcherds product exponents and their congruences modulo primes.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: exact integers, rationals, F_ℓ, quadratic extensions,
//!   arithmetic functions and a prime sieve.
//! - [`qseries`]: truncated Laurent series, polynomials, and the classical
//!   level-one expansions (Eisenstein series, Δ, j).
//! - [`ssforms`]: supersingular polynomials, Hecke operators and eigenform
//!   bases modulo ℓ.
//! - [`classpoly`]: binary quadratic forms, Hurwitz class numbers and
//!   Hilbert class polynomials from high-precision singular moduli.
//! - [`borcherds`]: exact exponent extraction, logarithmic derivatives
//!   modulo ℓ and the fitted congruence formulas.
//! - [`density`]: characteristic-polynomial densities in GL₂(F_ℓ),
//!   elliptic-curve traces and empirical residue tables.

pub mod arith;
pub mod borcherds;
pub mod classpoly;
pub mod density;
pub mod error;
pub mod qseries;
pub mod ssforms;

pub use error::{Error, Result};
