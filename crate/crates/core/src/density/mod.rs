//! Characteristic-polynomial densities in GL₂(F_ℓ), elliptic-curve traces
//! and residue tables of `A(p², d) mod ℓ`.

mod curve;
mod empirical;
mod lemma;
mod table;

pub use curve::{ec_trace, ec_trace_bsgs, ec_trace_naive, EllCurve, BSGS_MAX_POINTS, NAIVE_LIMIT};
pub use empirical::{empirical_table, EXPANSION_LIMIT};
pub use lemma::{
    case_tallies, charpoly_case, charpoly_count, charpoly_count_bruteforce, expected_case_tallies,
    gl2_order, total_proportion, CharpolyCase, BRUTE_FORCE_ELL_LIMIT,
};
pub use table::{asymptotic_table, DensityTable, DensityValue};
