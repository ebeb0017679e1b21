use rayon::prelude::*;

use crate::arith::{sieve, ModPrime};
use crate::borcherds::CongruenceFormula;
use crate::error::{Error, Result};

use super::curve::{ec_trace, EllCurve};
use super::table::{DensityTable, DensityValue};

/// Largest `X` served from exact eigenform expansions.
pub const EXPANSION_LIMIT: u64 = 100_000;

const BLOCK: usize = 4096;

/// Where the traces `aᵢ(p) mod ℓ` come from.
enum Traces {
    Curve(EllCurve),
    Expansion(Vec<crate::qseries::QSeries<ModPrime>>),
}

/// `δ_d(t, ℓ; X)`: the share of primes `p < X` with `A(p², d) ≡ t (mod ℓ)`.
/// The prime `p = ℓ` counts towards `π(X)` only.
pub fn empirical_table(f: &CongruenceFormula, x: u64) -> Result<DensityTable> {
    let ell = f.ell;
    let traces = match EllCurve::x0(ell) {
        Some(e) if f.r() == 1 => Traces::Curve(e),
        _ if x <= EXPANSION_LIMIT => {
            let order = x as i64;
            Traces::Expansion(f.basis.iter().map(|r| r.series_mod(ell, order)).collect())
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "empirical tables for ell = {ell} are limited to X <= {EXPANSION_LIMIT}"
            )))
        }
    };
    let primes = sieve(x.max(2))?;
    let tallies = primes
        .primes()
        .par_chunks(BLOCK)
        .map(|block| -> Result<Vec<u64>> {
            let mut counts = vec![0u64; ell as usize];
            for &p in block {
                if p == ell {
                    continue;
                }
                let a: Vec<ModPrime> = match &traces {
                    Traces::Curve(e) => vec![ModPrime::from_i64(ec_trace(e, p)?, ell)],
                    Traces::Expansion(forms) => forms.iter().map(|s| s.coeff(p as i64)).collect(),
                };
                counts[f.eval_prime(p, &a)?.value() as usize] += 1;
            }
            Ok(counts)
        })
        .try_reduce(
            || vec![0u64; ell as usize],
            |mut acc, c| {
                acc.iter_mut().zip(c).for_each(|(x, y)| *x += y);
                Ok(acc)
            },
        )?;
    let total = primes.count() as u64;
    Ok(DensityTable {
        d: f.d,
        ell,
        x: Some(x),
        entries: tallies
            .into_iter()
            .map(|count| DensityValue::Empirical { count, total })
            .collect(),
    })
}
