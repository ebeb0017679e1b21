use crate::error::{Error, Result};

/// Largest bound accepted by [`sieve`]. Beyond this the prime list alone
/// runs into hundreds of megabytes.
pub const SIEVE_LIMIT: u64 = 200_000_000;

/// The primes below a bound, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeStream {
    bound: u64,
    primes: Vec<u64>,
}

impl PrimeStream {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// π(bound).
    pub fn count(&self) -> usize {
        self.primes.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }
}

/// Sieve of Eratosthenes over odd numbers: all primes `p < bound`.
pub fn sieve(bound: u64) -> Result<PrimeStream> {
    if bound < 2 {
        return Err(Error::InvalidInput(format!(
            "sieve bound must be >= 2, got {bound}"
        )));
    }
    if bound > SIEVE_LIMIT {
        return Err(Error::Resource(format!(
            "sieve bound {bound} exceeds configured limit {SIEVE_LIMIT}"
        )));
    }
    let mut primes = Vec::new();
    if bound > 2 {
        primes.push(2);
    }
    // index i represents 2i + 1
    let half = (bound / 2) as usize;
    let mut composite = vec![false; half];
    let mut i = 1;
    while i < half {
        if !composite[i] {
            let p = 2 * i + 1;
            if (p as u64) < bound {
                primes.push(p as u64);
            }
            let mut j = (p * p) / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    primes.retain(|&p| p < bound);
    Ok(PrimeStream { bound, primes })
}
