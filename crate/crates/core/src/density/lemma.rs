use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{is_prime, ModPrime, Rational};
use crate::error::{Error, Result};

/// Largest ℓ for which [`charpoly_count_bruteforce`] enumerates GL₂(F_ℓ).
pub const BRUTE_FORCE_ELL_LIMIT: u64 = 11;

/// Splitting type of `x² − ax + b` through the discriminant `a²/4 − b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharpolyCase {
    /// Irreducible: the discriminant is a nonresidue.
    Nonresidue,
    /// Two distinct roots in F_ℓ.
    Residue,
    /// A repeated root.
    Zero,
}

fn check_ell(ell: u64) -> Result<()> {
    if ell < 3 || !is_prime(ell) {
        return Err(Error::InvalidInput(format!(
            "ell must be an odd prime, got {ell}"
        )));
    }
    Ok(())
}

pub fn charpoly_case(ell: u64, a: u64, b: u64) -> CharpolyCase {
    let a = ModPrime::new(a, ell);
    let disc = a * a * ModPrime::new(4, ell).fermat_inv().expect("ell odd") - ModPrime::new(b, ell);
    match disc.legendre() {
        -1 => CharpolyCase::Nonresidue,
        1 => CharpolyCase::Residue,
        _ => CharpolyCase::Zero,
    }
}

/// `|GL₂(F_ℓ)| = (ℓ² − 1)(ℓ² − ℓ)`.
pub fn gl2_order(ell: u64) -> u64 {
    (ell * ell - 1) * (ell * ell - ell)
}

/// Number of matrices in GL₂(F_ℓ) with characteristic polynomial
/// `x² − ax + b`, and its proportion of the group.
pub fn charpoly_count(ell: u64, a: u64, b: u64) -> Result<(u64, Rational)> {
    check_ell(ell)?;
    if b.is_multiple_of(ell) {
        return Err(Error::InvalidInput(
            "b must be nonzero mod ell (det of an invertible matrix)".into(),
        ));
    }
    let count = match charpoly_case(ell, a % ell, b % ell) {
        CharpolyCase::Nonresidue => ell * ell - ell,
        CharpolyCase::Residue => ell * ell + ell,
        CharpolyCase::Zero => ell * ell,
    };
    let prop = Rational::new(BigInt::from(count), BigInt::from(gl2_order(ell)));
    Ok((count, prop))
}

/// Literal enumeration of `((w, x), (y, z))` with trace `a` and determinant `b`.
pub fn charpoly_count_bruteforce(ell: u64, a: u64, b: u64) -> Result<u64> {
    check_ell(ell)?;
    if ell > BRUTE_FORCE_ELL_LIMIT {
        return Err(Error::Resource(format!(
            "brute force limited to ell <= {BRUTE_FORCE_ELL_LIMIT}"
        )));
    }
    let (a, b) = (a % ell, b % ell);
    let mut n = 0;
    for w in 0..ell {
        for x in 0..ell {
            for y in 0..ell {
                for z in 0..ell {
                    let det = (w * z + ell * ell - x * y % ell) % ell;
                    if (w + z) % ell == a && det == b && det != 0 {
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

/// For each trace `a`, how often each case occurs as `b` runs over F_ℓ^×.
pub fn case_tallies(ell: u64) -> Result<Vec<[u64; 3]>> {
    check_ell(ell)?;
    Ok((0..ell)
        .map(|a| {
            let mut t = [0u64; 3];
            for b in 1..ell {
                let i = match charpoly_case(ell, a, b) {
                    CharpolyCase::Nonresidue => 0,
                    CharpolyCase::Residue => 1,
                    CharpolyCase::Zero => 2,
                };
                t[i] += 1;
            }
            t
        })
        .collect())
}

/// The tallies predicted in closed form: `((ℓ−1)/2, (ℓ−3)/2, 1)` for
/// `a ≠ 0` and `((ℓ−1)/2, (ℓ−1)/2, 0)` for `a = 0`.
pub fn expected_case_tallies(ell: u64, a: u64) -> [u64; 3] {
    if a.is_multiple_of(ell) {
        [(ell - 1) / 2, (ell - 1) / 2, 0]
    } else {
        [(ell - 1) / 2, (ell - 3) / 2, 1]
    }
}

/// Sum of all proportions; equal to 1.
pub fn total_proportion(ell: u64) -> Result<Rational> {
    let mut s = Rational::zero();
    for a in 0..ell {
        for b in 1..ell {
            s += charpoly_count(ell, a, b)?.1;
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            charpoly_count(11, 0, 1).unwrap().1,
            Rational::new(1.into(), 120.into())
        );
        // 1/4 − b ≡ 0 at b = 3 mod 11.
        assert_eq!(
            charpoly_count(11, 1, 3).unwrap().1,
            Rational::new(11.into(), 1200.into())
        );
        assert_eq!(charpoly_count(3, 0, 1).unwrap().0, 6);
        assert_eq!(gl2_order(3), 48);
        assert_eq!(charpoly_count(5, 0, 4).unwrap().0, 30);
        assert!(charpoly_count(5, 1, 0).is_err());
        assert!(charpoly_count(9, 1, 1).is_err());
    }

    #[test]
    fn matches_enumeration() {
        for ell in [3u64, 5, 7] {
            let mut total = 0;
            for a in 0..ell {
                for b in 1..ell {
                    let n = charpoly_count_bruteforce(ell, a, b).unwrap();
                    assert_eq!(
                        n,
                        charpoly_count(ell, a, b).unwrap().0,
                        "ell={ell} a={a} b={b}"
                    );
                    total += n;
                }
            }
            assert_eq!(total, gl2_order(ell));
            assert_eq!(
                total_proportion(ell).unwrap(),
                Rational::from_integer(1.into())
            );
        }
    }
}
