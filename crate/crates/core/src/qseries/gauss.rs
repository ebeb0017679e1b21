use num_traits::Zero;

use crate::arith::{is_fundamental_discriminant, kronecker, QuadExt, Rational};
use crate::error::{Error, Result};

fn check_disc(disc: u64) -> Result<()> {
    if disc <= 1 || !is_fundamental_discriminant(disc as i64) {
        return Err(Error::NotFundamental(disc as i64));
    }
    Ok(())
}

/// `Σ_{k=1}^{D-1} (D/k) ζ_D^{kr}` as an element of ℚ(√D).
///
/// For a fundamental `D > 1` the character `(D/·)` is primitive and real
/// with Gauss sum `√D`, so the sum equals `(D/r)·√D` for every `r ≥ 1`.
pub fn f2(disc: u64, r: u64) -> Result<QuadExt<Rational>> {
    check_disc(disc)?;
    let k = kronecker(disc as i64, r as i64);
    Ok(QuadExt::new(
        Rational::zero(),
        Rational::from_integer(k.into()),
        disc,
    ))
}

/// The same sum computed in floating point from the roots of unity.
pub fn f2_numeric(disc: u64, r: u64) -> f64 {
    let d = disc as f64;
    (1..disc)
        .map(|k| {
            let chi = kronecker(disc as i64, k as i64) as f64;
            let angle = 2.0 * std::f64::consts::PI * ((k * r) % disc) as f64 / d;
            chi * angle.cos()
        })
        .sum()
}

/// Coefficients `t^1 … t^N` of `-t d/dt log P_D(t) = Σ_{r≥1} f₂(r) t^r`.
pub fn pd_log_coeffs(disc: u64, n: u64) -> Result<Vec<QuadExt<Rational>>> {
    (1..=n).map(|r| f2(disc, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fundamental_up_to(max: u64) -> Vec<u64> {
        (2..=max)
            .filter(|&d| is_fundamental_discriminant(d as i64))
            .collect()
    }

    #[test]
    fn closed_form_matches_root_of_unity_sum() {
        for disc in fundamental_up_to(40) {
            for r in 1..=2 * disc {
                let exact = f2(disc, r).unwrap().to_f64();
                let numeric = f2_numeric(disc, r);
                assert!(
                    (exact - numeric).abs() < 1e-9,
                    "D={disc} r={r}: {exact} vs {numeric}"
                );
            }
        }
    }

    #[test]
    fn examples() {
        let one = Rational::from_integer(1.into());
        assert_eq!(
            f2(5, 1).unwrap(),
            QuadExt::new(Rational::zero(), one.clone(), 5)
        );
        assert!((f2_numeric(5, 1) - 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            f2(5, 5).unwrap(),
            QuadExt::new(Rational::zero(), Rational::zero(), 5)
        );
        assert_eq!(f2(8, 3).unwrap(), QuadExt::new(Rational::zero(), -one, 8));
        assert!(f2(12, 1).is_ok());
        assert!(matches!(f2(9, 1), Err(Error::NotFundamental(9))));
        assert!(f2(1, 1).is_err());
    }

    #[test]
    fn log_coefficients_are_f2() {
        let cs = pd_log_coeffs(5, 10).unwrap();
        for (i, c) in cs.iter().enumerate() {
            assert_eq!(*c, f2(5, i as u64 + 1).unwrap());
        }
        assert!(cs[4].b.is_zero());
    }
}
