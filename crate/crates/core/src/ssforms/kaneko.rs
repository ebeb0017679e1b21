use crate::arith::ModPrime;
use crate::error::{Error, Result};
use crate::qseries::{as_j_polynomial, decompose_weight, eisenstein, Monomial, Poly};

/// `k = 12m + 4δ + 6ε` with `δ ∈ {0,1,2}` and `ε ∈ {0,1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub k: u64,
    pub m: u64,
    pub delta: u64,
    pub eps: u64,
}

impl WeightDecomposition {
    pub fn recompose(&self) -> u64 {
        12 * self.m + 4 * self.delta + 6 * self.eps
    }

    /// `Δ^m E₄^δ E₆^ε`.
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.m as u32, self.delta as u32, self.eps as u32)
    }

    /// `m + δ + ε`.
    pub fn supersingular_count(&self) -> u64 {
        self.m + self.delta + self.eps
    }
}

pub fn weight_decomposition(k: u64) -> Result<WeightDecomposition> {
    let (m, delta, eps) = decompose_weight(k).ok_or(Error::NoWeightDecomposition(k))?;
    Ok(WeightDecomposition { k, m, delta, eps })
}

pub(crate) fn check_prime_at_least_5(ell: u64) -> Result<()> {
    if !(5..1 << 32).contains(&ell) || !crate::arith::is_prime(ell) {
        return Err(Error::InvalidInput(format!(
            "need a prime ell >= 5, got {ell}"
        )));
    }
    Ok(())
}

/// `Ẽ_{ℓ-1}`: the polynomial with `Ẽ(j) = E_{ℓ-1} / (Δ^m E₄^δ E₆^ε)` over F_ℓ.
pub fn reduced_eisenstein_poly(ell: u64) -> Result<Poly<ModPrime>> {
    check_prime_at_least_5(ell)?;
    let w = weight_decomposition(ell - 1)?;
    let proto = ModPrime::zero(ell);
    let m = w.m as i64;
    let order = 2 * m + 8;
    let e = eisenstein(ell - 1, order, &proto)?;
    let denom = w.monomial().series(order, &proto);
    let quotient = e.div(&denom)?;
    match as_j_polynomial(&quotient) {
        Err(Error::NotPolynomialInJ { exponent }) => Err(Error::Internal(format!(
            "E_{} / Δ^m E4^δ E6^ε mod {ell} left a residual at q^{exponent}",
            ell - 1
        ))),
        other => other,
    }
}

/// Monic `s_ℓ(x) = x^δ (x - 1728)^ε Ẽ_{ℓ-1}(x)` over F_ℓ.
pub fn supersingular_poly(ell: u64) -> Result<Poly<ModPrime>> {
    let w = weight_decomposition(ell.saturating_sub(1))?;
    let e = reduced_eisenstein_poly(ell)?;
    let proto = ModPrime::zero(ell);
    let mut s = e.mul(&Poly::x(&proto).pow(w.delta as u32));
    if w.eps == 1 {
        s = s.mul(&Poly::linear(ModPrime::new(1728, ell)));
    }
    let s = s.monic();
    if s.degree() != Some(w.supersingular_count() as usize) {
        return Err(Error::Internal(format!(
            "deg s_{ell} = {:?}, expected {}",
            s.degree(),
            w.supersingular_count()
        )));
    }
    debug_assert!(s.coeffs().iter().all(|c| c.modulus() == proto.modulus()));
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Coeff;

    fn roots(p: &Poly<ModPrime>) -> Vec<u64> {
        let ell = p.proto().modulus();
        (0..ell)
            .filter(|&x| p.eval(&ModPrime::new(x, ell)).is_zero_elt())
            .collect()
    }

    #[test]
    fn decompositions() {
        assert_eq!(
            weight_decomposition(10).unwrap(),
            WeightDecomposition {
                k: 10,
                m: 0,
                delta: 1,
                eps: 1
            }
        );
        assert_eq!(weight_decomposition(30).unwrap().recompose(), 30);
        assert_eq!(
            weight_decomposition(12).unwrap().monomial(),
            Monomial::new(1, 0, 0)
        );
        assert_eq!(
            weight_decomposition(2),
            Err(Error::NoWeightDecomposition(2))
        );
    }

    #[test]
    fn small_primes() {
        let s11 = supersingular_poly(11).unwrap();
        assert_eq!(s11.degree(), Some(2));
        assert_eq!(roots(&s11), vec![0, 1]);
        let s5 = supersingular_poly(5).unwrap();
        assert_eq!(s5, Poly::x(&ModPrime::zero(5)));
        assert_eq!(
            supersingular_poly(13).unwrap(),
            Poly::linear(ModPrime::new(5, 13))
        );
        assert_eq!(
            supersingular_poly(7).unwrap(),
            Poly::linear(ModPrime::new(6, 7))
        );
    }

    #[test]
    fn rejects_non_primes() {
        assert!(supersingular_poly(9).is_err());
        assert!(supersingular_poly(3).is_err());
    }
}
