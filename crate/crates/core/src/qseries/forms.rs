//! Level-one q-expansions: Eisenstein series, Δ, j, and weight-0 functions
//! as polynomials in j.

use num_bigint::BigInt;

use crate::arith::{bernoulli, sigma, Coeff, Rational};
use crate::error::{Error, Result};

use super::{Poly, QSeries};

/// `E_k = 1 - (2k/B_k) Σ σ_{k-1}(n) q^n` through `q^order`.
///
/// `k = 2` gives the quasi-modular E₂ from the same formula.
pub fn eisenstein<R: Coeff>(k: u64, order: i64, proto: &R) -> Result<QSeries<R>> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "Eisenstein weight must be even and >= 2, got {k}"
        )));
    }
    let factor = -Rational::from_integer(BigInt::from(2 * k)) / bernoulli(k)?;
    let factor = proto.from_rational_like(&factor).ok_or_else(|| {
        Error::InvalidInput(format!(
            "E_{k} has a coefficient denominator not invertible in {}",
            proto.tag()
        ))
    })?;
    Ok(QSeries::from_fn(0, order, proto, |n| {
        if n == 0 {
            proto.one_like()
        } else {
            factor.mul_ref(&proto.from_bigint_like(&sigma(k as u32 - 1, n as u64)))
        }
    }))
}

/// `Π_{n≥1} (1 - q^n)` from Euler's pentagonal number theorem.
pub fn euler_product<R: Coeff>(order: i64, proto: &R) -> QSeries<R> {
    let mut coeffs = vec![proto.zero_like(); (order + 1).max(0) as usize];
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            if g <= order {
                any = true;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                coeffs[g as usize] = proto.from_i64_like(sign);
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    QSeries::from_coeffs(0, coeffs, proto)
}

/// Multiplies a dense series in place by a sparse one whose nonzero terms are
/// listed as `(exponent, coefficient)`.
fn mul_sparse<R: Coeff>(dense: &[R], sparse: &[(usize, R)]) -> Vec<R> {
    let mut out = vec![dense[0].zero_like(); dense.len()];
    for (i, x) in dense.iter().enumerate() {
        if x.is_zero_elt() {
            continue;
        }
        for (e, c) in sparse {
            if i + e >= dense.len() {
                break;
            }
            out[i + e] = out[i + e].add_ref(&x.mul_ref(c));
        }
    }
    out
}

/// `Δ = q Π (1 - q^n)^24` through `q^order`.
///
/// The Euler product is sparse (O(√N) terms), so 24 sparse products cost
/// O(N^{3/2}).
pub fn delta<R: Coeff>(order: i64, proto: &R) -> QSeries<R> {
    if order < 1 {
        return QSeries::zero(1, order, proto);
    }
    let euler = euler_product(order - 1, proto);
    let sparse: Vec<(usize, R)> = euler
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero_elt())
        .map(|(e, c)| (e, c.clone()))
        .collect();
    let mut acc = vec![proto.zero_like(); order as usize];
    acc[0] = proto.one_like();
    for _ in 0..24 {
        acc = mul_sparse(&acc, &sparse);
    }
    QSeries::from_coeffs(1, acc, proto)
}

/// `j = E₄³/Δ` through `q^order`.
pub fn jfunction<R: Coeff>(order: i64, proto: &R) -> QSeries<R> {
    let e4 = eisenstein(4, order + 1, proto).expect("E4 has integral coefficients");
    let d = delta(order + 2, proto);
    e4.pow(3)
        .div(&d)
        .expect("Δ has unit leading coefficient")
        .truncate(order)
}

/// Expresses a weight-0 function, holomorphic away from the cusp, as a
/// polynomial in j by cancelling the most negative exponent repeatedly.
/// Every known coefficient of the residual must vanish.
pub fn as_j_polynomial<R: Coeff>(f: &QSeries<R>) -> Result<Poly<R>> {
    let proto = f.proto().clone();
    let m = (-f.valuation().unwrap_or(0)).max(0);
    if f.order() < 0 {
        return Err(Error::Truncation {
            needed: 0,
            available: f.order(),
        });
    }
    let j = jfunction(f.order() + m.max(1) - 1, &proto);
    let mut powers = vec![QSeries::one(f.order() + m, &proto)];
    for k in 1..=m {
        powers.push(powers[k as usize - 1].mul(&j));
    }
    let mut residual = f.clone();
    let mut coeffs = vec![proto.zero_like(); (m + 1) as usize];
    for k in (0..=m).rev() {
        let c = residual.coeff(-k);
        if !c.is_zero_elt() {
            residual = residual.sub(&powers[k as usize].scale(&c));
        }
        coeffs[k as usize] = c;
    }
    if let Some(e) = residual.valuation() {
        return Err(Error::NotPolynomialInJ { exponent: e });
    }
    Ok(Poly::new(coeffs, &proto))
}

/// A product `Δ^a E₄^b E₆^c`, recorded by its exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub delta: u32,
    pub e4: u32,
    pub e6: u32,
}

impl Monomial {
    pub fn new(delta: u32, e4: u32, e6: u32) -> Self {
        Monomial { delta, e4, e6 }
    }

    pub fn weight(&self) -> u64 {
        12 * self.delta as u64 + 4 * self.e4 as u64 + 6 * self.e6 as u64
    }

    pub fn series<R: Coeff>(&self, order: i64, proto: &R) -> QSeries<R> {
        let mut acc = QSeries::one(order, proto);
        if self.e4 > 0 {
            let e4 = eisenstein(4, order, proto).expect("E4 is integral");
            acc = acc.mul(&e4.pow(self.e4));
        }
        if self.e6 > 0 {
            let e6 = eisenstein(6, order, proto).expect("E6 is integral");
            acc = acc.mul(&e6.pow(self.e6));
        }
        if self.delta > 0 {
            let d = delta(order, proto);
            acc = acc.mul(&d.pow(self.delta));
        }
        acc.truncate(order)
    }
}

/// Renders as `D^aE4^bE6^c`, omitting zero exponents; the empty product is `1`.
impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.delta == 0 && self.e4 == 0 && self.e6 == 0 {
            return write!(f, "1");
        }
        for (name, e) in [("D", self.delta), ("E4", self.e4), ("E6", self.e6)] {
            if e > 0 {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All `(a, b, c) ≥ 0` with `12a + 4b + 6c = k`.
pub fn monomial_solutions(k: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=k / 12 {
        for b in 0..=(k - 12 * a) / 4 {
            let rest = k - 12 * a - 4 * b;
            if rest.is_multiple_of(6) {
                out.push(Monomial::new(a as u32, b as u32, (rest / 6) as u32));
            }
        }
    }
    out
}

/// Echelon basis of the cusp forms of weight `k`: writing
/// `k = 12m + 4δ + 6ε`, the forms `Δ^a E₄^δ E₆^{ε + 2(m-a)}` for
/// `a = 1..=m`. The form indexed by `a` starts at `q^a`, so the basis has
/// size `m = dim S_k`.
pub fn cusp_monomial_basis(k: u64) -> Vec<Monomial> {
    let Some((m, d, e)) = decompose_weight(k) else {
        return Vec::new();
    };
    (1..=m)
        .map(|a| Monomial::new(a as u32, d as u32, (e + 2 * (m - a)) as u32))
        .collect()
}

/// `k = 12m + 4δ + 6ε` with `δ ∈ {0,1,2}`, `ε ∈ {0,1}`; `None` for odd `k`
/// and for `k = 2`.
pub fn decompose_weight(k: u64) -> Option<(u64, u64, u64)> {
    if k % 2 == 1 || k == 2 {
        return None;
    }
    let (d, e) = match k % 12 {
        0 => (0, 0),
        4 => (1, 0),
        8 => (2, 0),
        6 => (0, 1),
        10 => (1, 1),
        2 => (2, 1),
        _ => unreachable!("k is even"),
    };
    Some(((k - 4 * d - 6 * e) / 12, d, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ModPrime;
    use num_traits::Zero;

    fn z() -> BigInt {
        BigInt::zero()
    }

    fn ints(s: &QSeries<BigInt>) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(ints(&eisenstein(4, 2, &z()).unwrap()), vec![1, 240, 2160]);
        assert_eq!(ints(&eisenstein(2, 1, &z()).unwrap()), vec![1, -24]);
        let e12 = eisenstein(12, 0, &Rational::zero()).unwrap();
        assert_eq!(e12.coeff(0), Rational::from_integer(1.into()));
        assert_eq!(
            ints(&eisenstein(6, 2, &z()).unwrap()),
            vec![1, -504, -16632]
        );
        assert!(eisenstein(3, 2, &z()).is_err());
        // E_12 has denominator 691
        assert!(eisenstein(12, 2, &z()).is_err());
    }

    #[test]
    fn delta_examples() {
        let d = delta(6, &z());
        assert_eq!(d.lead(), 1);
        assert_eq!(ints(&d), vec![1, -24, 252, -1472, 4830, -6048]);
    }

    #[test]
    fn j_examples() {
        let j = jfunction(2, &z());
        assert_eq!(j.lead(), -1);
        assert_eq!(ints(&j), vec![1, 744, 196884, 21493760]);
    }

    #[test]
    fn j_polynomials() {
        let j = jfunction(10, &z());
        let p = as_j_polynomial(&j).unwrap();
        assert_eq!(p, Poly::x(&z()));
        let one = QSeries::one(10, &z());
        assert_eq!(as_j_polynomial(&one).unwrap(), Poly::one(&z()));
        let shifted = j.add_scalar(&BigInt::from(-744));
        assert_eq!(
            as_j_polynomial(&shifted).unwrap(),
            Poly::new(vec![BigInt::from(-744), BigInt::from(1)], &z())
        );
    }

    #[test]
    fn non_polynomial_rejected() {
        // q^-1 alone is not a polynomial in j
        let f = QSeries::from_coeffs(-1, vec![BigInt::from(1), z(), z(), z()], &z());
        assert!(matches!(
            as_j_polynomial(&f),
            Err(Error::NotPolynomialInJ { .. })
        ));
        let g = QSeries::monomial(BigInt::from(1), 1, 5);
        assert!(matches!(
            as_j_polynomial(&g),
            Err(Error::NotPolynomialInJ { exponent: 1 })
        ));
    }

    #[test]
    fn cusp_bases() {
        assert_eq!(
            cusp_monomial_basis(32),
            vec![Monomial::new(1, 2, 2), Monomial::new(2, 2, 0)]
        );
        assert_eq!(cusp_monomial_basis(12), vec![Monomial::new(1, 0, 0)]);
        assert_eq!(cusp_monomial_basis(16), vec![Monomial::new(1, 1, 0)]);
        assert!(cusp_monomial_basis(14).is_empty());
        assert_eq!(cusp_monomial_basis(26), vec![Monomial::new(1, 2, 1)]);
        for m in cusp_monomial_basis(48) {
            assert_eq!(m.weight(), 48);
        }
    }

    #[test]
    fn all_solutions_have_weight() {
        let sols = monomial_solutions(32);
        assert!(sols.contains(&Monomial::new(2, 2, 0)));
        assert!(sols.contains(&Monomial::new(1, 2, 2)));
        assert!(sols.contains(&Monomial::new(1, 5, 0)));
        assert!(sols.iter().all(|m| m.weight() == 32));
        assert!(monomial_solutions(2).is_empty());
        assert_eq!(monomial_solutions(0), vec![Monomial::new(0, 0, 0)]);
    }

    #[test]
    fn weight_decompositions() {
        assert_eq!(decompose_weight(10), Some((0, 1, 1)));
        assert_eq!(decompose_weight(30), Some((2, 0, 1)));
        assert_eq!(decompose_weight(12), Some((1, 0, 0)));
        assert_eq!(decompose_weight(2), None);
        for k in (4..200).step_by(2) {
            let (m, d, e) = decompose_weight(k).unwrap();
            assert_eq!(12 * m + 4 * d + 6 * e, k);
        }
    }

    #[test]
    fn delta_mod_p_matches_reduction() {
        let exact = delta(40, &z());
        let modp = delta(40, &ModPrime::zero(11));
        assert_eq!(exact.reduce_mod(11), modp);
    }
}
