use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, moebius, Coeff, ModPrime, Rational};
use crate::classpoly::{eligibility_of, hurwitz_class_number, WeightedClassPoly};
use crate::error::{Error, Result};
use crate::qseries::{jfunction, Poly, QSeries};

/// `-q d/dq log P(j)` through `q^n` for a monic `P`, over the ring of
/// `proto`.
fn component_log_derivative<R: Coeff>(poly: &Poly<R>, n: i64, proto: &R) -> Result<QSeries<R>> {
    let deg = poly.degree().unwrap_or(0) as i64;
    if deg == 0 {
        return Ok(QSeries::zero(0, n, proto));
    }
    let j = jfunction(n + 2 * deg + 2, proto);
    let pj = poly.eval_series(&j);
    let ld = pj.log_derivative()?;
    let out = ld.neg();
    if out.order() < n {
        return Err(Error::Internal(format!(
            "log derivative known to q^{}, need q^{n}",
            out.order()
        )));
    }
    Ok(out.truncate(n))
}

/// `L = Σ w·(-q d/dq log P_c(j))` over ℚ through `q^n`.
pub fn log_derivative_exact(p: &WeightedClassPoly, n: i64) -> Result<QSeries<Rational>> {
    let mut acc = QSeries::zero(0, n, &Rational::zero());
    for c in &p.components {
        let l = component_log_derivative(&c.poly, n, &BigInt::zero())?;
        acc = acc.add(&l.to_rational().scale(&c.weight));
    }
    Ok(acc)
}

/// `L mod ℓ` computed directly over F_ℓ.
pub fn log_derivative_mod_of(p: &WeightedClassPoly, ell: u64, n: i64) -> Result<QSeries<ModPrime>> {
    let proto = ModPrime::zero(ell);
    let mut acc = QSeries::zero(0, n, &proto);
    for c in &p.components {
        let w = ModPrime::from_rational(&c.weight, ell).ok_or(Error::NotInvertible)?;
        let l = component_log_derivative(&c.poly.reduce_mod(ell), n, &proto)?;
        acc = acc.add(&l.scale(&w));
    }
    Ok(acc)
}

/// As [`log_derivative_mod_of`], after checking that the class polynomial
/// divides `s_ℓ` mod ℓ.
pub fn log_derivative_mod(p: &WeightedClassPoly, ell: u64, n: i64) -> Result<QSeries<ModPrime>> {
    let e = eligibility_of(p, ell)?;
    if !e.divides {
        return Err(Error::Ineligible {
            d: p.d as u64,
            ell,
            reason: "class polynomial does not divide s_ell mod ell".into(),
        });
    }
    log_derivative_mod_of(p, ell, n)
}

/// `A(n², d)` for `1 ≤ n ≤ N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentTable {
    pub d: i64,
    #[serde(with = "bigint_strings")]
    pub values: Vec<BigInt>,
}

impl ExponentTable {
    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    /// `A(n², d)`, `n ≥ 1`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Exponents from Möbius inversion of `[q^n] L = Σ_{m|n} m·A(m², d)`.
pub fn exact_exponents_of(p: &WeightedClassPoly, n_max: usize) -> Result<ExponentTable> {
    let l = log_derivative_exact(p, n_max as i64)?;
    let h = hurwitz_class_number(p.d)?;
    if l.coeff(0) != h {
        return Err(Error::Internal(format!(
            "constant term {} differs from h({}) = {}",
            l.coeff(0),
            p.d,
            h
        )));
    }
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max as u64 {
        let mut s = Rational::zero();
        for m in divisors(n) {
            let mu = moebius(n / m);
            if mu != 0 {
                s += l.coeff(m as i64) * Rational::from_integer(mu.into());
            }
        }
        let a = s / Rational::from_integer(n.into());
        if !a.is_integer() {
            return Err(Error::Internal(format!(
                "A({n}^2, {}) = {a} is not an integer",
                p.d
            )));
        }
        values.push(a.to_integer());
    }
    Ok(ExponentTable { d: p.d, values })
}

pub fn exact_exponents(d: i64, n_max: usize) -> Result<ExponentTable> {
    exact_exponents_of(&crate::classpoly::hilbert_class_poly(d)?, n_max)
}

/// `n^{-1}` mod ℓ by Fermat.
pub(crate) fn inverse_mod(n: u64, ell: u64) -> Result<ModPrime> {
    if n.is_multiple_of(ell) {
        return Err(Error::EllDividesN { ell, n });
    }
    ModPrime::new(n, ell)
        .fermat_inv()
        .ok_or(Error::NotInvertible)
}

/// Reduces an exponent mod ℓ.
pub fn reduce(a: &BigInt, ell: u64) -> ModPrime {
    let r = a.mod_floor(&BigInt::from(ell));
    ModPrime::from_bigint(&r, ell)
}
