use std::fmt;

use crate::arith::{Coeff, FieldCoeff, ModPrime};
use crate::error::{Error, Result};

use super::QSeries;

/// Dense univariate polynomial, coefficients in ascending degree with no
/// trailing zeros.
#[derive(Clone, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
    zero: R,
}

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>, proto: &R) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elt()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            zero: proto.zero_like(),
        }
    }

    pub fn zero(proto: &R) -> Self {
        Self::new(Vec::new(), proto)
    }

    pub fn one(proto: &R) -> Self {
        Self::new(vec![proto.one_like()], proto)
    }

    /// `x`.
    pub fn x(proto: &R) -> Self {
        Self::new(vec![proto.zero_like(), proto.one_like()], proto)
    }

    /// `x - r`.
    pub fn linear(root: R) -> Self {
        let one = root.one_like();
        let proto = root.zero_like();
        Self::new(vec![-root, one], &proto)
    }

    /// `Π (x - r)`.
    pub fn from_roots(roots: &[R], proto: &R) -> Self {
        roots
            .iter()
            .fold(Self::one(proto), |acc, r| acc.mul(&Self::linear(r.clone())))
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn proto(&self) -> &R {
        &self.zero
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one_elt())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| self.coeff(k).add_ref(&other.coeff(k)))
                .collect(),
            &self.zero,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| self.coeff(k).sub_ref(&other.coeff(k)))
                .collect(),
            &self.zero,
        )
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::new(
            self.coeffs.iter().map(|c| c.mul_ref(s)).collect(),
            &self.zero,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.zero);
        }
        let mut out = vec![self.zero.clone(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out, &self.zero)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.zero), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&self.zero.from_i64_like(k as i64)))
                .collect(),
            &self.zero,
        )
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(self.zero.clone(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// `P(f)` for a q-series `f`, by Horner's rule.
    pub fn eval_series(&self, f: &QSeries<R>) -> QSeries<R> {
        let v = f.valuation().unwrap_or(f.lead());
        let const_order = (f.order() - v).max(f.order());
        let mut iter = self.coeffs.iter().rev();
        let Some(top) = iter.next() else {
            return QSeries::zero(0, const_order, &self.zero);
        };
        let mut acc = QSeries::monomial(top.clone(), 0, const_order);
        for c in iter {
            acc = acc.mul(f).add_scalar(c);
        }
        acc
    }

    /// Division with remainder by a divisor with unit leading coefficient.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::NotInvertible)?;
        let lead_inv = lead.unit_inv().ok_or(Error::NotInvertible)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(&self.zero), self.clone()));
        }
        let mut quot = vec![self.zero.clone(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul_ref(&lead_inv);
            if !c.is_zero_elt() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub_ref(&c.mul_ref(dc));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot, &self.zero), Self::new(rem, &self.zero)))
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S, proto: &S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect(), proto)
    }
}

impl<R: FieldCoeff> Poly<R> {
    /// Scales to leading coefficient 1; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(|c| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor over a field").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// No repeated factor: `gcd(f, f') = 1`. Valid whenever the degree is
    /// below the characteristic.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl Poly<num_bigint::BigInt> {
    pub fn reduce_mod(&self, ell: u64) -> Poly<ModPrime> {
        self.map(|c| ModPrime::from_bigint(c, ell), &ModPrime::zero(ell))
    }
}

impl<R: Coeff> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.zero.tag(), self)
    }
}

impl<R: Coeff> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero_elt())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
