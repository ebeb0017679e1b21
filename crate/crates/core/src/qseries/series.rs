use std::fmt;

use crate::arith::{Coeff, ModPrime, Rational};
use crate::error::{Error, Result};

/// A truncated Laurent series `Σ_{e=lead}^{order} c_e q^e + O(q^{order+1})`.
///
/// `order` is inclusive: every coefficient with exponent `≤ order` is known.
/// Arithmetic tracks how much of each operand is reliable, so results never
/// claim coefficients beyond what their inputs determine.
/// Equality compares the truncation order and every coefficient, not the
/// storage offset.
#[derive(Clone)]
pub struct QSeries<R> {
    lead: i64,
    order: i64,
    coeffs: Vec<R>,
    zero: R,
}

impl<R: Coeff> QSeries<R> {
    /// Series with coefficients `coeffs[i]` at `q^(lead+i)`, known through
    /// the last supplied coefficient.
    pub fn from_coeffs(lead: i64, coeffs: Vec<R>, proto: &R) -> Self {
        let order = lead + coeffs.len() as i64 - 1;
        QSeries {
            lead,
            order,
            coeffs,
            zero: proto.zero_like(),
        }
    }

    /// The zero series known on `[lead, order]`.
    pub fn zero(lead: i64, order: i64, proto: &R) -> Self {
        let len = (order - lead + 1).max(0) as usize;
        QSeries {
            lead,
            order,
            coeffs: vec![proto.zero_like(); len],
            zero: proto.zero_like(),
        }
    }

    pub fn one(order: i64, proto: &R) -> Self {
        Self::monomial(proto.one_like(), 0, order)
    }

    /// `c·q^e` known through `order`.
    pub fn monomial(c: R, e: i64, order: i64) -> Self {
        let mut s = Self::zero(e, order, &c);
        if let Some(slot) = s.coeffs.first_mut() {
            *slot = c;
        }
        s
    }

    /// Builds a series from a coefficient function on `[lead, order]`.
    pub fn from_fn(lead: i64, order: i64, proto: &R, mut f: impl FnMut(i64) -> R) -> Self {
        let coeffs = (lead..=order).map(&mut f).collect();
        QSeries {
            lead,
            order,
            coeffs,
            zero: proto.zero_like(),
        }
    }

    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn proto(&self) -> &R {
        &self.zero
    }

    /// Coefficients from `q^lead` through `q^order`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `q^e`; `None` beyond the truncation order.
    pub fn get(&self, e: i64) -> Option<R> {
        if e > self.order {
            None
        } else if e < self.lead {
            Some(self.zero.clone())
        } else {
            Some(self.coeffs[(e - self.lead) as usize].clone())
        }
    }

    /// Coefficient of `q^e`, panicking beyond the truncation order.
    pub fn coeff(&self, e: i64) -> R {
        self.get(e)
            .unwrap_or_else(|| panic!("coefficient q^{e} beyond truncation order {}", self.order))
    }

    /// Coefficient of `q^e` or a truncation error.
    pub fn try_coeff(&self, e: i64) -> Result<R> {
        self.get(e).ok_or(Error::Truncation {
            needed: e,
            available: self.order,
        })
    }

    /// Exponent of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero_elt())
            .map(|i| self.lead + i as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops coefficients beyond `order` (no-op if already shorter).
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        let len = (order - self.lead + 1).max(0) as usize;
        QSeries {
            lead: self.lead,
            order,
            coeffs: self.coeffs[..len.min(self.coeffs.len())].to_vec(),
            zero: self.zero.clone(),
        }
    }

    /// Removes leading zero coefficients.
    pub fn normalized(&self) -> Self {
        match self.valuation() {
            Some(v) if v > self.lead => QSeries {
                lead: v,
                order: self.order,
                coeffs: self.coeffs[(v - self.lead) as usize..].to_vec(),
                zero: self.zero.clone(),
            },
            _ => self.clone(),
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let lead = self.lead.min(other.lead);
        let order = self.order.min(other.order);
        Self::from_fn(lead, order, &self.zero, |e| {
            f(&self.coeff(e), &other.coeff(e))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.add_ref(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.sub_ref(b))
    }

    /// Adds a constant to the `q^0` coefficient.
    pub fn add_scalar(&self, c: &R) -> Self {
        if self.order < 0 {
            return self.clone();
        }
        let lead = self.lead.min(0);
        Self::from_fn(lead, self.order, &self.zero, |e| {
            let x = self.coeff(e);
            if e == 0 {
                x.add_ref(c)
            } else {
                x
            }
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone(), &self.zero)
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|c| c.mul_ref(s), &self.zero)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            lead: self.lead + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
            zero: self.zero.clone(),
        }
    }

    /// Schoolbook product, known through
    /// `min(order_a + val_b, order_b + val_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        let va = self.valuation().unwrap_or(self.lead);
        let vb = other.valuation().unwrap_or(other.lead);
        let order = (self.order + vb).min(other.order + va);
        let lead = va + vb;
        let len = (order - lead + 1).max(0) as usize;
        let mut out = vec![self.zero.clone(); len];
        let a = &self.coeffs[(va - self.lead) as usize..];
        let b = &other.coeffs[(vb - other.lead) as usize..];
        for (i, x) in a.iter().enumerate().take(len) {
            if x.is_zero_elt() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(len - i) {
                if y.is_zero_elt() {
                    continue;
                }
                out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
            }
        }
        QSeries {
            lead,
            order,
            coeffs: out,
            zero: self.zero.clone(),
        }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            let v = self.valuation().unwrap_or(self.lead);
            return Self::one(self.order - v, &self.zero);
        }
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result.expect("k > 0")
    }

    /// Multiplicative inverse; the first nonzero coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::NotInvertible)?;
        let c0 = self.coeff(v);
        let c0_inv = c0.unit_inv().ok_or(Error::NotInvertible)?;
        let rel = (self.order - v).max(-1);
        let n = (rel + 1) as usize;
        let src = &self.coeffs[(v - self.lead) as usize..];
        let mut b: Vec<R> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                b.push(c0_inv.clone());
                continue;
            }
            let mut acc = self.zero.clone();
            for i in 1..=k {
                if !src[i].is_zero_elt() {
                    acc = acc.add_ref(&src[i].mul_ref(&b[k - i]));
                }
            }
            b.push(-(acc.mul_ref(&c0_inv)));
        }
        Ok(QSeries {
            lead: -v,
            order: -v + rel,
            coeffs: b,
            zero: self.zero.clone(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// `q·d/dq`.
    pub fn q_derivative(&self) -> Self {
        QSeries {
            lead: self.lead,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul_ref(&self.zero.from_i64_like(self.lead + i as i64)))
                .collect(),
            zero: self.zero.clone(),
        }
    }

    /// `q f'/f` for `f` with unit leading coefficient.
    pub fn log_derivative(&self) -> Result<Self> {
        self.q_derivative().div(self)
    }

    /// Coefficient-wise map into another ring.
    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S, proto: &S) -> QSeries<S> {
        QSeries {
            lead: self.lead,
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
            zero: proto.zero_like(),
        }
    }

    /// Whether two series agree on every coefficient both of them know.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Smallest exponent, up to the common truncation order, where the two
    /// series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<i64> {
        let order = self.order.min(other.order);
        (self.lead.min(other.lead)..=order).find(|&e| self.coeff(e) != other.coeff(e))
    }

    /// Canonical text form `c·q^e + … + O(q^(N+1))`, zero terms omitted.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero_elt())
            .map(|(i, c)| format!("{}·q^{}", c, self.lead + i as i64))
            .collect();
        parts.push(format!("O(q^{})", self.order + 1));
        parts.join(" + ")
    }
}

impl QSeries<Rational> {
    /// Reduction modulo ℓ; fails if ℓ divides any denominator.
    pub fn reduce_mod(&self, ell: u64) -> Result<QSeries<ModPrime>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| ModPrime::from_rational(c, ell).ok_or(Error::NotInvertible))
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries {
            lead: self.lead,
            order: self.order,
            coeffs,
            zero: ModPrime::zero(ell),
        })
    }
}

impl QSeries<num_bigint::BigInt> {
    pub fn reduce_mod(&self, ell: u64) -> QSeries<ModPrime> {
        self.map(|c| ModPrime::from_bigint(c, ell), &ModPrime::zero(ell))
    }

    pub fn to_rational(&self) -> QSeries<Rational> {
        self.map(
            |c| Rational::from_integer(c.clone()),
            &Rational::from_integer(0.into()),
        )
    }
}

impl<R: Coeff> PartialEq for QSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.first_mismatch(other).is_none()
    }
}

impl<R: Coeff> fmt::Debug for QSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{}]({})", self.zero.tag(), self.render())
    }
}

impl<R: Coeff> fmt::Display for QSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
