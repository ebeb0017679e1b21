use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Coeff, FieldCoeff, ModPrime, Rational, RingTag};

/// `a + b√D` over a base field (ℚ or F_ℓ).
///
/// The element is stored symbolically even when D happens to be a square
/// in the base field; [`QuadExt::reduce_to_prime_field`] gives the image in
/// F_ℓ under a chosen square root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<F> {
    pub a: F,
    pub b: F,
    disc: u64,
}

impl<F: FieldCoeff> QuadExt<F> {
    pub fn new(a: F, b: F, disc: u64) -> Self {
        QuadExt { a, b, disc }
    }

    /// The rational element `a`.
    pub fn from_base(a: F, disc: u64) -> Self {
        let b = a.zero_like();
        QuadExt { a, b, disc }
    }

    /// `√D` itself.
    pub fn sqrt_disc(proto: &F, disc: u64) -> Self {
        QuadExt {
            a: proto.zero_like(),
            b: proto.one_like(),
            disc,
        }
    }

    pub fn disc(&self) -> u64 {
        self.disc
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero_elt()
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            disc: self.disc,
        }
    }

    /// `a² - D b²`.
    pub fn norm(&self) -> F {
        let d = self.a.from_i64_like(self.disc as i64);
        self.a.mul_ref(&self.a) - d * self.b.mul_ref(&self.b)
    }

    pub fn scale(&self, s: &F) -> Self {
        QuadExt {
            a: self.a.mul_ref(s),
            b: self.b.mul_ref(s),
            disc: self.disc,
        }
    }
}

impl QuadExt<ModPrime> {
    /// Maps `a + b√D` to `a + b·s` where `s² = D` in F_ℓ.
    pub fn reduce_to_prime_field(&self, sqrt_d: ModPrime) -> ModPrime {
        debug_assert_eq!(
            sqrt_d * sqrt_d,
            ModPrime::from_i64(self.disc as i64, sqrt_d.modulus())
        );
        self.a + self.b * sqrt_d
    }
}

impl QuadExt<Rational> {
    /// Reduction to F_ℓ[√D]; `None` if ℓ divides a denominator.
    pub fn reduce_mod(&self, ell: u64) -> Option<QuadExt<ModPrime>> {
        Some(QuadExt {
            a: ModPrime::from_rational(&self.a, ell)?,
            b: ModPrime::from_rational(&self.b, ell)?,
            disc: self.disc,
        })
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.disc as f64).sqrt()
    }
}

impl<F: FieldCoeff> fmt::Debug for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})*sqrt({})", self.a, self.b, self.disc)
    }
}

impl<F: FieldCoeff> fmt::Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})√{}", self.a, self.b, self.disc)
    }
}

impl<F: FieldCoeff> Add for QuadExt<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.disc, o.disc);
        QuadExt {
            a: self.a + o.a,
            b: self.b + o.b,
            disc: self.disc,
        }
    }
}

impl<F: FieldCoeff> Sub for QuadExt<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        debug_assert_eq!(self.disc, o.disc);
        QuadExt {
            a: self.a - o.a,
            b: self.b - o.b,
            disc: self.disc,
        }
    }
}

impl<F: FieldCoeff> Mul for QuadExt<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.disc, o.disc);
        let d = self.a.from_i64_like(self.disc as i64);
        QuadExt {
            a: self.a.mul_ref(&o.a) + d * self.b.mul_ref(&o.b),
            b: self.a.mul_ref(&o.b) + self.b.mul_ref(&o.a),
            disc: self.disc,
        }
    }
}

impl<F: FieldCoeff> Neg for QuadExt<F> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt {
            a: -self.a,
            b: -self.b,
            disc: self.disc,
        }
    }
}

impl<F: FieldCoeff> Coeff for QuadExt<F> {
    fn zero_like(&self) -> Self {
        QuadExt::from_base(self.a.zero_like(), self.disc)
    }
    fn one_like(&self) -> Self {
        QuadExt::from_base(self.a.one_like(), self.disc)
    }
    fn from_bigint_like(&self, n: &BigInt) -> Self {
        QuadExt::from_base(self.a.from_bigint_like(n), self.disc)
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(QuadExt::from_base(self.a.from_rational_like(q)?, self.disc))
    }
    fn is_zero_elt(&self) -> bool {
        self.a.is_zero_elt() && self.b.is_zero_elt()
    }
    fn tag(&self) -> RingTag {
        match self.a.tag() {
            RingTag::ModPrime(l) => RingTag::QuadModPrime(self.disc, l),
            _ => RingTag::QuadRational(self.disc),
        }
    }
    fn unit_inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(self.conjugate().scale(&n))
    }
}

impl<F: FieldCoeff> FieldCoeff for QuadExt<F> {}
