//! Exact arithmetic substrate.
//!
//! Coefficient rings used throughout the crate all implement [`Coeff`]:
//! `BigInt` (ℤ), `BigRational` (ℚ), [`ModPrime`] (F_ℓ) and [`QuadExt`] over
//! either of the two fields (ℚ(√D) and F_ℓ[√D]). Ring elements carry enough
//! context (a modulus, a discriminant) to build zeros and ones of the same
//! ring, so functions take a prototype element instead of a ring object.

mod dirichlet;
mod functions;
pub mod linalg;
mod modp;
mod quad;
mod sieve;

pub use dirichlet::{dirichlet_convolve, dirichlet_inverse};
pub use functions::{
    bernoulli, divisors, factorize, format_rational, is_fundamental_discriminant, is_prime,
    is_squarefree, kronecker, moebius, parse_rational, sigma,
};
pub use modp::ModPrime;
pub use quad::QuadExt;
pub use sieve::{sieve, PrimeStream, SIEVE_LIMIT};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Identifies a coefficient ring for display and serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    Integer,
    Rational,
    ModPrime(u64),
    QuadRational(u64),
    QuadModPrime(u64, u64),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Integer => write!(f, "ZZ"),
            RingTag::Rational => write!(f, "QQ"),
            RingTag::ModPrime(l) => write!(f, "GF({l})"),
            RingTag::QuadRational(d) => write!(f, "QQ(sqrt({d}))"),
            RingTag::QuadModPrime(d, l) => write!(f, "GF({l})[sqrt({d})]"),
        }
    }
}

/// A commutative ring element that knows how to build other elements of
/// its own ring.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_bigint_like(&self, n: &BigInt) -> Self;
    /// Image of a rational number, if its denominator is invertible here.
    fn from_rational_like(&self, q: &Rational) -> Option<Self>;
    fn is_zero_elt(&self) -> bool;
    fn tag(&self) -> RingTag;
    /// Inverse of a unit; `None` for non-units (including every non-±1
    /// integer).
    fn unit_inv(&self) -> Option<Self>;

    fn from_i64_like(&self, n: i64) -> Self {
        self.from_bigint_like(&BigInt::from(n))
    }

    fn is_one_elt(&self) -> bool {
        *self == self.one_like()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
}

/// A [`Coeff`] that is a field or a quadratic algebra over one, so every
/// element of nonzero norm is a unit.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Option<Self> {
        self.unit_inv()
    }
}

impl Coeff for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn from_bigint_like(&self, n: &BigInt) -> Self {
        n.clone()
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        q.is_integer().then(|| q.to_integer())
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn tag(&self) -> RingTag {
        RingTag::Integer
    }
    fn unit_inv(&self) -> Option<Self> {
        (self.is_one() || (-self).is_one()).then(|| self.clone())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
}

impl Coeff for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn from_bigint_like(&self, n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn tag(&self) -> RingTag {
        RingTag::Rational
    }
    fn unit_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
}

impl FieldCoeff for BigRational {}

/// Reduce an integer modulo `m`, returning the representative in `[0, m)`.
pub fn bigint_mod_u64(n: &BigInt, m: u64) -> u64 {
    let r = n % BigInt::from(m);
    let r = if r.is_negative() {
        r + BigInt::from(m)
    } else {
        r
    };
    r.to_u64().expect("residue fits in u64")
}

/// Reduce a rational number modulo a prime; `None` if ℓ divides the denominator.
pub fn rational_mod(q: &Rational, ell: u64) -> Option<ModPrime> {
    let den = bigint_mod_u64(q.denom(), ell);
    if den == 0 {
        return None;
    }
    let num = ModPrime::new(bigint_mod_u64(q.numer(), ell), ell);
    Some(num * ModPrime::new(den, ell).inv()?)
}
