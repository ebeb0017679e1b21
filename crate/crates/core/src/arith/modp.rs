use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{bigint_mod_u64, is_prime, rational_mod, Coeff, FieldCoeff, Rational, RingTag};
use crate::error::{Error, Result};

/// An element of the prime field F_ℓ, stored as its canonical
/// representative in `[0, ℓ)`.
///
/// Moduli are limited to `ℓ < 2^32` so products fit in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModPrime {
    value: u64,
    modulus: u64,
}

impl ModPrime {
    /// Builds `value mod ℓ` without checking that ℓ is prime.
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!((2..(1 << 32)).contains(&modulus));
        ModPrime {
            value: value % modulus,
            modulus,
        }
    }

    /// Builds `value mod ℓ` after checking that ℓ is a prime below 2^32.
    pub fn checked(value: i64, modulus: u64) -> Result<Self> {
        if modulus >= (1 << 32) || !is_prime(modulus) {
            return Err(Error::InvalidInput(format!(
                "{modulus} is not a prime below 2^32"
            )));
        }
        Ok(Self::from_i64(value, modulus))
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m);
        ModPrime::new(v as u64, modulus)
    }

    pub fn from_bigint(n: &BigInt, modulus: u64) -> Self {
        ModPrime::new(bigint_mod_u64(n, modulus), modulus)
    }

    pub fn from_rational(q: &Rational, modulus: u64) -> Option<Self> {
        rational_mod(q, modulus)
    }

    pub fn zero(modulus: u64) -> Self {
        ModPrime::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        ModPrime::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// Representative in `(-ℓ/2, ℓ/2]`.
    pub fn centered(self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModPrime::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return None;
        }
        Some(ModPrime::from_i64(t0, self.modulus))
    }

    /// Inverse by Fermat's little theorem, `x^(ℓ-2)`.
    pub fn fermat_inv(self) -> Option<Self> {
        (self.value != 0).then(|| self.pow(self.modulus - 2))
    }

    /// Legendre symbol (self / ℓ) for odd prime ℓ.
    pub fn legendre(self) -> i8 {
        if self.value == 0 {
            return 0;
        }
        if self.pow((self.modulus - 1) / 2).value == 1 {
            1
        } else {
            -1
        }
    }

    /// A square root when one exists (Tonelli-Shanks).
    pub fn sqrt(self) -> Option<Self> {
        let p = self.modulus;
        if self.value == 0 || p == 2 {
            return Some(self);
        }
        if self.legendre() != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = ModPrime::new(2, p);
        while z.legendre() != -1 {
            z = ModPrime::new(z.value + 1, p);
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.value != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }
}

impl fmt::Debug for ModPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for ModPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ModPrime {
    type Output = ModPrime;
    fn add(self, o: ModPrime) -> ModPrime {
        debug_assert_eq!(self.modulus, o.modulus);
        let s = self.value + o.value;
        ModPrime {
            value: if s >= self.modulus {
                s - self.modulus
            } else {
                s
            },
            modulus: self.modulus,
        }
    }
}

impl Sub for ModPrime {
    type Output = ModPrime;
    fn sub(self, o: ModPrime) -> ModPrime {
        debug_assert_eq!(self.modulus, o.modulus);
        ModPrime {
            value: if self.value >= o.value {
                self.value - o.value
            } else {
                self.value + self.modulus - o.value
            },
            modulus: self.modulus,
        }
    }
}

impl Mul for ModPrime {
    type Output = ModPrime;
    fn mul(self, o: ModPrime) -> ModPrime {
        debug_assert_eq!(self.modulus, o.modulus);
        ModPrime {
            value: self.value * o.value % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for ModPrime {
    type Output = ModPrime;
    fn neg(self) -> ModPrime {
        ModPrime {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}

impl Div for ModPrime {
    type Output = ModPrime;
    /// Panics on division by zero; use [`ModPrime::inv`] to handle that case.
    fn div(self, o: ModPrime) -> ModPrime {
        self * o.inv().expect("division by zero in F_l")
    }
}

impl Coeff for ModPrime {
    fn zero_like(&self) -> Self {
        ModPrime::zero(self.modulus)
    }
    fn one_like(&self) -> Self {
        ModPrime::one(self.modulus)
    }
    fn from_bigint_like(&self, n: &BigInt) -> Self {
        ModPrime::from_bigint(n, self.modulus)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        ModPrime::from_i64(n, self.modulus)
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        rational_mod(q, self.modulus)
    }
    fn is_zero_elt(&self) -> bool {
        self.value == 0
    }
    fn tag(&self) -> RingTag {
        RingTag::ModPrime(self.modulus)
    }
    fn unit_inv(&self) -> Option<Self> {
        ModPrime::inv(*self)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        *self * *other
    }
    fn add_ref(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        *self - *other
    }
}

impl FieldCoeff for ModPrime {}
