use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Positive definite form `ax² + bxy + cy²` of discriminant `b² - 4ac = -d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    /// `d = 4ac - b²`.
    pub fn d(&self) -> i64 {
        4 * self.a * self.c - self.b * self.b
    }

    pub fn is_reduced(&self) -> bool {
        let QuadForm { a, b, c } = *self;
        a > 0 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    pub fn content(&self) -> i64 {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    /// `ω_Q`: 3 for multiples of `x² + xy + y²`, 2 for multiples of
    /// `x² + y²`, otherwise 1.
    pub fn omega(&self) -> u32 {
        let g = self.content();
        match (self.a / g, self.b / g, self.c / g) {
            (1, 1, 1) => 3,
            (1, 0, 1) => 2,
            _ => 1,
        }
    }

    pub fn weight(&self) -> Rational {
        Rational::new(BigInt::from(1), BigInt::from(self.omega()))
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

pub(crate) fn check_discriminant(d: i64) -> Result<()> {
    if d <= 0 || !matches!(d.rem_euclid(4), 0 | 3) {
        return Err(Error::NotADiscriminant(d));
    }
    Ok(())
}

/// One reduced representative per SL₂(ℤ)-class of discriminant `-d`,
/// imprimitive classes included.
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    check_discriminant(d)?;
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= d {
        for b in -a + 1..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b + d;
            if num % (4 * a) != 0 {
                continue;
            }
            let f = QuadForm::new(a, b, num / (4 * a));
            if f.is_reduced() {
                out.push(f);
            }
        }
        a += 1;
    }
    Ok(out)
}

/// `Σ 1/ω_Q` over the classes of discriminant `-d`.
pub fn hurwitz_class_number(d: i64) -> Result<Rational> {
    Ok(reduced_forms(d)?
        .iter()
        .fold(Rational::from_integer(0.into()), |acc, f| acc + f.weight()))
}
