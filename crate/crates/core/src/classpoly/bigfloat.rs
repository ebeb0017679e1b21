//! Binary fixed-point real and complex arithmetic: a value `x` is stored
//! as the integer `⌊x·2^bits⌋`.

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ctx {
    pub bits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed(pub BigInt);

impl Ctx {
    pub fn from_digits(digits: u64) -> Self {
        Ctx {
            bits: (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64 + 8,
        }
    }

    pub fn one(&self) -> Fixed {
        Fixed(BigInt::one() << self.bits)
    }

    pub fn int(&self, n: &BigInt) -> Fixed {
        Fixed(n << self.bits)
    }

    pub fn small(&self, n: i64) -> Fixed {
        self.int(&BigInt::from(n))
    }

    pub fn mul(&self, x: &Fixed, y: &Fixed) -> Fixed {
        Fixed((&x.0 * &y.0) >> self.bits)
    }

    pub fn div(&self, x: &Fixed, y: &Fixed) -> Fixed {
        Fixed((&x.0 << self.bits) / &y.0)
    }

    pub fn div_int(&self, x: &Fixed, n: i64) -> Fixed {
        Fixed(&x.0 / n)
    }

    pub fn sqrt(&self, x: &Fixed) -> Fixed {
        assert!(!x.0.is_negative(), "sqrt of a negative number");
        Fixed((&x.0 << self.bits).sqrt())
    }

    /// `arctan(1/x)` for an integer `x ≥ 2`.
    fn arccot(&self, x: i64) -> Fixed {
        let x2 = BigInt::from(x * x);
        let mut power = self.one().0 / x;
        let mut sum = power.clone();
        let mut k = 1i64;
        loop {
            power /= &x2;
            let term = &power / (2 * k + 1);
            if term.is_zero() {
                break;
            }
            if k % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
            k += 1;
        }
        Fixed(sum)
    }

    /// π from Machin's formula `π = 16 arccot 5 − 4 arccot 239`.
    pub fn pi(&self) -> Fixed {
        let guard = Ctx {
            bits: self.bits + 32,
        };
        let v = guard.arccot(5).0 * 16 - guard.arccot(239).0 * 4;
        Fixed(v >> 32)
    }

    /// `e^x` for real `x`.
    pub fn exp(&self, x: &Fixed) -> Fixed {
        let magnitude = x.0.abs().bits().saturating_sub(self.bits);
        let k = magnitude + 24;
        let g = Ctx {
            bits: self.bits + 2 * k + 32,
        };
        let mut y = Fixed((x.0.clone() << (g.bits - self.bits)) >> k);
        let mut term = g.one();
        let mut sum = g.one();
        let mut n = 1i64;
        loop {
            term = g.div_int(&g.mul(&term, &y), n);
            if term.0.is_zero() {
                break;
            }
            sum = Fixed(sum.0 + &term.0);
            n += 1;
        }
        for _ in 0..k {
            sum = g.mul(&sum, &sum);
        }
        y = sum;
        Fixed(y.0 >> (g.bits - self.bits))
    }

    /// `e^{iθ}` for real `θ` with `|θ| ≤ 4`.
    pub fn cis(&self, theta: &Fixed) -> Complex {
        let k = 24u64;
        let g = Ctx {
            bits: self.bits + 2 * k + 32,
        };
        let t = Fixed((theta.0.clone() << (g.bits - self.bits)) >> k);
        let mut term = Complex::real(g.one());
        let mut sum = term.clone();
        let mut n = 1i64;
        loop {
            // term *= iθ/n
            term = Complex {
                re: g.div_int(&g.mul(&term.im, &t), -n),
                im: g.div_int(&g.mul(&term.re, &t), n),
            };
            if term.re.0.is_zero() && term.im.0.is_zero() {
                break;
            }
            sum = sum + term.clone();
            n += 1;
        }
        for _ in 0..k {
            sum = g.cmul(&sum, &sum);
        }
        Complex {
            re: Fixed(sum.re.0 >> (g.bits - self.bits)),
            im: Fixed(sum.im.0 >> (g.bits - self.bits)),
        }
    }

    pub fn cmul(&self, x: &Complex, y: &Complex) -> Complex {
        Complex {
            re: Fixed((&x.re.0 * &y.re.0 - &x.im.0 * &y.im.0) >> self.bits),
            im: Fixed((&x.re.0 * &y.im.0 + &x.im.0 * &y.re.0) >> self.bits),
        }
    }

    pub fn cscale(&self, x: &Complex, n: &BigInt) -> Complex {
        Complex {
            re: Fixed(&x.re.0 * n),
            im: Fixed(&x.im.0 * n),
        }
    }

    pub fn to_f64(&self, x: &Fixed) -> f64 {
        let shift = x.0.bits().saturating_sub(60);
        let top = (&x.0 >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// Nearest integer and the absolute rounding error as a fixed-point value.
    pub fn round(&self, x: &Fixed) -> (BigInt, Fixed) {
        let half = BigInt::one() << (self.bits - 1);
        let n = (&x.0 + half) >> self.bits;
        let err = Fixed((&x.0 - (&n << self.bits)).abs());
        (n, err)
    }

    /// `10^{-k}` rounded down.
    pub fn ten_pow_neg(&self, k: u32) -> Fixed {
        Fixed(self.one().0 / BigInt::from(10).pow(k))
    }

    /// Renders with `digits` decimals after the point.
    pub fn to_decimal(&self, x: &Fixed, digits: u32) -> String {
        let scale = BigInt::from(10).pow(digits);
        let scaled = (&x.0.abs() * &scale) >> self.bits;
        let int = &scaled / &scale;
        let frac = &scaled % &scale;
        let sign = if x.0.is_negative() { "-" } else { "" };
        format!(
            "{sign}{int}.{:0>width$}",
            frac.to_string(),
            width = digits as usize
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: Fixed,
    pub im: Fixed,
}

impl Complex {
    pub fn real(re: Fixed) -> Self {
        Complex {
            re,
            im: Fixed(BigInt::zero()),
        }
    }

    pub fn zero() -> Self {
        Complex::real(Fixed(BigInt::zero()))
    }

    /// `max(|re|, |im|)`, a norm within √2 of the modulus.
    pub fn sup_norm(&self) -> Fixed {
        Fixed(self.re.0.abs().max(self.im.0.abs()))
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, o: Complex) -> Complex {
        Complex {
            re: Fixed(self.re.0 + o.re.0),
            im: Fixed(self.im.0 + o.im.0),
        }
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, o: Complex) -> Complex {
        Complex {
            re: Fixed(self.re.0 - o.re.0),
            im: Fixed(self.im.0 - o.im.0),
        }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: Fixed(-self.re.0),
            im: Fixed(-self.im.0),
        }
    }
}
