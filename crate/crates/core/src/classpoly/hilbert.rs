use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::qseries::{jfunction, Poly};

use super::bigfloat::{Complex, Ctx, Fixed};
use super::forms::{reduced_forms, QuadForm};

const MAX_RETRIES: u32 = 3;

/// `c(-1), c(0), c(1), …` of j, extended on demand.
static J_COEFFS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

fn j_coefficients(count: usize) -> Vec<BigInt> {
    let mut cache = J_COEFFS.lock().expect("j coefficient cache poisoned");
    if cache.len() < count {
        let order = (count.max(64) * 2) as i64;
        let j = jfunction(order, &BigInt::zero());
        *cache = j.coeffs().to_vec();
    }
    cache[..count].to_vec()
}

/// A singular modulus to a stated number of decimal digits.
#[derive(Clone, Debug)]
pub struct SingularModulus {
    pub form: QuadForm,
    pub digits: u64,
    ctx: Ctx,
    value: Complex,
}

impl SingularModulus {
    pub fn re_f64(&self) -> f64 {
        self.ctx.to_f64(&self.value.re)
    }

    pub fn im_f64(&self) -> f64 {
        self.ctx.to_f64(&self.value.im)
    }

    pub fn re_decimal(&self, digits: u32) -> String {
        self.ctx.to_decimal(&self.value.re, digits)
    }

    pub fn im_decimal(&self, digits: u32) -> String {
        self.ctx.to_decimal(&self.value.im, digits)
    }

    /// Nearest integer to the real part and the distance `|j - n|`.
    pub fn nearest_integer(&self) -> (BigInt, f64) {
        let (n, err) = self.ctx.round(&self.value.re);
        let dist = self.ctx.to_f64(&err).hypot(self.im_f64());
        (n, dist)
    }
}

/// Working context for `digits` decimals of `j(α_Q)`: the q^{-1} term is
/// about `e^{π√d/a}`, so its magnitude is added as guard bits.
fn context_for(form: &QuadForm, digits: u64) -> Ctx {
    let x = std::f64::consts::PI * (form.d() as f64).sqrt() / form.a as f64;
    let extra = (2.0 * x * std::f64::consts::LOG2_E).ceil() as u64 + 64;
    Ctx {
        bits: Ctx::from_digits(digits + 10).bits + extra,
    }
}

/// Number of terms past `q^0` needed so the tail of the j series at
/// `|q| = e^{-x}` is below `10^{-digits}`, using `c(n) ≤ e^{4π√n}`.
fn terms_needed(x: f64, digits: u64) -> usize {
    let target = -(digits as f64 + 10.0) * std::f64::consts::LN_10;
    let mut n = 1usize;
    loop {
        let nf = n as f64;
        let log_term = 4.0 * std::f64::consts::PI * nf.sqrt() - nf * x;
        if log_term < target && n as f64 * x > 8.0 * std::f64::consts::PI * nf.sqrt() {
            return n;
        }
        n += 1;
    }
}

/// `j(α_Q)` with `α_Q = (-b + i√d)/(2a)`, from the integer q-expansion at
/// `q = e^{-π√d/a} e^{-iπb/a}`.
pub fn singular_modulus(form: &QuadForm, digits: u64) -> Result<SingularModulus> {
    if form.d() <= 0 || form.a <= 0 {
        return Err(Error::InvalidInput(format!(
            "{form} is not positive definite"
        )));
    }
    let digits = digits.max(30);
    let ctx = context_for(form, digits);
    let pi = ctx.pi();
    let sqrt_d = ctx.sqrt(&ctx.small(form.d()));
    let x = ctx.div_int(&ctx.mul(&pi, &sqrt_d), form.a);
    let theta = ctx.div_int(&ctx.mul(&pi, &ctx.small(form.b)), form.a);
    // q^{-1} = e^{x} e^{iπb/a}
    let inv_mag = ctx.exp(&x);
    let mag = ctx.div(&ctx.one(), &inv_mag);
    let rot = ctx.cis(&theta);
    let q_inv = Complex {
        re: ctx.mul(&inv_mag, &rot.re),
        im: ctx.mul(&inv_mag, &rot.im),
    };
    let q = Complex {
        re: ctx.mul(&mag, &rot.re),
        im: Fixed(-ctx.mul(&mag, &rot.im).0),
    };
    let n = terms_needed(ctx.to_f64(&x), digits);
    let coeffs = j_coefficients(n + 2);
    let mut sum = q_inv + Complex::real(ctx.int(&coeffs[1]));
    let mut power = q.clone();
    for c in &coeffs[2..] {
        sum = sum + ctx.cscale(&power, c);
        power = ctx.cmul(&power, &q);
    }
    Ok(SingularModulus {
        form: *form,
        digits,
        ctx,
        value: sum,
    })
}

/// Monic integer polynomial with a stated weight; the weighted product of
/// components is the Hurwitz class polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassComponent {
    pub poly: Poly<BigInt>,
    pub weight: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedClassPoly {
    pub d: i64,
    pub components: Vec<ClassComponent>,
    pub precision_used: u64,
    /// Largest `|P(j(α_Q))|` seen during verification.
    pub residual_bound: f64,
}

impl WeightedClassPoly {
    /// `Σ w·deg`.
    pub fn h(&self) -> Rational {
        self.components.iter().fold(Rational::zero(), |acc, c| {
            acc + &c.weight * Rational::from_integer(c.poly.degree().unwrap_or(0).into())
        })
    }

    /// Product of all components, ignoring weights.
    pub fn radical(&self) -> Poly<BigInt> {
        self.components
            .iter()
            .fold(Poly::one(&BigInt::zero()), |acc, c| acc.mul(&c.poly))
    }

    pub fn class_count(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.poly.degree().unwrap_or(0))
            .sum()
    }
}

/// Decimal digits needed for the product of `count` singular moduli of
/// discriminant `-d`.
pub fn default_precision(d: i64, count: usize) -> u64 {
    let lg = std::f64::consts::PI * (d as f64).sqrt() * count as f64 / std::f64::consts::LN_10;
    lg.ceil() as u64 + 20
}

fn expand(ctx: &Ctx, roots: &[Complex]) -> Vec<Complex> {
    let mut p = vec![Complex::real(ctx.one())];
    for r in roots {
        let mut next = vec![Complex::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + c.clone();
            next[i] = next[i].clone() - ctx.cmul(c, r);
        }
        p = next;
    }
    p
}

/// Rounds the product of `x - j(α_Q)` over `forms` to an integer
/// polynomial; `None` if some coefficient is not within `10^{-6}` of an
/// integer.
fn round_component(forms: &[QuadForm], digits: u64) -> Result<Option<Poly<BigInt>>> {
    let moduli: Vec<SingularModulus> = forms
        .par_iter()
        .map(|f| singular_modulus(f, digits))
        .collect::<Result<_>>()?;
    let bits = moduli.iter().map(|m| m.ctx.bits).max().unwrap_or(64);
    let ctx = Ctx { bits };
    let roots: Vec<Complex> = moduli
        .iter()
        .map(|m| {
            let shift = bits - m.ctx.bits;
            Complex {
                re: Fixed(&m.value.re.0 << shift),
                im: Fixed(&m.value.im.0 << shift),
            }
        })
        .collect();
    let tol = ctx.ten_pow_neg(6);
    let mut coeffs = Vec::new();
    for c in expand(&ctx, &roots) {
        let (n, err) = ctx.round(&c.re);
        if err.0 >= tol.0 || c.im.0.abs() >= tol.0 {
            return Ok(None);
        }
        coeffs.push(n);
    }
    Ok(Some(Poly::new(coeffs, &BigInt::zero())))
}

/// `max |P(j(α_Q))|` with the moduli recomputed at `digits`.
fn residual(poly: &Poly<BigInt>, forms: &[QuadForm], digits: u64) -> Result<f64> {
    let worst = forms
        .par_iter()
        .map(|f| -> Result<f64> {
            let m = singular_modulus(f, digits)?;
            let ctx = m.ctx;
            let mut acc = Complex::zero();
            for c in poly.coeffs().iter().rev() {
                acc = ctx.cmul(&acc, &m.value) + Complex::real(ctx.int(c));
            }
            Ok(ctx.to_f64(&acc.sup_norm()) * std::f64::consts::SQRT_2)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(worst.into_iter().fold(0.0, f64::max))
}

/// Groups reduced forms by weight, largest weight first.
fn forms_by_weight(d: i64) -> Result<Vec<(u32, Vec<QuadForm>)>> {
    let forms = reduced_forms(d)?;
    let mut groups: Vec<(u32, Vec<QuadForm>)> = Vec::new();
    for omega in 1..=3u32 {
        let g: Vec<QuadForm> = forms
            .iter()
            .copied()
            .filter(|f| f.omega() == omega)
            .collect();
        if !g.is_empty() {
            groups.push((omega, g));
        }
    }
    Ok(groups)
}

/// Hurwitz class polynomial of discriminant `-d` as weighted components,
/// verified by rounding and by evaluation at higher precision.
pub fn hilbert_class_poly(d: i64) -> Result<WeightedClassPoly> {
    hilbert_class_poly_at(d, None)
}

/// As [`hilbert_class_poly`], starting from `digits` instead of the default
/// precision schedule.
pub fn hilbert_class_poly_at(d: i64, digits: Option<u64>) -> Result<WeightedClassPoly> {
    let groups = forms_by_weight(d)?;
    let count: usize = groups.iter().map(|(_, g)| g.len()).sum();
    let mut digits = digits.unwrap_or_else(|| default_precision(d, count));
    'attempt: for _ in 0..=MAX_RETRIES {
        let mut components = Vec::new();
        let mut worst = 0f64;
        for (omega, forms) in &groups {
            let Some(poly) = round_component(forms, digits)? else {
                digits *= 2;
                continue 'attempt;
            };
            let r = residual(&poly, forms, digits + 20)?;
            if !(r < 1e-3) {
                digits *= 2;
                continue 'attempt;
            }
            worst = worst.max(r);
            components.push(ClassComponent {
                poly,
                weight: Rational::new(BigInt::one(), BigInt::from(*omega)),
            });
        }
        return Ok(WeightedClassPoly {
            d,
            components,
            precision_used: digits,
            residual_bound: worst,
        });
    }
    Err(Error::InsufficientPrecision {
        d: d as u64,
        attempts: MAX_RETRIES + 1,
    })
}

/// Whether every component has no repeated root over ℚ.
pub fn components_squarefree(p: &WeightedClassPoly) -> bool {
    p.components.iter().all(|c| {
        let q = c
            .poly
            .map(|x| Rational::from_integer(x.clone()), &Rational::zero());
        q.is_squarefree()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;
    use num_traits::ToPrimitive;

    fn ints(p: &Poly<BigInt>) -> Vec<i64> {
        p.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn classical_values() {
        for (form, j) in [
            (QuadForm::new(1, 0, 1), 1728),
            (QuadForm::new(1, 1, 1), 0),
            (QuadForm::new(1, 1, 2), -3375),
        ] {
            let (n, dist) = singular_modulus(&form, 40).unwrap().nearest_integer();
            assert_eq!(n, BigInt::from(j));
            assert!(dist < 1e-40, "{form}: {dist}");
        }
    }

    #[test]
    fn two_precisions_agree() {
        let f = QuadForm::new(2, 2, 3);
        let lo = singular_modulus(&f, 40).unwrap();
        let hi = singular_modulus(&f, 60).unwrap();
        assert_eq!(lo.re_decimal(38), hi.re_decimal(38));
        assert_eq!(lo.im_decimal(38), hi.im_decimal(38));
    }

    #[test]
    fn small_class_polynomials() {
        let p4 = hilbert_class_poly(4).unwrap();
        assert_eq!(p4.components.len(), 1);
        assert_eq!(ints(&p4.components[0].poly), vec![-1728, 1]);
        assert_eq!(p4.components[0].weight, parse_rational("1/2").unwrap());
        let p7 = hilbert_class_poly(7).unwrap();
        assert_eq!(ints(&p7.components[0].poly), vec![3375, 1]);
        let p3 = hilbert_class_poly(3).unwrap();
        assert_eq!(ints(&p3.components[0].poly), vec![0, 1]);
        assert_eq!(p3.h(), parse_rational("1/3").unwrap());
    }

    #[test]
    fn degree_two_example() {
        let p = hilbert_class_poly(20).unwrap();
        assert_eq!(p.components.len(), 1);
        let c = &p.components[0].poly;
        assert_eq!(c.degree(), Some(2));
        assert_eq!(c.coeff(1), BigInt::from(-1264000));
        assert_eq!(c.coeff(0), BigInt::from(-681472000));
        assert!(components_squarefree(&p));
        assert!(p.residual_bound < 1e-3);
    }

    #[test]
    fn imprimitive_classes_form_separate_components() {
        let p = hilbert_class_poly(12).unwrap();
        assert_eq!(p.components.len(), 2);
        assert_eq!(ints(&p.components[0].poly), vec![-54000, 1]);
        assert_eq!(ints(&p.components[1].poly), vec![0, 1]);
        assert_eq!(p.h(), parse_rational("4/3").unwrap());
    }
}
