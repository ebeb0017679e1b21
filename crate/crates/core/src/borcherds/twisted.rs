use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{dirichlet_inverse, divisors, kronecker, moebius, QuadExt, Rational};
use crate::error::Result;
use crate::qseries::pd_log_coeffs;

/// `ν(1..=n)`, the Dirichlet inverse of `f₂(D, ·)` in ℚ(√D).
pub fn nu_sequence(big_d: u64, n: usize) -> Result<Vec<QuadExt<Rational>>> {
    dirichlet_inverse(&pd_log_coeffs(big_d, n as u64)?)
}

/// `ν(m)` for a fundamental `D > 1`.
pub fn nu(big_d: u64, m: u64) -> Result<QuadExt<Rational>> {
    Ok(nu_sequence(big_d, m as usize)?.pop().expect("m >= 1"))
}

/// `μ(m)(D/m)/√D = μ(m)(D/m)√D / D`.
pub fn nu_closed_form(big_d: u64, m: u64) -> QuadExt<Rational> {
    let s = moebius(m) as i64 * kronecker(big_d as i64, m as i64) as i64;
    QuadExt::new(
        Rational::zero(),
        Rational::new(s.into(), (big_d as i64).into()),
        big_d,
    )
}

/// `g(n) = Σ_{m|n} m·A(m)·f₂(D, n/m)` for `1 ≤ n ≤ N`.
pub fn twisted_forward(big_d: u64, a: &[BigInt]) -> Result<Vec<QuadExt<Rational>>> {
    let f2 = pd_log_coeffs(big_d, a.len() as u64)?;
    let zero = QuadExt::from_base(Rational::zero(), big_d);
    let mut g = vec![zero; a.len()];
    for n in 1..=a.len() as u64 {
        for m in divisors(n) {
            let w = Rational::from_integer(BigInt::from(m) * &a[m as usize - 1]);
            g[n as usize - 1] = g[n as usize - 1].clone() + f2[(n / m) as usize - 1].scale(&w);
        }
    }
    Ok(g)
}

/// `A(n) = (1/n) Σ_{m|n} ν(m) g(n/m)`; `None` where the result is not a
/// rational integer.
pub fn twisted_inverse(big_d: u64, g: &[QuadExt<Rational>]) -> Result<Vec<Option<BigInt>>> {
    let nu = nu_sequence(big_d, g.len())?;
    let mut out = Vec::with_capacity(g.len());
    for n in 1..=g.len() as u64 {
        let mut s = QuadExt::from_base(Rational::zero(), big_d);
        for m in divisors(n) {
            s = s + nu[m as usize - 1].clone() * g[(n / m) as usize - 1].clone();
        }
        let s = s.scale(&Rational::new(1.into(), (n as i64).into()));
        out.push((s.is_rational() && s.a.is_integer()).then(|| s.a.to_integer()));
    }
    Ok(out)
}

/// Forward map followed by the ν-inversion; equals `a` when the inversion
/// is exact.
pub fn twisted_roundtrip(big_d: u64, a: &[BigInt]) -> Result<Vec<Option<BigInt>>> {
    twisted_inverse(big_d, &twisted_forward(big_d, a)?)
}
