use super::{divisors, FieldCoeff};
use crate::error::{Error, Result};

/// Dirichlet convolution of two sequences indexed from 1 (`f[0]` is `f(1)`),
/// truncated to the shorter length.
pub fn dirichlet_convolve<R: FieldCoeff>(f: &[R], g: &[R]) -> Vec<R> {
    let n = f.len().min(g.len());
    if n == 0 {
        return Vec::new();
    }
    let zero = f[0].zero_like();
    let mut out = vec![zero; n];
    for i in 1..=n {
        for j in 1..=n / i {
            let prod = f[i - 1].mul_ref(&g[j - 1]);
            out[i * j - 1] = out[i * j - 1].add_ref(&prod);
        }
    }
    out
}

/// Dirichlet inverse `ν` of `f` on `1..=N`:
/// `ν(1) = f(1)^{-1}`, `ν(n) = -f(1)^{-1} Σ_{d|n, d<n} ν(d) f(n/d)`.
pub fn dirichlet_inverse<R: FieldCoeff>(f: &[R]) -> Result<Vec<R>> {
    let Some(first) = f.first() else {
        return Ok(Vec::new());
    };
    let inv_first = first.inv().ok_or(Error::NoDirichletInverse)?;
    let mut nu = Vec::with_capacity(f.len());
    nu.push(inv_first.clone());
    for n in 2..=f.len() as u64 {
        let mut acc = first.zero_like();
        for d in divisors(n) {
            if d == n {
                continue;
            }
            acc = acc + nu[d as usize - 1].mul_ref(&f[(n / d) as usize - 1]);
        }
        nu.push(-(acc * inv_first.clone()));
    }
    Ok(nu)
}
