use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Kronecker symbol `(a/n)`.
///
/// Conventions: `(a/1) = 1`; `(a/0) = 1` if `a = ±1` and `0` otherwise;
/// `(a/-1) = -1` if `a < 0` and `1` otherwise; `(a/2)` is `0` for even `a`,
/// `1` for `a ≡ ±1 (mod 8)` and `-1` for `a ≡ ±3 (mod 8)`. Negative `n` is
/// handled by factoring out `-1`.
pub fn kronecker(a: i64, n: i64) -> i8 {
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result: i8 = 1;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 {
            let r = a.rem_euclid(8);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
    }
    // n is now odd and positive: Jacobi symbol.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Bernoulli numbers `B_0 … B_m` from `Σ_{j=0}^{m} C(m+1, j) B_j = 0` with `B_1 = -1/2`.
pub fn bernoulli_table(m: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = vec![Rational::one()];
    for n in 1..=m {
        let row = binomial_row(n + 1);
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += b * Rational::from_integer(row[j].clone());
        }
        table.push(-acc / Rational::from_integer(row[n].clone()));
    }
    table
}

/// The Bernoulli number `B_m` for even `m ≥ 2`. Odd or zero `m` is rejected.
pub fn bernoulli(m: u64) -> Result<Rational> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "bernoulli index must be even and >= 2, got {m}"
        )));
    }
    Ok(bernoulli_table(m as usize)
        .pop()
        .expect("table is nonempty"))
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut p = 3;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

pub fn is_squarefree(n: u64) -> bool {
    n != 0 && factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Sorted divisors of `n ≥ 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `σ_k(n) = Σ_{d|n} d^k`.
pub fn sigma(k: u32, n: u64) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|d| Pow::pow(BigInt::from(d), k))
        .sum()
}

pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Whether `disc` is the discriminant of a quadratic field. `1` is not.
pub fn is_fundamental_discriminant(disc: i64) -> bool {
    if disc == 0 || disc == 1 {
        return false;
    }
    let abs = disc.unsigned_abs();
    match disc.rem_euclid(4) {
        1 => is_squarefree(abs),
        0 => {
            let m = disc / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Parses `"num/den"` or `"num"` into a normalized rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    fn int(s: &str) -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 10_000
        {
            return Err(Error::Parse(format!("bad integer {s:?}")));
        }
        s.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => {
            if d.starts_with('-') {
                return Err(Error::Parse(format!("negative denominator in {s:?}")));
            }
            (int(n)?, int(d)?)
        }
        None => (int(s)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `"num/den"` with the denominator always present.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
