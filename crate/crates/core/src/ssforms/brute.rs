//! Supersingular j-invariants by direct point counting over F_{ℓ²}.

use rayon::prelude::*;

use crate::arith::ModPrime;
use crate::error::{Error, Result};
use crate::qseries::Poly;

use super::kaneko::check_prime_at_least_5;

pub const BRUTE_FORCE_LIMIT: u64 = 100;

/// F_{ℓ²} = F_ℓ[√n] for a fixed nonresidue `n`, elements `a + b√n` packed
/// as `a + bℓ`.
struct Fp2 {
    p: u64,
    nonres: u64,
}

impl Fp2 {
    fn new(p: u64) -> Self {
        let nonres = (2..p)
            .find(|&n| ModPrime::new(n, p).legendre() == -1)
            .expect("odd prime has a nonresidue");
        Fp2 { p, nonres }
    }

    fn size(&self) -> usize {
        (self.p * self.p) as usize
    }

    fn pack(&self, (a, b): (u64, u64)) -> usize {
        (a + b * self.p) as usize
    }

    fn unpack(&self, x: usize) -> (u64, u64) {
        let x = x as u64;
        (x % self.p, x / self.p)
    }

    fn add(&self, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
        ((x.0 + y.0) % self.p, (x.1 + y.1) % self.p)
    }

    fn mul(&self, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
        let p = self.p;
        let a = (x.0 * y.0 + (x.1 * y.1) % p * self.nonres) % p;
        let b = (x.0 * y.1 + x.1 * y.0) % p;
        (a, b)
    }

    fn inv(&self, x: (u64, u64)) -> (u64, u64) {
        let p = self.p;
        let norm = (x.0 * x.0 + p * p - (x.1 * x.1) % p * self.nonres % p) % p;
        let ninv = ModPrime::new(norm, p)
            .inv()
            .expect("nonzero element")
            .value();
        (x.0 * ninv % p, (p - x.1) % p * ninv % p)
    }

    fn scalar(&self, c: u64) -> (u64, u64) {
        (c % self.p, 0)
    }

    /// `χ(x)` for every element: 0, 1 for nonzero squares, -1 otherwise.
    fn character_table(&self) -> Vec<i8> {
        let mut t = vec![-1i8; self.size()];
        t[0] = 0;
        for x in 1..self.size() {
            let u = self.unpack(x);
            t[self.pack(self.mul(u, u))] = 1;
        }
        t
    }
}

/// `#E(F_{ℓ²}) - (ℓ² + 1)` up to sign for `y² = x³ + Ax + B`.
fn trace_over_fp2(f: &Fp2, chi: &[i8], a: (u64, u64), b: (u64, u64)) -> i64 {
    let mut sum = 0i64;
    for xi in 0..f.size() {
        let x = f.unpack(xi);
        let x3 = f.mul(f.mul(x, x), x);
        let rhs = f.add(f.add(x3, f.mul(a, x)), b);
        sum += chi[f.pack(rhs)] as i64;
    }
    -sum
}

fn is_supersingular(f: &Fp2, chi: &[i8], j: (u64, u64)) -> bool {
    let p = f.p;
    let j1728 = f.scalar(1728);
    let (a, b) = if j == (0, 0) {
        ((0, 0), (1, 0))
    } else if j == j1728 {
        ((1, 0), (0, 0))
    } else {
        // y² = x³ + 3kx + 2k has j-invariant 1728 k/(k+1)
        let diff = f.add(j1728, ((p - j.0) % p, (p - j.1) % p));
        let k = f.mul(j, f.inv(diff));
        (f.mul(f.scalar(3), k), f.mul(f.scalar(2), k))
    };
    trace_over_fp2(f, chi, a, b).rem_euclid(p as i64) == 0
}

/// `Π (x - j)` over supersingular `j ∈ F_{ℓ²}`, found by counting points on
/// one curve per j-invariant over F_{ℓ²}. The root set is Galois-stable so
/// the product lies in F_ℓ[x].
pub fn supersingular_poly_bruteforce(ell: u64) -> Result<Poly<ModPrime>> {
    check_prime_at_least_5(ell)?;
    if ell > BRUTE_FORCE_LIMIT {
        return Err(Error::Resource(format!(
            "brute-force enumeration is limited to ell <= {BRUTE_FORCE_LIMIT}"
        )));
    }
    let roots = supersingular_j_invariants(ell);
    let f = Fp2::new(ell);
    let mut poly: Vec<(u64, u64)> = vec![(1, 0)];
    for &j in &roots {
        let neg = ((ell - j.0) % ell, (ell - j.1) % ell);
        let mut next = vec![(0, 0); poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.add(next[i], f.mul(c, neg));
        }
        poly = next;
    }
    if poly.iter().any(|&(_, b)| b != 0) {
        return Err(Error::Internal(format!(
            "supersingular set mod {ell} is not Galois-stable"
        )));
    }
    let proto = ModPrime::zero(ell);
    Ok(Poly::new(
        poly.iter().map(|&(a, _)| ModPrime::new(a, ell)).collect(),
        &proto,
    ))
}

/// Supersingular j-invariants as pairs `(a, b)` meaning `a + b√n` for the
/// least quadratic nonresidue `n`, in packed order.
pub fn supersingular_j_invariants(ell: u64) -> Vec<(u64, u64)> {
    let f = Fp2::new(ell);
    let chi = f.character_table();
    (0..f.size())
        .into_par_iter()
        .map(|x| f.unpack(x))
        .filter(|&j| is_supersingular(&f, &chi, j))
        .collect()
}
