use std::collections::HashMap;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{factorize, is_prime, ModPrime};
use crate::error::{Error, Result};

/// Below this bound traces are computed by summing Legendre symbols.
pub const NAIVE_LIMIT: u64 = 10_000;
/// Points tried by BSGS before falling back to the naive count.
pub const BSGS_MAX_POINTS: usize = 20;

/// `y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllCurve {
    pub a: [i64; 5],
    pub label: String,
}

impl EllCurve {
    pub fn new(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64, label: &str) -> Result<Self> {
        let e = EllCurve {
            a: [a1, a2, a3, a4, a6],
            label: label.to_string(),
        };
        if e.discriminant() == 0 {
            return Err(Error::InvalidInput(format!("{label} is singular")));
        }
        Ok(e)
    }

    pub fn x0_11() -> Self {
        EllCurve::new(0, -1, 1, -10, -20, "X0(11)").expect("nonsingular")
    }

    pub fn x0_17() -> Self {
        EllCurve::new(1, -1, 1, -6, -4, "X0(17)").expect("nonsingular")
    }

    pub fn x0_19() -> Self {
        EllCurve::new(0, 1, 1, -9, -15, "X0(19)").expect("nonsingular")
    }

    /// The built-in curve `X₀(ℓ)` for `ℓ ∈ {11, 17, 19}`.
    pub fn x0(ell: u64) -> Option<Self> {
        match ell {
            11 => Some(Self::x0_11()),
            17 => Some(Self::x0_17()),
            19 => Some(Self::x0_19()),
            _ => None,
        }
    }

    /// `(b₂, b₄, b₆, b₈)`.
    pub fn b_invariants(&self) -> (i128, i128, i128, i128) {
        let [a1, a2, a3, a4, a6] = self.a.map(i128::from);
        let b2 = a1 * a1 + 4 * a2;
        let b4 = 2 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> i128 {
        let (b2, b4, b6, b8) = self.b_invariants();
        -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    }

    /// `(c₄, c₆)`.
    pub fn c_invariants(&self) -> (i128, i128) {
        let (b2, b4, b6, _) = self.b_invariants();
        (b2 * b2 - 24 * b4, -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6)
    }

    fn check_good(&self, p: u64) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if self.discriminant() % p as i128 == 0 {
            return Err(Error::BadReduction(p));
        }
        Ok(())
    }
}

fn red(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

fn mulm(x: u64, y: u64, p: u64) -> u64 {
    ((x as u128 * y as u128) % p as u128) as u64
}

/// `a(p) = p + 1 − #E(F_p)` by counting, `O(p)`.
pub fn ec_trace_naive(e: &EllCurve, p: u64) -> Result<i64> {
    e.check_good(p)?;
    if p < 5 {
        let [a1, a2, a3, a4, a6] = e.a.map(|c| red(c as i128, p));
        let mut n = 1u64;
        for x in 0..p {
            for y in 0..p {
                let lhs = (y * y + a1 * x * y + a3 * y) % p;
                let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p;
                n += u64::from(lhs == rhs);
            }
        }
        return Ok(p as i64 + 1 - n as i64);
    }
    // (2y + a₁x + a₃)² = 4x³ + b₂x² + 2b₄x + b₆.
    let (b2, b4, b6, _) = e.b_invariants();
    let (b2, b4, b6) = (red(b2, p), red(2 * b4, p), red(b6, p));
    let mut is_square = vec![false; p as usize];
    for y in 1..p {
        is_square[mulm(y, y, p) as usize] = true;
    }
    let mut sum = 0i64;
    for x in 0..p {
        let f =
            (mulm(mulm(4 * x % p, x, p), x, p) + mulm(mulm(b2, x, p), x, p) + mulm(b4, x, p) + b6)
                % p;
        if f != 0 {
            sum += if is_square[f as usize] { 1 } else { -1 };
        }
    }
    Ok(-sum)
}

/// Affine point on `y² = x³ + Ax + B`; `None` is the point at infinity.
type Pt = Option<(u64, u64)>;

struct Short {
    a: u64,
    b: u64,
    p: u64,
}

impl Short {
    fn inv(&self, x: u64) -> u64 {
        ModPrime::new(x, self.p)
            .fermat_inv()
            .expect("nonzero")
            .value()
    }

    fn add(&self, s: Pt, t: Pt) -> Pt {
        let p = self.p;
        let ((x1, y1), (x2, y2)) = match (s, t) {
            (None, t) => return t,
            (s, None) => return s,
            (Some(s), Some(t)) => (s, t),
        };
        let lambda = if x1 == x2 {
            if (y1 + y2) % p == 0 {
                return None;
            }
            mulm((3 * mulm(x1, x1, p) + self.a) % p, self.inv(2 * y1 % p), p)
        } else {
            mulm((y2 + p - y1) % p, self.inv((x2 + p - x1) % p), p)
        };
        let x3 = (mulm(lambda, lambda, p) + 2 * p - x1 - x2) % p;
        let y3 = (mulm(lambda, (x1 + p - x3) % p, p) + p - y1) % p;
        Some((x3, y3))
    }

    fn mul(&self, s: Pt, mut k: u64) -> Pt {
        let mut acc = None;
        let mut base = s;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    fn random_point(&self, rng: &mut ChaCha8Rng) -> Pt {
        let p = self.p;
        loop {
            let x = rng.gen_range(0..p);
            let f = (mulm(mulm(x, x, p), x, p) + mulm(self.a, x, p) + self.b) % p;
            if let Some(y) = ModPrime::new(f, p).sqrt() {
                let y = y.value();
                return Some((x, if rng.gen::<bool>() { y } else { (p - y) % p }));
            }
        }
    }

    /// Exact order of `s` given a multiple `k` of it.
    fn order_from_multiple(&self, s: Pt, mut k: u64) -> u64 {
        for (q, _) in factorize(k) {
            while k.is_multiple_of(q) && self.mul(s, k / q).is_none() {
                k /= q;
            }
        }
        k
    }

    /// Some `k ≥ 1` near the Hasse window with `kP = O`.
    fn multiple_in_window(&self, s: Pt, lo: u64, hi: u64) -> Option<u64> {
        let m = ((hi - lo) as f64).sqrt().ceil() as u64 + 1;
        let mut baby: HashMap<u64, (u64, u64)> = HashMap::with_capacity(m as usize + 1);
        let mut jp = s;
        for j in 1..=m {
            if let Some((x, y)) = jp {
                baby.entry(x).or_insert((j, y));
            }
            jp = self.add(jp, s);
        }
        let step = self.mul(s, 2 * m + 1);
        let mut r = self.mul(s, lo);
        let mut base = lo;
        while base <= hi + m {
            match r {
                None => return Some(base),
                Some((x, y)) => {
                    if let Some(&(j, yj)) = baby.get(&x) {
                        // R = ±jP.
                        let k = if y == yj { base - j } else { base + j };
                        if k > 0 {
                            return Some(k);
                        }
                    }
                }
            }
            r = self.add(r, step);
            base += 2 * m + 1;
        }
        None
    }
}

/// `a(p)` from point orders in the Hasse interval, or `None` when
/// [`BSGS_MAX_POINTS`] points leave the group order ambiguous.
pub fn ec_trace_bsgs(e: &EllCurve, p: u64) -> Result<Option<i64>> {
    e.check_good(p)?;
    if p < 5 {
        return Err(Error::InvalidInput("BSGS needs p >= 5".into()));
    }
    let (c4, c6) = e.c_invariants();
    let curve = Short {
        a: red(-27 * c4, p),
        b: red(-54 * c6, p),
        p,
    };
    let w = ((4 * p) as f64).sqrt().floor() as u64;
    let in_hasse = |n: u64| {
        let t = n as i128 - p as i128 - 1;
        t * t <= 4 * p as i128
    };
    let lo = p + 1 - w - 1;
    let hi = p + 1 + w + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut l = 1u64;
    for _ in 0..BSGS_MAX_POINTS {
        let s = curve.random_point(&mut rng);
        let Some(k) = curve.multiple_in_window(s, lo, hi) else {
            continue;
        };
        let ord = curve.order_from_multiple(s, k);
        l = l.lcm(&ord);
        let first = lo.div_ceil(l) * l;
        let candidates: Vec<u64> = (0..)
            .map(|i| first + i * l)
            .take_while(|&n| n <= hi)
            .filter(|&n| in_hasse(n))
            .collect();
        if candidates.len() == 1 {
            return Ok(Some(p as i64 + 1 - candidates[0] as i64));
        }
    }
    Ok(None)
}

/// Exact `a(p)` for a prime of good reduction.
pub fn ec_trace(e: &EllCurve, p: u64) -> Result<i64> {
    if p < NAIVE_LIMIT {
        return ec_trace_naive(e, p);
    }
    match ec_trace_bsgs(e, p)? {
        Some(t) => Ok(t),
        None => ec_trace_naive(e, p),
    }
}
