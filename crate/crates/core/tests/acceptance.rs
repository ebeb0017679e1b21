//! One line per acceptance criterion, each at its pinned tolerance.
//!
//! Two criteria restate printed values that independent computation
//! contradicts; they report FAIL with the computed evidence. The test
//! itself fails if the set of failing criteria changes in either direction.

use std::io::Write;
use std::time::Instant;

use borcherds_core::arith::{is_prime, ModPrime, Rational};
use borcherds_core::borcherds::{
    exact_exponents, exact_exponents_of, fit_congruence, fit_congruence_with, parse_recipe, reduce,
    twisted_roundtrip,
};
use borcherds_core::classpoly::{hilbert_class_poly, table_row, CandidateSet};
use borcherds_core::density::{
    asymptotic_table, case_tallies, charpoly_count, charpoly_count_bruteforce, ec_trace,
    ec_trace_bsgs, ec_trace_naive, empirical_table, expected_case_tallies, EllCurve,
};
use borcherds_core::qseries::{eisenstein, euler_product, QSeries};
use borcherds_core::ssforms::{eigenbasis, supersingular_poly, supersingular_poly_bruteforce};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria whose printed values disagree with independent computation.
const KNOWN_DISCREPANCIES: [u32; 2] = [1, 7];

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

/// Exponents `B(n)` with `F = Π(1 − q^n)^{B(n)}`, `F(0) = 1`.
fn product_exponents(f: &QSeries<Rational>, n_max: i64) -> Vec<Rational> {
    let l = f.log_derivative().unwrap();
    let mut b: Vec<Rational> = Vec::new();
    for n in 1..=n_max {
        let mut s = -l.coeff(n);
        for d in (1..n).filter(|d| n % d == 0) {
            s -= Rational::from_integer(d.into()) * b[d as usize - 1].clone();
        }
        b.push(s / Rational::from_integer(n.into()));
    }
    b
}

fn c1_coefficients() -> Verdict {
    let printed: [(i64, usize, i64); 8] = [
        (3, 1, -248),
        (3, 2, 26572),
        (3, 3, -4096248),
        (4, 1, 492),
        (4, 2, 143376),
        (4, 3, 51180012),
        (7, 1, -4119),
        (7, 2, 8288256),
    ];
    let mut bad = Vec::new();
    for (d, n, want) in printed {
        let t = exact_exponents(d, 3).unwrap();
        let got = t.get(n).unwrap();
        if *got != BigInt::from(want) {
            bad.push(format!("A({}, {d}) = {got}, printed {want}", n * n));
        }
    }
    // j^{1/3} = E4/η^8 gives the d = 3 exponents independently.
    let proto = Rational::from_integer(0.into());
    let f = eisenstein(4, 10, &proto)
        .unwrap()
        .div(&euler_product(10, &proto).pow(8))
        .unwrap();
    let oracle = product_exponents(&f, 3);
    let d3 = exact_exponents(3, 3).unwrap();
    assert!(
        (1..=3).all(|n| Rational::from_integer(d3.get(n).unwrap().clone()) == oracle[n - 1]),
        "eta-quotient oracle disagrees with the class-polynomial extraction"
    );
    if bad.is_empty() {
        verdict(true, "all 8 printed values reproduced")
    } else {
        verdict(
            false,
            format!(
                "{}; E4/eta^8 oracle gives A(4, 3) = {}",
                bad.join("; "),
                oracle[1]
            ),
        )
    }
}

fn values(v: &[ModPrime]) -> Vec<u64> {
    v.iter().map(|x| x.value()).collect()
}

fn c2_constants() -> Verdict {
    let f = fit_congruence(&hilbert_class_poly(4).unwrap(), 11, 200).unwrap();
    let ok11 = f.c0.value() == 6 && values(&f.c) == [9];
    let p = hilbert_class_poly(20).unwrap();
    let stated = vec![
        parse_recipe("1*D^1E4^2E6^2 + 22*D^2E4^2").unwrap(),
        parse_recipe("1*D^1E4^2E6^2 + 19*D^2E4^2").unwrap(),
    ];
    let g = fit_congruence_with(&p, 31, stated, 200).unwrap();
    let ok31 = g.c0.value() == 2 && values(&g.c) == [14, 9];
    let e = fit_congruence(&p, 31, 200).unwrap();
    verdict(
        ok11 && ok31,
        format!(
            "(4,11): c0={} c={:?}; (20,31) vs stated F1,F2: c0={} c={:?}; vs Hecke eigenbasis [{}]: c={:?}",
            f.c0,
            values(&f.c),
            g.c0,
            values(&g.c),
            e.basis.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "),
            values(&e.c)
        ),
    )
}

fn c3_end_to_end() -> Verdict {
    let p = hilbert_class_poly(4).unwrap();
    let exact = exact_exponents_of(&p, 300).unwrap();
    let f = fit_congruence(&p, 11, 300).unwrap();
    let mut checked = 0;
    for n in (1..=300u64).filter(|n| n % 11 != 0) {
        if reduce(exact.get(n as usize).unwrap(), 11) != f.eval(n).unwrap() {
            return verdict(false, format!("mismatch at n = {n}"));
        }
        checked += 1;
    }
    verdict(true, format!("{checked} indices n <= 300 agree"))
}

fn c4_trivial() -> Verdict {
    for (ell, d) in [(5u64, 3i64), (7, 4), (13, 7)] {
        let exact = exact_exponents(d, 200).unwrap();
        for n in (1..=200u64).filter(|n| n % ell != 0) {
            let a = reduce(exact.get(n as usize).unwrap(), ell);
            if a.value() != 2 {
                return verdict(false, format!("A({n}^2, {d}) = {a} mod {ell}"));
            }
        }
    }
    verdict(
        true,
        "A(n^2, d) = 2 mod ell for (5,3), (7,4), (13,7), n <= 200",
    )
}

fn c5_supersingular() -> Verdict {
    let primes: Vec<u64> = (5..=50).filter(|&p| is_prime(p)).collect();
    for &ell in &primes {
        if supersingular_poly(ell).unwrap() != supersingular_poly_bruteforce(ell).unwrap() {
            return verdict(false, format!("ell = {ell}"));
        }
    }
    verdict(
        true,
        format!(
            "{} primes agree with point counting over F_ell^2",
            primes.len()
        ),
    )
}

fn c6_lemma() -> Verdict {
    for ell in [3u64, 5, 7, 11] {
        for a in 0..ell {
            for b in 1..ell {
                if charpoly_count(ell, a, b).unwrap().0
                    != charpoly_count_bruteforce(ell, a, b).unwrap()
                {
                    return verdict(false, format!("ell={ell} a={a} b={b}"));
                }
            }
        }
    }
    for ell in (3u64..=31).filter(|&p| is_prime(p)) {
        for (a, t) in case_tallies(ell).unwrap().into_iter().enumerate() {
            if t != expected_case_tallies(ell, a as u64) {
                return verdict(false, format!("tallies ell={ell} a={a}: {t:?}"));
            }
        }
    }
    verdict(
        true,
        "GL2 enumeration for ell in {3,5,7,11}; case tallies for ell <= 31",
    )
}

fn c7_asymptotic() -> Verdict {
    let f = fit_congruence(&hilbert_class_poly(4).unwrap(), 11, 200).unwrap();
    let t = asymptotic_table(&f).unwrap();
    let ok11 = (0..11).all(|k| {
        let want = match k {
            8 => q(119, 1200),
            10 => q(109, 1200),
            _ => q(9, 100),
        };
        t.exact(k) == Some(&want)
    });
    let mut printed = vec![q(0, 1); 31];
    let cases: [(Rational, &[u64]); 7] = [
        (q(991, 29760), &[0]),
        (q(1199, 37200), &[1, 2, 9, 14, 21, 29]),
        (q(29, 900), &[3, 4, 5, 11, 16, 19, 20, 23, 28]),
        (q(719, 22320), &[6, 7, 10, 18, 25, 30]),
        (q(14399, 446400), &[8]),
        (q(799, 24800), &[12, 13, 15, 17]),
        (q(7193, 223200), &[22, 24, 26, 27]),
    ];
    for (v, ts) in &cases {
        for &k in *ts {
            printed[k as usize] = v.clone();
        }
    }
    let p = hilbert_class_poly(20).unwrap();
    let stated = vec![
        parse_recipe("1*D^1E4^2E6^2 + 22*D^2E4^2").unwrap(),
        parse_recipe("1*D^1E4^2E6^2 + 19*D^2E4^2").unwrap(),
    ];
    let g = fit_congruence_with(&p, 31, stated, 200).unwrap();
    let e = fit_congruence(&p, 31, 200).unwrap();
    let render = |t: &borcherds_core::density::DensityTable| {
        t.classes()
            .iter()
            .map(|(v, ts)| format!("{v} at {ts:?}"))
            .collect::<Vec<_>>()
            .join("; ")
    };
    let tg = asymptotic_table(&g).unwrap();
    let te = asymptotic_table(&e).unwrap();
    let ok31 = (0..31).all(|k| tg.exact(k) == Some(&printed[k as usize]));
    let one = Some(q(1, 1));
    assert!(tg.exact_sum() == one && te.exact_sum() == one);
    verdict(
        ok11 && ok31,
        format!(
            "(4,11) {}; (20,31) {}: computed with c=(14,9): {}; with eigenbasis c=(1,22): {}",
            if ok11 { "matches" } else { "differs" },
            if ok31 {
                "matches"
            } else {
                "differs from the printed list"
            },
            render(&tg),
            render(&te)
        ),
    )
}

fn c8_empirical() -> Verdict {
    let rows: [(u64, f64, [f64; 11]); 2] = [
        (
            10_000,
            0.0015,
            [
                0.0829, 0.0928, 0.0887, 0.0911, 0.0862, 0.0903, 0.0846, 0.0960, 0.1009, 0.1066,
                0.0797,
            ],
        ),
        (
            1_000_000,
            0.0005,
            [
                0.0899, 0.0897, 0.0891, 0.0915, 0.0887, 0.0894, 0.0893, 0.0913, 0.0976, 0.0920,
                0.0914,
            ],
        ),
    ];
    let f = fit_congruence(&hilbert_class_poly(4).unwrap(), 11, 200).unwrap();
    let mut details = Vec::new();
    let mut pass = true;
    for (x, tol, printed) in rows {
        let t = empirical_table(&f, x).unwrap();
        let dev = t
            .ratios()
            .iter()
            .zip(printed)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        pass &= dev <= tol;
        details.push(format!("X={x}: max deviation {dev:.4} (tolerance {tol})"));
    }
    verdict(pass, details.join("; "))
}

fn c9_table2() -> Verdict {
    let rows: [(u64, &[i64]); 3] = [
        (11, &[3, 4, 11, 12, 15, 20, 67, 115, 148, 163, 267]),
        (17, &[3, 7, 11, 12, 24, 28, 88, 91, 163, 267, 403]),
        (19, &[4, 7, 11, 19, 20, 28, 35, 43, 163, 187, 235, 427]),
    ];
    for (ell, want) in rows {
        let max = *want.last().unwrap();
        let row = table_row(ell, max, CandidateSet::Conductor, hilbert_class_poly).unwrap();
        if row.flagged != want {
            let extra: Vec<_> = row
                .certificates
                .iter()
                .filter(|c| !want.contains(&c.d))
                .collect();
            return verdict(
                false,
                format!(
                    "ell={ell}: flagged {:?}; certificates {extra:?}",
                    row.flagged
                ),
            );
        }
    }
    verdict(true, "rows 11, 17, 19 reproduced exactly")
}

fn c10_properties() -> Verdict {
    let mut parts = Vec::new();
    for ell in (5u64..=31).filter(|&p| is_prime(p)) {
        let proto = ModPrime::zero(ell);
        let low = eisenstein(ell - 1, 500, &proto).unwrap();
        let high = eisenstein(ell + 1, 500, &proto).unwrap();
        let e2 = eisenstein(2, 500, &proto).unwrap();
        if !low.agrees_with(&QSeries::one(500, &proto)) || high.first_mismatch(&e2).is_some() {
            return verdict(false, format!("Eisenstein congruence fails mod {ell}"));
        }
    }
    parts.push("E_{l-1}=1, E_{l+1}=E_2 to q^500");

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for big_d in [5u64, 8, 13] {
        for _ in 0..50 {
            let a: Vec<BigInt> = (0..64)
                .map(|_| BigInt::from(rng.gen_range(-100i64..=100)))
                .collect();
            if twisted_roundtrip(big_d, &a).unwrap()
                != a.iter().cloned().map(Some).collect::<Vec<_>>()
            {
                return verdict(false, format!("nu round trip fails for D = {big_d}"));
            }
        }
    }
    parts.push("150 nu round trips");

    for ell in [11u64, 17, 19] {
        let b = eigenbasis(ell, 1000).unwrap();
        let e = EllCurve::x0(ell).unwrap();
        for p in (2..1000u64).filter(|&p| is_prime(p) && p != ell) {
            let t = ec_trace(&e, p).unwrap();
            if t * t > 4 * p as i64 {
                return verdict(false, format!("Hasse bound fails for {} at {p}", e.label));
            }
            if b.forms[0].coeff(p as i64) != ModPrime::from_i64(t, ell) {
                return verdict(false, format!("eigenform vs {} at p = {p}", e.label));
            }
        }
    }
    parts.push("eigenform = curve traces mod ell, p < 1000");

    let mut checked = 0;
    let mut fallback = 0;
    for e in [EllCurve::x0_11(), EllCurve::x0_17(), EllCurve::x0_19()] {
        let mut n = 0;
        while n < 100 {
            let p = rng.gen_range(10_000u64..30_000);
            if !is_prime(p) {
                continue;
            }
            let naive = ec_trace_naive(&e, p).unwrap();
            match ec_trace_bsgs(&e, p).unwrap() {
                Some(t) if t != naive => {
                    return verdict(false, format!("BSGS vs naive, {} p = {p}", e.label))
                }
                Some(_) => checked += 1,
                None => fallback += 1,
            }
            n += 1;
        }
        let mut n = 0;
        while n < 100 {
            let p = rng.gen_range(30_000u64..1_000_000);
            if !is_prime(p) {
                continue;
            }
            let t = ec_trace(&e, p).unwrap();
            if t * t > 4 * p as i64 {
                return verdict(false, format!("Hasse bound fails for {} at {p}", e.label));
            }
            n += 1;
        }
    }
    let band = format!(
        "BSGS = naive on {checked} primes in (1e4, 3e4) ({fallback} fallbacks); Hasse bound holds"
    );
    verdict(true, format!("{}; {band}", parts.join("; ")))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Verdict); 10] = [
        (1, "exponent coefficients", c1_coefficients),
        (2, "congruence constants", c2_constants),
        (3, "end-to-end congruence (4, 11)", c3_end_to_end),
        (4, "trivial congruences", c4_trivial),
        (5, "supersingular polynomials", c5_supersingular),
        (6, "GL2 charpoly densities", c6_lemma),
        (7, "asymptotic density tables", c7_asymptotic),
        (8, "empirical density table", c8_empirical),
        (9, "small-discriminant table", c9_table2),
        (10, "property suites", c10_properties),
    ];
    // Bypasses the harness capture so the report shows without --nocapture.
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut failing = Vec::new();
    for (id, name, f) in criteria {
        let start = Instant::now();
        let v = f();
        let status = if v.pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "[{status}] {id:>2} {name} ({:.1}s): {}",
            start.elapsed().as_secs_f64(),
            v.detail
        )
        .unwrap();
        if !v.pass {
            failing.push(id);
        }
    }
    assert_eq!(
        failing, KNOWN_DISCREPANCIES,
        "the set of failing criteria changed"
    );
}
