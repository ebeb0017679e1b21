use borcherds_core::arith::{is_prime, ModPrime};
use borcherds_core::qseries::{as_j_polynomial, delta, eisenstein, jfunction, Poly, QSeries};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn z() -> BigInt {
    BigInt::zero()
}

#[test]
fn eisenstein_congruences_mod_ell() {
    for ell in (5u64..=31).filter(|&p| is_prime(p)) {
        let proto = ModPrime::zero(ell);
        let low = eisenstein(ell - 1, 500, &proto).unwrap();
        assert!(
            low.agrees_with(&QSeries::one(500, &proto)),
            "E_{} mod {ell}",
            ell - 1
        );
        let high = eisenstein(ell + 1, 500, &proto).unwrap();
        let e2 = eisenstein(2, 500, &proto).unwrap();
        assert_eq!(
            high.first_mismatch(&e2),
            None,
            "E_{} vs E_2 mod {ell}",
            ell + 1
        );
    }
}

#[test]
fn delta_matches_eisenstein_identity() {
    let n = 300;
    let e4 = eisenstein(4, n, &z()).unwrap();
    let e6 = eisenstein(6, n, &z()).unwrap();
    let diff = e4.pow(3).sub(&e6.pow(2));
    let d = delta(n, &z());
    for e in 0..=n {
        let lhs = diff.coeff(e);
        assert_eq!(lhs.clone() % 1728, z());
        assert_eq!(lhs / 1728, d.coeff(e), "q^{e}");
    }
}

#[test]
fn j_times_delta_is_e4_cubed() {
    let n = 300;
    let j = jfunction(n - 1, &z());
    let d = delta(n + 1, &z());
    let e4 = eisenstein(4, n, &z()).unwrap();
    let prod = j.mul(&d);
    assert!(prod.order() >= n);
    assert_eq!(prod.truncate(n).first_mismatch(&e4.pow(3)), None);
}

#[test]
fn powers_of_j_are_monomials() {
    let j = jfunction(8, &z());
    for k in 0..=5u32 {
        let p = as_j_polynomial(&j.pow(k)).unwrap();
        assert_eq!(p, Poly::x(&z()).pow(k), "j^{k}");
    }
}

fn schoolbook(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= n {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn sparse_vec(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -100i64..100], n)
}

proptest! {
    #[test]
    fn product_matches_convolution(a in sparse_vec(30), b in sparse_vec(30)) {
        let n = 29;
        let sa = QSeries::from_coeffs(0, a.iter().map(|&x| BigInt::from(x)).collect(), &z());
        let sb = QSeries::from_coeffs(0, b.iter().map(|&x| BigInt::from(x)).collect(), &z());
        let prod = sa.mul(&sb);
        let oracle = schoolbook(&a, &b, n);
        for e in 0..=n as i64 {
            prop_assert_eq!(prod.coeff(e), BigInt::from(oracle[e as usize]));
        }
    }
}
