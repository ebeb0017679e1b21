use borcherds_core::arith::{is_prime, ModPrime};
use borcherds_core::qseries::delta;
use borcherds_core::ssforms::{
    eigenbasis, eisenstein_cusp_split, supersingular_poly, supersingular_poly_bruteforce,
    weight_decomposition,
};
use num_bigint::BigInt;
use num_traits::Zero;

#[test]
fn kaneko_matches_point_counting() {
    for ell in (5u64..=50).filter(|&p| is_prime(p)) {
        assert_eq!(
            supersingular_poly(ell).unwrap(),
            supersingular_poly_bruteforce(ell).unwrap(),
            "ell = {ell}"
        );
    }
}

#[test]
fn degree_is_mass_count() {
    for ell in (5u64..=100).filter(|&p| is_prime(p)) {
        let w = weight_decomposition(ell - 1).unwrap();
        let s = supersingular_poly(ell).unwrap();
        assert_eq!(
            s.degree(),
            Some(w.supersingular_count() as usize),
            "ell = {ell}"
        );
        assert!(s.is_monic());
    }
}

#[test]
fn eigenforms_are_hecke_eigen() {
    for ell in [11u64, 17, 19, 31] {
        let b = eigenbasis(ell, 350).unwrap();
        for f in &b.forms {
            assert_eq!(f.coeff(1), ModPrime::one(ell));
        }
        for p in [2u64, 3, 5, 7] {
            assert!(b.check_eigen(p, 50).unwrap(), "ell = {ell}, p = {p}");
        }
    }
}

#[test]
fn non_split_hecke_field_is_rejected() {
    // T₂ on S₂₄ has an irreducible quadratic characteristic polynomial mod 23
    assert!(matches!(
        eigenbasis(23, 20),
        Err(borcherds_core::Error::EigenbasisNotSplit { ell: 23, .. })
    ));
}

#[test]
fn eleven_eigenform_is_tau() {
    let b = eigenbasis(11, 100).unwrap();
    let tau = delta(100, &BigInt::zero()).reduce_mod(11);
    for p in (2..=100i64).filter(|&p| is_prime(p as u64)) {
        assert_eq!(b.forms[0].coeff(p), tau.coeff(p), "p = {p}");
    }
}

#[test]
fn split_is_idempotent() {
    for ell in [11u64, 17, 31] {
        let b = eigenbasis(ell, 40).unwrap();
        let proto = ModPrime::zero(ell);
        let e = borcherds_core::qseries::eisenstein(ell + 1, 40, &proto).unwrap();
        let c0 = ModPrime::new(5, ell);
        let cusp = b.forms.iter().fold(
            borcherds_core::qseries::QSeries::zero(1, 40, &proto),
            |acc, f| acc.add(&f.scale(&ModPrime::new(3, ell))),
        );
        let (c, rest) = eisenstein_cusp_split(&e.scale(&c0).add(&cusp), ell + 1).unwrap();
        assert_eq!(c, c0);
        assert_eq!(rest, cusp);
    }
}
