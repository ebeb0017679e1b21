use serde::Serialize;

use crate::arith::{is_fundamental_discriminant, is_squarefree, kronecker, ModPrime};
use crate::error::{Error, Result};
use crate::qseries::Poly;
use crate::ssforms::supersingular_poly;

use super::forms::check_discriminant;
use super::hilbert::{hilbert_class_poly, WeightedClassPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eligibility {
    pub d: i64,
    pub ell: u64,
    /// The radical of the class polynomial divides `s_ℓ` mod ℓ.
    pub divides: bool,
    /// The radical is squarefree mod ℓ.
    pub squarefree: bool,
}

impl Eligibility {
    pub fn eligible(&self) -> bool {
        self.divides && self.squarefree
    }
}

/// Radical of the class polynomial reduced mod ℓ.
pub fn radical_mod(p: &WeightedClassPoly, ell: u64) -> Poly<ModPrime> {
    p.radical().reduce_mod(ell)
}

pub fn eligibility_of(p: &WeightedClassPoly, ell: u64) -> Result<Eligibility> {
    let s = supersingular_poly(ell)?;
    let h = radical_mod(p, ell);
    Ok(Eligibility {
        d: p.d,
        ell,
        divides: h.divides(&s)?,
        squarefree: h.is_squarefree(),
    })
}

pub fn eligibility(d: i64, ell: u64) -> Result<Eligibility> {
    eligibility_of(&hilbert_class_poly(d)?, ell)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryConditions {
    /// `(−Dd/ℓ) = −1`.
    pub inert: bool,
    /// `(ℓ/Dd) = 1`.
    pub kron: bool,
    /// `ℓ > Dd`.
    pub range: bool,
}

impl CorollaryConditions {
    pub fn all(&self) -> bool {
        self.inert && self.kron && self.range
    }
}

/// `D ≥ 1` with `D = 1` or `D` fundamental; `-d` and `-Dd` fundamental.
pub fn corollary_conditions(big_d: u64, d: i64, ell: u64) -> Result<CorollaryConditions> {
    if big_d == 0 || (big_d > 1 && !is_fundamental_discriminant(big_d as i64)) {
        return Err(Error::NotFundamental(big_d as i64));
    }
    if !is_fundamental_discriminant(-d) {
        return Err(Error::NotFundamental(-d));
    }
    let dd = big_d as i64 * d;
    if !is_fundamental_discriminant(-dd) {
        return Err(Error::NotFundamental(-dd));
    }
    Ok(CorollaryConditions {
        inert: kronecker(-dd, ell as i64) == -1,
        kron: kronecker(ell as i64, dd) == 1,
        range: ell as i64 > dd,
    })
}

/// Discriminants considered by the table scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CandidateSet {
    /// `d` or `d/4` squarefree.
    Conductor,
    /// Every `d ≡ 0, 3 (mod 4)`.
    All,
}

impl CandidateSet {
    pub fn contains(&self, d: i64) -> bool {
        if check_discriminant(d).is_err() {
            return false;
        }
        match self {
            CandidateSet::All => true,
            CandidateSet::Conductor => {
                is_squarefree(d as u64) || (d % 4 == 0 && is_squarefree(d as u64 / 4))
            }
        }
    }
}

/// Evidence for one flagged or disputed discriminant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub d: i64,
    pub ell: u64,
    /// Radical of the class polynomial mod ℓ, ascending coefficients.
    pub class_poly_mod: Vec<u64>,
    /// `s_ℓ`, ascending coefficients.
    pub supersingular: Vec<u64>,
    pub divides: bool,
    pub squarefree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub ell: u64,
    pub max_d: i64,
    pub candidates: CandidateSet,
    pub flagged: Vec<i64>,
    pub certificates: Vec<Certificate>,
}

fn values(p: &Poly<ModPrime>) -> Vec<u64> {
    p.coeffs().iter().map(|c| c.value()).collect()
}

pub fn certificate(p: &WeightedClassPoly, ell: u64) -> Result<Certificate> {
    let s = supersingular_poly(ell)?;
    let h = radical_mod(p, ell);
    Ok(Certificate {
        d: p.d,
        ell,
        divides: h.divides(&s)?,
        squarefree: h.is_squarefree(),
        class_poly_mod: values(&h),
        supersingular: values(&s),
    })
}

/// Scans `d ≤ max_d` for eligible discriminants, calling `class_poly` for
/// each candidate. Certificates are attached for every flagged `d`.
pub fn table_row(
    ell: u64,
    max_d: i64,
    candidates: CandidateSet,
    mut class_poly: impl FnMut(i64) -> Result<WeightedClassPoly>,
) -> Result<TableRow> {
    let mut flagged = Vec::new();
    let mut certificates = Vec::new();
    for d in (3..=max_d).filter(|&d| candidates.contains(d)) {
        let p = class_poly(d)?;
        let cert = certificate(&p, ell)?;
        if cert.divides && cert.squarefree {
            flagged.push(d);
            certificates.push(cert);
        }
    }
    Ok(TableRow {
        ell,
        max_d,
        candidates,
        flagged,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let e = eligibility(4, 11).unwrap();
        assert!(e.divides && e.squarefree);
        assert!(eligibility(3, 5).unwrap().divides);
        assert!(!eligibility(7, 11).unwrap().divides);
    }

    #[test]
    fn corollary_flags() {
        assert!(corollary_conditions(1, 3, 5).unwrap().inert);
        assert!(!corollary_conditions(1, 4, 13).unwrap().inert);
        assert!(corollary_conditions(1, 12, 13).is_err());
        assert!(corollary_conditions(9, 3, 13).is_err());
        assert!(corollary_conditions(5, 4, 41).is_ok());
    }

    #[test]
    fn candidate_sets() {
        let c = CandidateSet::Conductor;
        assert!(c.contains(3) && c.contains(12) && c.contains(148));
        assert!(!c.contains(16) && !c.contains(27) && !c.contains(5));
        assert!(CandidateSet::All.contains(16));
    }
}
