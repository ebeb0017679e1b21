use serde::{Deserialize, Serialize};

use crate::arith::linalg::solve;
use crate::arith::{divisors, is_prime, moebius, sigma, ModPrime, QuadExt};
use crate::classpoly::{hurwitz_class_number, WeightedClassPoly};
use crate::error::{Error, Result};
use crate::qseries::{eisenstein, QSeries};
use crate::ssforms::{eigenbasis, eisenstein_cusp_split};

use super::exponents::{inverse_mod, log_derivative_mod};
use super::recipe::{parse_recipe, Recipe};
use super::twisted::nu_sequence;

/// `L ≡ c₀E_{ℓ+1} + Σ cᵢFᵢ (mod ℓ)`, checked through `q^{verified_to}`.
#[derive(Clone, Debug)]
pub struct CongruenceFormula {
    pub d: i64,
    pub ell: u64,
    pub c0: ModPrime,
    pub c: Vec<ModPrime>,
    pub basis: Vec<Recipe>,
    /// Expansions of the basis forms through `q^{order}`.
    pub forms: Vec<QSeries<ModPrime>>,
    pub verified_to: i64,
}

/// Default verification order for a basis of size `r`.
pub fn default_verify_order(r: usize) -> i64 {
    200.max(3 * r as i64)
}

/// Splits off the Eisenstein part, matches `q¹…q^r` of the cusp part
/// against `forms`, then checks the whole series through `q^{verify_to}`.
pub fn fit_series(
    l: &QSeries<ModPrime>,
    ell: u64,
    forms: &[QSeries<ModPrime>],
    verify_to: i64,
) -> Result<(ModPrime, Vec<ModPrime>)> {
    let r = forms.len();
    let (c0, cusp) = eisenstein_cusp_split(l, ell + 1)?;
    let a: Vec<Vec<ModPrime>> = (1..=r as i64)
        .map(|n| {
            forms
                .iter()
                .map(|f| f.try_coeff(n))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let b: Vec<ModPrime> = (1..=r as i64)
        .map(|n| cusp.try_coeff(n))
        .collect::<Result<_>>()?;
    let c = if r == 0 { Vec::new() } else { solve(&a, &b)? };
    let proto = ModPrime::zero(ell);
    let model = forms
        .iter()
        .zip(&c)
        .fold(QSeries::zero(0, verify_to, &proto), |acc, (f, ci)| {
            acc.add(&f.scale(ci))
        });
    let e = eisenstein(ell + 1, verify_to, &proto)?.scale(&c0);
    let model = model.add(&e);
    for n in 0..=verify_to {
        if l.try_coeff(n)? != model.try_coeff(n)? {
            return Err(Error::VerificationFailed { index: n as u64 });
        }
    }
    Ok((c0, c))
}

fn check_c0(p: &WeightedClassPoly, ell: u64, c0: ModPrime) -> Result<()> {
    let h = hurwitz_class_number(p.d)?;
    let expected = ModPrime::from_rational(&h, ell).ok_or(Error::NotInvertible)?;
    if expected != c0 {
        return Err(Error::Internal(format!(
            "c0 = {c0} but h(d) = {h} mod {ell}"
        )));
    }
    Ok(())
}

/// Fits against the normalized eigenbasis of `S_{ℓ+1}` mod ℓ.
pub fn fit_congruence(
    p: &WeightedClassPoly,
    ell: u64,
    verify_to: i64,
) -> Result<CongruenceFormula> {
    let basis = eigenbasis(ell, 1)?;
    let verify_to = verify_to.max(default_verify_order(basis.dim()));
    let eig = eigenbasis(ell, verify_to)?;
    let recipes: Vec<Recipe> = eig
        .coords
        .iter()
        .map(|c| Recipe::from_coords(c, &eig.monomials))
        .collect();
    fit_with(p, ell, recipes, eig.forms, verify_to)
}

/// Fits against explicitly given forms of weight `ℓ+1`.
pub fn fit_congruence_with(
    p: &WeightedClassPoly,
    ell: u64,
    recipes: Vec<Recipe>,
    verify_to: i64,
) -> Result<CongruenceFormula> {
    for r in &recipes {
        if r.weight() != Some(ell + 1) || !r.is_cusp() {
            return Err(Error::InvalidInput(format!(
                "{r} is not a cusp form of weight {}",
                ell + 1
            )));
        }
    }
    let verify_to = verify_to.max(default_verify_order(recipes.len()));
    let forms = recipes
        .iter()
        .map(|r| r.series_mod(ell, verify_to))
        .collect();
    fit_with(p, ell, recipes, forms, verify_to)
}

fn fit_with(
    p: &WeightedClassPoly,
    ell: u64,
    recipes: Vec<Recipe>,
    forms: Vec<QSeries<ModPrime>>,
    verify_to: i64,
) -> Result<CongruenceFormula> {
    let l = log_derivative_mod(p, ell, verify_to)?;
    let (c0, c) = fit_series(&l, ell, &forms, verify_to)?;
    check_c0(p, ell, c0)?;
    Ok(CongruenceFormula {
        d: p.d,
        ell,
        c0,
        c,
        basis: recipes,
        forms,
        verified_to: verify_to,
    })
}

impl CongruenceFormula {
    pub fn r(&self) -> usize {
        self.c.len()
    }

    /// `g(m) = -24c₀σ₁(m) + Σ cᵢ aᵢ(m)`, the `q^m` coefficient of the model.
    pub fn g(&self, m: u64) -> Result<ModPrime> {
        let ell = self.ell;
        let mut v =
            ModPrime::from_i64(-24, ell) * self.c0 * ModPrime::from_bigint(&sigma(1, m), ell);
        for (f, ci) in self.forms.iter().zip(&self.c) {
            v = v + *ci * f.try_coeff(m as i64)?;
        }
        Ok(v)
    }

    /// `(1/n) Σ_{m|n} μ(n/m) g(m)` mod ℓ, for `ℓ ∤ n`.
    pub fn eval(&self, n: u64) -> Result<ModPrime> {
        let inv = inverse_mod(n, self.ell)?;
        let mut s = ModPrime::zero(self.ell);
        for m in divisors(n) {
            let mu = moebius(n / m);
            if mu != 0 {
                s = s + ModPrime::from_i64(mu as i64, self.ell) * self.g(m)?;
            }
        }
        Ok(s * inv)
    }

    /// `-24c₀ + p^{-1} Σ cᵢ(aᵢ(p) − 1)` from the traces `aᵢ(p)`.
    pub fn eval_prime(&self, p: u64, traces: &[ModPrime]) -> Result<ModPrime> {
        if traces.len() != self.r() {
            return Err(Error::InvalidInput(format!(
                "expected {} traces, got {}",
                self.r(),
                traces.len()
            )));
        }
        let ell = self.ell;
        let inv = inverse_mod(p, ell)?;
        let mut s = ModPrime::zero(ell);
        for (ci, ai) in self.c.iter().zip(traces) {
            s = s + *ci * (*ai - ModPrime::one(ell));
        }
        Ok(ModPrime::from_i64(-24, ell) * self.c0 + inv * s)
    }

    /// `(1/n) Σ_{m|n} ν(n/m) g(m)` in F_ℓ[√D], with ν the Dirichlet
    /// inverse of the twisted Gauss sums.
    pub fn eval_twisted(&self, big_d: u64, n: u64) -> Result<QuadExt<ModPrime>> {
        let ell = self.ell;
        let inv = inverse_mod(n, ell)?;
        let nu = nu_sequence(big_d, n as usize)?;
        let mut s = QuadExt::from_base(ModPrime::zero(ell), big_d);
        for m in divisors(n) {
            let v = nu[(n / m) as usize - 1]
                .reduce_mod(ell)
                .ok_or(Error::NotInvertible)?;
            s = s + v.scale(&self.g(m)?);
        }
        Ok(s.scale(&inv))
    }

    pub fn to_doc(&self) -> CongruenceDoc {
        CongruenceDoc {
            d: self.d,
            ell: self.ell,
            big_d: 1,
            c0: self.c0.value(),
            c: self.c.iter().map(|x| x.value()).collect(),
            basis: self.basis.iter().map(|r| r.to_string()).collect(),
            verified_to: self.verified_to,
        }
    }
}

/// Serialized congruence formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CongruenceDoc {
    pub d: i64,
    pub ell: u64,
    #[serde(rename = "D")]
    pub big_d: u64,
    pub c0: u64,
    pub c: Vec<u64>,
    pub basis: Vec<String>,
    pub verified_to: i64,
}

impl CongruenceDoc {
    /// Rebuilds the formula, validating ranges and recipes.
    pub fn into_formula(self) -> Result<CongruenceFormula> {
        let ell = self.ell;
        if !(5..1000).contains(&ell) || !is_prime(ell) {
            return Err(Error::Parse(format!(
                "ell = {ell} is not a prime in [5, 1000)"
            )));
        }
        if self.d <= 0 || self.big_d == 0 {
            return Err(Error::Parse("d and D must be positive".into()));
        }
        if self.c0 >= ell || self.c.iter().any(|&x| x >= ell) {
            return Err(Error::Parse("coefficients must lie in [0, ell)".into()));
        }
        if self.c.len() != self.basis.len() {
            return Err(Error::Parse("c and basis differ in length".into()));
        }
        if !(0..=10_000).contains(&self.verified_to) {
            return Err(Error::Parse("verified_to out of range".into()));
        }
        let recipes = self
            .basis
            .iter()
            .map(|s| parse_recipe(s))
            .collect::<Result<Vec<_>>>()?;
        for r in &recipes {
            if r.weight() != Some(ell + 1) || !r.is_cusp() {
                return Err(Error::Parse(format!(
                    "{r} is not a cusp form of weight {}",
                    ell + 1
                )));
            }
        }
        let order = self.verified_to.max(1);
        let forms = recipes.iter().map(|r| r.series_mod(ell, order)).collect();
        Ok(CongruenceFormula {
            d: self.d,
            ell,
            c0: ModPrime::new(self.c0, ell),
            c: self.c.iter().map(|&x| ModPrime::new(x, ell)).collect(),
            basis: recipes,
            forms,
            verified_to: self.verified_to,
        })
    }
}

pub fn parse_congruence_doc(text: &str) -> Result<CongruenceFormula> {
    let doc: CongruenceDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_formula()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classpoly::hilbert_class_poly;

    #[test]
    fn eleven_and_four() {
        let p = hilbert_class_poly(4).unwrap();
        let f = fit_congruence(&p, 11, 200).unwrap();
        assert_eq!(f.c0.value(), 6);
        assert_eq!(f.c.iter().map(|x| x.value()).collect::<Vec<_>>(), vec![9]);
        assert_eq!(f.basis[0].to_string(), "1*D^1");
        assert_eq!(f.eval(1).unwrap().value(), 8);
        assert_eq!(f.eval(2).unwrap().value(), 2);
        assert!(matches!(f.eval(11), Err(Error::EllDividesN { .. })));
    }

    #[test]
    fn trivial_space() {
        let p = hilbert_class_poly(3).unwrap();
        let f = fit_congruence(&p, 5, 50).unwrap();
        assert_eq!(f.c0.value(), 2);
        assert!(f.c.is_empty());
        let p7 = hilbert_class_poly(7).unwrap();
        let f7 = fit_congruence(&p7, 13, 50).unwrap();
        assert_eq!(f7.eval(1).unwrap().value(), 2);
    }

    #[test]
    fn prime_closed_form_matches_divisor_sum() {
        let p = hilbert_class_poly(4).unwrap();
        let f = fit_congruence(&p, 11, 200).unwrap();
        for q in [2u64, 3, 5, 7, 13, 197] {
            let a = f.forms[0].coeff(q as i64);
            assert_eq!(f.eval_prime(q, &[a]).unwrap(), f.eval(q).unwrap());
        }
    }

    #[test]
    fn document_round_trip() {
        let p = hilbert_class_poly(4).unwrap();
        let f = fit_congruence(&p, 11, 200).unwrap();
        let text = serde_json::to_string(&f.to_doc()).unwrap();
        let g = parse_congruence_doc(&text).unwrap();
        assert_eq!(g.to_doc(), f.to_doc());
        for n in [1u64, 2, 3, 10] {
            assert_eq!(g.eval(n).unwrap(), f.eval(n).unwrap());
        }
        assert!(parse_congruence_doc("{}").is_err());
        let mut bad = f.to_doc();
        bad.c = vec![11];
        assert!(bad.into_formula().is_err());
    }
}
