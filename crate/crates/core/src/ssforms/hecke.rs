use num_bigint::BigInt;
use num_traits::Pow;

use crate::arith::linalg::nullspace;
use crate::arith::{is_prime, Coeff, ModPrime};
use crate::error::{Error, Result};
use crate::qseries::{cusp_monomial_basis, eisenstein, Monomial, QSeries};

use super::kaneko::check_prime_at_least_5;

/// `T_p f` through `q^n` in weight `k`: `a(n) ↦ a(pn) + p^{k-1} a(n/p)`.
///
/// `f` must be holomorphic at the cusp and known through `q^{pn}`.
pub fn hecke_tp<R: Coeff>(f: &QSeries<R>, p: u64, k: u64, n: i64) -> Result<QSeries<R>> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if f.lead() < 0 && f.valuation().is_some_and(|v| v < 0) {
        return Err(Error::InvalidInput(
            "T_p needs a series holomorphic at the cusp".into(),
        ));
    }
    let pi = p as i64;
    let needed = pi * n;
    if f.order() < needed {
        return Err(Error::Truncation {
            needed,
            available: f.order(),
        });
    }
    let proto = f.proto();
    let pk = proto.from_bigint_like(&BigInt::from(p).pow(k as u32 - 1));
    Ok(QSeries::from_fn(0, n, proto, |e| {
        let mut c = f.coeff(pi * e);
        if e % pi == 0 {
            c = c.add_ref(&pk.mul_ref(&f.coeff(e / pi)));
        }
        c
    }))
}

/// Normalized Hecke eigenforms spanning `S_{ℓ+1}` mod ℓ.
#[derive(Clone, Debug)]
pub struct EigenformBasis {
    pub ell: u64,
    pub order: i64,
    /// The echelon monomial basis the coordinates refer to.
    pub monomials: Vec<Monomial>,
    /// Coordinates of each eigenform in `monomials`; the first is 1.
    pub coords: Vec<Vec<ModPrime>>,
    pub forms: Vec<QSeries<ModPrime>>,
    /// `a_i(2)`.
    pub t2_eigenvalues: Vec<ModPrime>,
}

impl EigenformBasis {
    pub fn dim(&self) -> usize {
        self.forms.len()
    }

    pub fn weight(&self) -> u64 {
        self.ell + 1
    }

    /// `a_i(n)`.
    pub fn coefficient(&self, i: usize, n: i64) -> Result<ModPrime> {
        self.forms[i].try_coeff(n)
    }

    /// Recipe text `c*D^aE4^bE6^c + …` for eigenform `i`.
    pub fn recipe(&self, i: usize) -> String {
        self.coords[i]
            .iter()
            .zip(&self.monomials)
            .filter(|(c, _)| !c.is_zero_elt())
            .map(|(c, m)| format!("{}*{}", c.value(), m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Checks `T_p f_i = a_i(p) f_i` through `q^n`, which needs the forms
    /// through `q^{pn}`.
    pub fn check_eigen(&self, p: u64, n: i64) -> Result<bool> {
        for f in &self.forms {
            let tf = hecke_tp(f, p, self.weight(), n)?;
            let ap = f.try_coeff(p as i64)?;
            if !tf.agrees_with(&f.scale(&ap).truncate(n)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Expresses a cusp form in the echelon basis, whose `i`-th member starts
/// `q^{i+1} + …`.
fn echelon_coords(f: &QSeries<ModPrime>, basis: &[QSeries<ModPrime>]) -> Result<Vec<ModPrime>> {
    let mut residual = f.clone();
    let mut coords = Vec::with_capacity(basis.len());
    for (i, b) in basis.iter().enumerate() {
        let c = residual.try_coeff(i as i64 + 1)?;
        residual = residual.sub(&b.scale(&c));
        coords.push(c);
    }
    if let Some(v) = residual.valuation() {
        return Err(Error::Internal(format!(
            "form is not in the span of the cusp basis (residual at q^{v})"
        )));
    }
    Ok(coords)
}

/// Simultaneous normalized eigenforms of `S_{ℓ+1}` over F_ℓ, through `q^order`.
///
/// The T₂ eigenvalues must lie in F_ℓ and be distinct; forms are listed in
/// ascending order of `a(2)` as an integer in `[0, ℓ)`.
pub fn eigenbasis(ell: u64, order: i64) -> Result<EigenformBasis> {
    check_prime_at_least_5(ell)?;
    let k = ell + 1;
    let proto = ModPrime::zero(ell);
    let monomials = cusp_monomial_basis(k);
    let r = monomials.len();
    let order = order.max(r as i64);
    let work = order.max(2 * r as i64);
    let basis: Vec<_> = monomials.iter().map(|m| m.series(work, &proto)).collect();

    // column i of T holds the coordinates of T₂ b_i
    let mut t = vec![vec![proto; r]; r];
    for (i, b) in basis.iter().enumerate() {
        let tb = hecke_tp(b, 2, k, r as i64)?;
        let short: Vec<_> = basis.iter().map(|x| x.truncate(r as i64)).collect();
        for (row, c) in echelon_coords(&tb, &short)?.into_iter().enumerate() {
            t[row][i] = c;
        }
    }

    let mut eigen = Vec::new();
    for lambda in 0..ell {
        let lam = ModPrime::new(lambda, ell);
        let shifted: Vec<Vec<ModPrime>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| if i == j { t[i][j] - lam } else { t[i][j] })
                    .collect()
            })
            .collect();
        let ns = nullspace(&shifted, r, &proto);
        match ns.len() {
            0 => {}
            1 => eigen.push((lam, ns.into_iter().next().unwrap())),
            _ => {
                return Err(Error::EigenbasisNotSplit {
                    ell,
                    reason: format!("T2 eigenvalue {lambda} is repeated"),
                })
            }
        }
    }
    if eigen.len() != r {
        return Err(Error::EigenbasisNotSplit {
            ell,
            reason: format!("T2 has {} of {r} eigenvalues in F_{ell}", eigen.len()),
        });
    }

    let full: Vec<_> = if work == order {
        basis
    } else {
        monomials.iter().map(|m| m.series(order, &proto)).collect()
    };
    let mut coords = Vec::new();
    let mut forms = Vec::new();
    let mut t2 = Vec::new();
    for (lam, v) in eigen {
        let inv = v[0].inv().ok_or_else(|| Error::EigenbasisNotSplit {
            ell,
            reason: "eigenvector with vanishing a(1)".into(),
        })?;
        let v: Vec<ModPrime> = v.iter().map(|&x| x * inv).collect();
        let form = v
            .iter()
            .zip(&full)
            .fold(QSeries::zero(1, order, &proto), |acc, (c, b)| {
                acc.add(&b.scale(c))
            });
        coords.push(v);
        forms.push(form);
        t2.push(lam);
    }
    Ok(EigenformBasis {
        ell,
        order,
        monomials,
        coords,
        forms,
        t2_eigenvalues: t2,
    })
}

/// `f = c₀ E_k + cusp` over F_ℓ with `c₀` the constant term of `f`.
pub fn eisenstein_cusp_split(
    f: &QSeries<ModPrime>,
    k: u64,
) -> Result<(ModPrime, QSeries<ModPrime>)> {
    let proto = *f.proto();
    let c0 = f.try_coeff(0)?;
    let e = eisenstein(k, f.order(), &proto)?;
    let cusp = f.sub(&e.scale(&c0));
    Ok((c0, cusp))
}
