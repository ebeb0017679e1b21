use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{format_rational, ModPrime, Rational};
use crate::borcherds::CongruenceFormula;
use crate::error::{Error, Result};

use super::lemma::charpoly_count;

/// Value of a single residue class `t`.
#[derive(Clone, Debug, PartialEq)]
pub enum DensityValue {
    Exact(Rational),
    Empirical { count: u64, total: u64 },
}

impl DensityValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            DensityValue::Exact(q) => {
                q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
            }
            DensityValue::Empirical { count, total } => *count as f64 / *total as f64,
        }
    }
}

/// `δ(t)` for every `t ∈ F_ℓ`, indexed by `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityTable {
    pub d: i64,
    pub ell: u64,
    /// Prime bound for empirical tables.
    pub x: Option<u64>,
    pub entries: Vec<DensityValue>,
}

#[derive(Serialize)]
struct EntryDoc {
    t: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
    ratio: f64,
}

#[derive(Serialize)]
struct TableDoc {
    d: i64,
    ell: u64,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none")]
    x: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    total: Option<u64>,
    entries: Vec<EntryDoc>,
}

impl DensityTable {
    pub fn exact(&self, t: u64) -> Option<&Rational> {
        match self.entries.get(t as usize)? {
            DensityValue::Exact(q) => Some(q),
            DensityValue::Empirical { .. } => None,
        }
    }

    pub fn ratio(&self, t: u64) -> f64 {
        self.entries[t as usize].to_f64()
    }

    pub fn ratios(&self) -> Vec<f64> {
        self.entries.iter().map(DensityValue::to_f64).collect()
    }

    /// Sum of the exact entries, or `None` for an empirical table.
    pub fn exact_sum(&self) -> Option<Rational> {
        self.entries
            .iter()
            .try_fold(Rational::zero(), |acc, e| match e {
                DensityValue::Exact(q) => Some(acc + q),
                DensityValue::Empirical { .. } => None,
            })
    }

    /// Residue classes grouped by equal exact value, in order of first `t`.
    pub fn classes(&self) -> Vec<(Rational, Vec<u64>)> {
        let mut out: Vec<(Rational, Vec<u64>)> = Vec::new();
        for (t, q) in (0..self.ell).filter_map(|t| self.exact(t).map(|q| (t, q))) {
            match out.iter_mut().find(|(v, _)| v == q) {
                Some((_, ts)) => ts.push(t),
                None => out.push((q.clone(), vec![t])),
            }
        }
        out
    }

    /// `t,count,ratio`; for exact tables `count` holds the `num/den` value.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,count,ratio\n");
        for (t, e) in self.entries.iter().enumerate() {
            let count = match e {
                DensityValue::Exact(q) => format_rational(q),
                DensityValue::Empirical { count, .. } => count.to_string(),
            };
            s.push_str(&format!("{t},{count},{:.4}\n", e.to_f64()));
        }
        s
    }

    pub fn to_json(&self) -> String {
        let total = self.entries.iter().find_map(|e| match e {
            DensityValue::Empirical { total, .. } => Some(*total),
            DensityValue::Exact(_) => None,
        });
        let doc = TableDoc {
            d: self.d,
            ell: self.ell,
            x: self.x,
            total,
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(t, e)| EntryDoc {
                    t: t as u64,
                    exact: match e {
                        DensityValue::Exact(q) => Some(format_rational(q)),
                        DensityValue::Empirical { .. } => None,
                    },
                    count: match e {
                        DensityValue::Empirical { count, .. } => Some(*count),
                        DensityValue::Exact(_) => None,
                    },
                    ratio: e.to_f64(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }
}

/// `t = −24c₀ + b^{-1} Σ cᵢ(aᵢ − 1)`.
fn residue(f: &CongruenceFormula, b: u64, traces: &[u64]) -> u64 {
    let ell = f.ell;
    let binv = ModPrime::new(b, ell).fermat_inv().expect("b nonzero");
    let mut s = ModPrime::zero(ell);
    for (c, &a) in f.c.iter().zip(traces) {
        s = s + *c * (ModPrime::new(a, ell) - ModPrime::one(ell));
    }
    (ModPrime::from_i64(-24, ell) * f.c0 + binv * s).value()
}

/// Chebotarev densities of `A(p², d) mod ℓ` when Frobenius is equidistributed
/// in GL₂(F_ℓ), or for `r = 2` in `{(M, N) : det M = det N}`.
pub fn asymptotic_table(f: &CongruenceFormula) -> Result<DensityTable> {
    let ell = f.ell;
    let mut acc = vec![Rational::zero(); ell as usize];
    match f.r() {
        0 => acc[residue(f, 1, &[]) as usize] = Rational::from_integer(1.into()),
        1 => {
            for b in 1..ell {
                for a in 0..ell {
                    acc[residue(f, b, &[a]) as usize] += charpoly_count(ell, a, b)?.1;
                }
            }
        }
        2 => {
            // P(a₁, a₂, b) = P(a₁, b)·P(a₂, b)·(ℓ − 1).
            let coupling = Rational::from_integer(BigInt::from(ell - 1));
            for b in 1..ell {
                let props: Vec<Rational> = (0..ell)
                    .map(|a| charpoly_count(ell, a, b).map(|c| c.1))
                    .collect::<Result<_>>()?;
                for a1 in 0..ell {
                    let w1 = &props[a1 as usize] * &coupling;
                    for a2 in 0..ell {
                        acc[residue(f, b, &[a1, a2]) as usize] += &w1 * &props[a2 as usize];
                    }
                }
            }
        }
        r => {
            return Err(Error::Unsupported(format!(
                "asymptotic densities for r = {r} > 2"
            )))
        }
    }
    Ok(DensityTable {
        d: f.d,
        ell,
        x: None,
        entries: acc.into_iter().map(DensityValue::Exact).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borcherds::fit_congruence;
    use crate::classpoly::hilbert_class_poly;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn eleven() {
        let f = fit_congruence(&hilbert_class_poly(4).unwrap(), 11, 200).unwrap();
        let t = asymptotic_table(&f).unwrap();
        for k in 0..11 {
            let want = match k {
                8 => q(119, 1200),
                10 => q(109, 1200),
                _ => q(9, 100),
            };
            assert_eq!(t.exact(k), Some(&want), "t = {k}");
        }
        assert_eq!(t.exact_sum(), Some(q(1, 1)));
        assert!(t.to_csv().contains("8,119/1200,0.0992"));
        assert!(t.to_json().contains("\"exact\": \"109/1200\""));
    }

    #[test]
    fn trivial_space_is_a_point_mass() {
        let f = fit_congruence(&hilbert_class_poly(3).unwrap(), 5, 50).unwrap();
        let t = asymptotic_table(&f).unwrap();
        assert_eq!(t.exact(2), Some(&q(1, 1)));
        assert_eq!(t.classes().len(), 2);
    }
}
