//! Text recipes for linear combinations of `Δ^a E₄^b E₆^c`, such as
//! `1*D^1E4^2E6^2 + 22*D^2E4^2`.

use num_bigint::BigInt;

use crate::arith::{Coeff, ModPrime};
use crate::error::{Error, Result};
use crate::qseries::{Monomial, QSeries};

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub terms: Vec<(BigInt, Monomial)>,
}

impl Recipe {
    /// Common weight of all terms; `None` for an empty or mixed-weight recipe.
    pub fn weight(&self) -> Option<u64> {
        let w = self.terms.first()?.1.weight();
        self.terms.iter().all(|(_, m)| m.weight() == w).then_some(w)
    }

    /// The constant term vanishes; only `Δ`-free terms contribute to it, each with 1.
    pub fn is_cusp(&self) -> bool {
        let c: BigInt = self
            .terms
            .iter()
            .filter(|(_, m)| m.delta == 0)
            .map(|(c, _)| c)
            .sum();
        c == BigInt::from(0)
    }

    pub fn series_mod(&self, ell: u64, order: i64) -> QSeries<ModPrime> {
        let proto = ModPrime::zero(ell);
        self.terms
            .iter()
            .fold(QSeries::zero(0, order, &proto), |acc, (c, m)| {
                acc.add(
                    &m.series(order, &proto)
                        .scale(&ModPrime::from_bigint(c, ell)),
                )
            })
    }

    pub fn from_coords(coords: &[ModPrime], monomials: &[Monomial]) -> Self {
        Recipe {
            terms: coords
                .iter()
                .zip(monomials)
                .filter(|(c, _)| !c.is_zero_elt())
                .map(|(c, m)| (BigInt::from(c.value()), *m))
                .collect(),
        }
    }
}

impl std::fmt::Display for Recipe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, m)| format!("{c}*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || s.len() > 9 {
        return Err(Error::Parse(format!("bad {what} {s:?}")));
    }
    let v: u32 = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} {s:?}")))?;
    Ok(v)
}

fn parse_monomial(s: &str) -> Result<Monomial> {
    if s == "1" {
        return Ok(Monomial::new(0, 0, 0));
    }
    let mut rest = s;
    let mut exps = [0u32; 3];
    for (slot, name) in ["D^", "E4^", "E6^"].iter().enumerate() {
        if let Some(tail) = rest.strip_prefix(name) {
            let end = tail
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(tail.len());
            let e = parse_u32(&tail[..end], "exponent")?;
            if e == 0 || e > MAX_EXPONENT {
                return Err(Error::Parse(format!(
                    "exponent {e} out of range 1..={MAX_EXPONENT}"
                )));
            }
            exps[slot] = e;
            rest = &tail[end..];
        }
    }
    if !rest.is_empty() || exps == [0, 0, 0] {
        return Err(Error::Parse(format!("bad monomial {s:?}")));
    }
    Ok(Monomial::new(exps[0], exps[1], exps[2]))
}

fn parse_term(s: &str) -> Result<(BigInt, Monomial)> {
    let s = s.trim();
    let (coeff, mono) = match s.split_once('*') {
        Some((c, m)) => {
            let c = c.trim();
            let digits = c.strip_prefix('-').unwrap_or(c);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 40
            {
                return Err(Error::Parse(format!("bad coefficient {c:?}")));
            }
            (
                c.parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?,
                m.trim(),
            )
        }
        None => (BigInt::from(1), s),
    };
    Ok((coeff, parse_monomial(mono)?))
}

/// Parses `c*D^aE4^bE6^c + …`; the coefficient defaults to 1 and each
/// factor may be omitted but must appear in the order `D`, `E4`, `E6`.
pub fn parse_recipe(s: &str) -> Result<Recipe> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty recipe".into()));
    }
    let terms = s.split('+').map(parse_term).collect::<Result<Vec<_>>>()?;
    Ok(Recipe { terms })
}
