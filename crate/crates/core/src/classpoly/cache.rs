//! On-disk cache of class polynomials, one JSON document per discriminant.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::qseries::Poly;

use super::forms::{check_discriminant, reduced_forms};
use super::hilbert::{hilbert_class_poly, ClassComponent, WeightedClassPoly};

/// Largest discriminant a cache document may describe.
pub const MAX_CACHE_D: i64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    /// Ascending coefficients as decimal strings.
    pub coeffs: Vec<String>,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheDoc {
    pub d: i64,
    pub components: Vec<ComponentDoc>,
    pub precision_used: u64,
    pub residual_bound: f64,
}

impl From<&WeightedClassPoly> for CacheDoc {
    fn from(p: &WeightedClassPoly) -> Self {
        CacheDoc {
            d: p.d,
            components: p
                .components
                .iter()
                .map(|c| ComponentDoc {
                    coeffs: c.poly.coeffs().iter().map(|x| x.to_string()).collect(),
                    weight: format_rational(&c.weight),
                })
                .collect(),
            precision_used: p.precision_used,
            residual_bound: p.residual_bound,
        }
    }
}

impl CacheDoc {
    /// Validates the document and rebuilds the polynomial: components must
    /// be monic, weights must be 1, 1/2 or 1/3, and `Σ w·deg` must equal
    /// the class number.
    pub fn into_poly(self) -> Result<WeightedClassPoly> {
        check_discriminant(self.d).map_err(|e| Error::Parse(e.to_string()))?;
        if self.d > MAX_CACHE_D {
            return Err(Error::Parse(format!(
                "d = {} exceeds {MAX_CACHE_D}",
                self.d
            )));
        }
        if !(self.residual_bound >= 0.0 && self.residual_bound < 1e-3) {
            return Err(Error::Parse("residual_bound must lie in [0, 1e-3)".into()));
        }
        let forms = reduced_forms(self.d)?;
        let mut components = Vec::new();
        for c in self.components {
            let coeffs = c
                .coeffs
                .iter()
                .map(|s| parse_integer(s))
                .collect::<Result<Vec<BigInt>>>()?;
            let poly = Poly::new(coeffs, &BigInt::zero());
            if !poly.is_monic() || poly.degree().unwrap_or(0) == 0 {
                return Err(Error::Parse(
                    "component is not a monic nonconstant polynomial".into(),
                ));
            }
            let weight = parse_rational(&c.weight)?;
            let omega = (1..=3u32).find(|&w| weight == Rational::new(BigInt::one(), w.into()));
            let Some(omega) = omega else {
                return Err(Error::Parse(format!("unexpected weight {}", c.weight)));
            };
            let expected = forms.iter().filter(|f| f.omega() == omega).count();
            if poly.degree() != Some(expected) {
                return Err(Error::Parse(format!(
                    "weight {} component has degree {:?}, expected {expected}",
                    c.weight,
                    poly.degree()
                )));
            }
            components.push(ClassComponent { poly, weight });
        }
        let p = WeightedClassPoly {
            d: self.d,
            components,
            precision_used: self.precision_used,
            residual_bound: self.residual_bound,
        };
        if p.class_count() != forms.len() {
            return Err(Error::Parse("components do not cover every class".into()));
        }
        Ok(p)
    }
}

fn parse_integer(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not an integer: {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Parses and validates a cache document.
pub fn parse_cache_doc(text: &str) -> Result<WeightedClassPoly> {
    let doc: CacheDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_poly()
}

pub fn render_cache_doc(p: &WeightedClassPoly) -> String {
    serde_json::to_string_pretty(&CacheDoc::from(p)).expect("cache document serializes")
}

pub fn cache_path(dir: &Path, d: i64) -> PathBuf {
    dir.join(format!("classpoly_{d}.json"))
}

/// Loads `d` from `dir` if a valid document exists, otherwise computes and
/// stores it atomically. The flag reports a cache hit.
pub fn hilbert_class_poly_cached(d: i64, dir: &Path) -> Result<(WeightedClassPoly, bool)> {
    let path = cache_path(dir, d);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(p) = parse_cache_doc(&text) {
            if p.d == d {
                return Ok((p, true));
            }
        }
    }
    let p = hilbert_class_poly(d)?;
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(render_cache_doc(&p).as_bytes())?;
    tmp.persist(&path).map_err(|e| Error::Io(e.to_string()))?;
    Ok((p, false))
}
