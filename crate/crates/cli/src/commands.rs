use std::cell::RefCell;

use borcherds_core::arith::{format_rational, ModPrime};
use borcherds_core::borcherds::{
    exact_exponents_of, fit_congruence, fit_congruence_with, parse_recipe, reduce,
    CongruenceFormula,
};
use borcherds_core::classpoly::{
    hilbert_class_poly, hilbert_class_poly_cached, render_cache_doc, table_row, CandidateSet,
    WeightedClassPoly,
};
use borcherds_core::density::{asymptotic_table, empirical_table, DensityTable};
use borcherds_core::ssforms::supersingular_poly;
use borcherds_core::{Error, Result};
use serde_json::{json, Value};

use crate::config::{Cli, Command, Format};
use crate::output::{header, meta};

/// Class polynomials, through the cache directory when one is configured.
struct Classes<'a> {
    cli: &'a Cli,
    hits: RefCell<Vec<i64>>,
}

impl Classes<'_> {
    fn get(&self, d: i64) -> Result<WeightedClassPoly> {
        match &self.cli.global.cache_dir {
            Some(dir) => {
                let (p, hit) = hilbert_class_poly_cached(d, dir)?;
                if hit {
                    self.hits.borrow_mut().push(d);
                }
                Ok(p)
            }
            None => hilbert_class_poly(d),
        }
    }
}

fn unsupported_twist(big_d: u64) -> Result<()> {
    if big_d != 1 {
        return Err(Error::Unsupported(format!(
            "D = {big_d}: twisted class polynomials are not implemented, only D = 1"
        )));
    }
    Ok(())
}

fn json_doc(cli: &Cli, hits: &[i64], body: Value) -> String {
    let mut doc = json!({ "meta": meta(cli, hits) });
    if let (Value::Object(m), Value::Object(b)) = (&mut doc, body) {
        m.extend(b);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<String> {
    if let Some(n) = cli.global.threads {
        if n == 0 {
            return Err(Error::InvalidInput("--threads must be positive".into()));
        }
        // A second initialisation in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let classes = Classes {
        cli,
        hits: RefCell::new(Vec::new()),
    };
    let (text, csv, body) = match &cli.command {
        Command::Exponents { d, n } => exponents(&classes, *d, *n)?,
        Command::Congruence {
            d,
            big_d,
            ell,
            n,
            basis,
        } => {
            unsupported_twist(*big_d)?;
            let f = fit(&classes, *d, *ell, basis, *n)?;
            congruence_output(&f)
        }
        Command::Density {
            d,
            big_d,
            ell,
            empirical,
            basis,
        } => {
            unsupported_twist(*big_d)?;
            let f = fit(&classes, *d, *ell, basis, 200)?;
            let table = match empirical {
                Some(x) => empirical_table(&f, *x)?,
                None => asymptotic_table(&f)?,
            };
            density_output(&table)
        }
        Command::Check { d, ell, n } => check(&classes, *d, *ell, *n)?,
        Command::Supersingular { ell } => supersingular(*ell)?,
        Command::Classpoly { d } => classpoly(&classes, *d)?,
        Command::Table2 {
            ell,
            dmax,
            all_candidates,
        } => {
            let set = if *all_candidates {
                CandidateSet::All
            } else {
                CandidateSet::Conductor
            };
            let row = table_row(*ell, *dmax, set, |d| classes.get(d))?;
            let flagged: Vec<String> = row.flagged.iter().map(|d| d.to_string()).collect();
            let text = format!("ell = {ell}, d <= {dmax}: {}\n", flagged.join(", "));
            let csv = format!("d\n{}\n", flagged.join("\n"));
            let body = json!({ "schema": "table2/1", "row": row });
            (text, csv, body)
        }
    };
    let hits = classes.hits.borrow().clone();
    Ok(match cli.global.format {
        Format::Text => header(cli, &hits) + &text,
        Format::Csv => header(cli, &hits) + &csv,
        Format::Json => json_doc(cli, &hits, body),
    })
}

type Rendered = (String, String, Value);

fn exponents(classes: &Classes, d: i64, n: usize) -> Result<Rendered> {
    if n == 0 {
        return Err(Error::InvalidInput("--n must be at least 1".into()));
    }
    let t = exact_exponents_of(&classes.get(d)?, n)?;
    let mut text = String::new();
    let mut csv = String::from("n,A\n");
    for (i, a) in t.values.iter().enumerate() {
        text.push_str(&format!("A({}^2, {d}) = {a}\n", i + 1));
        csv.push_str(&format!("{},{a}\n", i + 1));
    }
    let body = json!({ "schema": "exponents/1", "table": t });
    Ok((text, csv, body))
}

fn fit(classes: &Classes, d: i64, ell: u64, basis: &[String], n: i64) -> Result<CongruenceFormula> {
    let p = classes.get(d)?;
    if basis.is_empty() {
        fit_congruence(&p, ell, n)
    } else {
        let recipes = basis
            .iter()
            .map(|s| parse_recipe(s))
            .collect::<Result<Vec<_>>>()?;
        fit_congruence_with(&p, ell, recipes, n)
    }
}

fn congruence_output(f: &CongruenceFormula) -> Rendered {
    let ell = f.ell;
    let k = ModPrime::from_i64(-24, ell) * f.c0;
    let mut text = format!(
        "-H'/H = {}*E_2{} (mod {ell}), verified through q^{}\n",
        f.c0,
        f.c.iter()
            .enumerate()
            .map(|(i, c)| format!(" + {c}*F_{}", i + 1))
            .collect::<String>(),
        f.verified_to
    );
    for (i, r) in f.basis.iter().enumerate() {
        text.push_str(&format!("F_{} = {r}\n", i + 1));
    }
    let sum: String =
        f.c.iter()
            .enumerate()
            .map(|(i, c)| format!(" + {c}*a_{}(m)", i + 1))
            .collect();
    text.push_str(&format!(
        "A(n^2, {}) = {k} + (1/n) sum_(m|n) mu(n/m) ({}) (mod {ell}) for {ell} !| n\n",
        f.d,
        if sum.is_empty() {
            "0".to_string()
        } else {
            sum[3..].to_string()
        }
    ));
    let doc = f.to_doc();
    let mut csv = String::from("key,value\n");
    csv.push_str(&format!("c0,{}\n", doc.c0));
    for (i, (c, b)) in doc.c.iter().zip(&doc.basis).enumerate() {
        csv.push_str(&format!("c{},{c}\nF{},\"{b}\"\n", i + 1, i + 1));
    }
    csv.push_str(&format!("verified_to,{}\n", doc.verified_to));
    let body = json!({ "schema": "congruence/1", "formula": doc });
    (text, csv, body)
}

fn density_output(t: &DensityTable) -> Rendered {
    let mut text = match t.x {
        Some(x) => format!("delta_{}(t, {}; {x})\n", t.d, t.ell),
        None => format!("delta_{}(t, {}; infinity)\n", t.d, t.ell),
    };
    for tt in 0..t.ell {
        let exact = t
            .exact(tt)
            .map(|q| format!("  {}", format_rational(q)))
            .unwrap_or_default();
        text.push_str(&format!("t = {tt:>2}: {:.4}{exact}\n", t.ratio(tt)));
    }
    let body: Value = serde_json::from_str(&t.to_json()).expect("table json");
    let body = json!({ "schema": "density/1", "table": body });
    (text, t.to_csv(), body)
}

fn check(classes: &Classes, d: i64, ell: u64, n: u64) -> Result<Rendered> {
    let p = classes.get(d)?;
    let exact = exact_exponents_of(&p, n as usize)?;
    let f = fit_congruence(&p, ell, n as i64)?;
    let mut skipped = 0;
    for m in 1..=n {
        if m % ell == 0 {
            skipped += 1;
            continue;
        }
        let want = reduce(exact.get(m as usize).expect("n entries"), ell);
        let got = f.eval(m)?;
        if want != got {
            return Err(Error::Internal(format!(
                "A({m}^2, {d}) = {want} mod {ell} but the formula gives {got}"
            )));
        }
    }
    let text = format!("OK: {n} indices verified ({skipped} skipped, ℓ|n)\n");
    let csv = format!("verified,skipped\n{n},{skipped}\n");
    let body = json!({
        "schema": "check/1",
        "ok": true,
        "verified": n,
        "skipped": skipped,
        "formula": f.to_doc(),
    });
    Ok((text, csv, body))
}

fn supersingular(ell: u64) -> Result<Rendered> {
    let s = supersingular_poly(ell)?;
    let coeffs: Vec<u64> = s.coeffs().iter().map(|c| c.value()).collect();
    let text = format!(
        "s_{ell}(x) = {s} over F_{ell} (degree {})\n",
        s.degree().unwrap_or(0)
    );
    let csv = format!(
        "power,coefficient\n{}",
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{i},{c}\n"))
            .collect::<String>()
    );
    let body = json!({ "schema": "supersingular/1", "ell": ell, "coefficients": coeffs });
    Ok((text, csv, body))
}

fn classpoly(classes: &Classes, d: i64) -> Result<Rendered> {
    let p = classes.get(d)?;
    let mut text = format!("d = {d}, h(d) = {}\n", format_rational(&p.h()));
    let mut csv = String::from("component,weight,power,coefficient\n");
    for (i, c) in p.components.iter().enumerate() {
        text.push_str(&format!(
            "[weight {}] {}\n",
            format_rational(&c.weight),
            c.poly
        ));
        for (k, a) in c.poly.coeffs().iter().enumerate() {
            csv.push_str(&format!("{i},{},{k},{a}\n", format_rational(&c.weight)));
        }
    }
    let doc: Value = serde_json::from_str(&render_cache_doc(&p)).expect("cache json");
    let body = json!({ "schema": "classpoly/1", "classpoly": doc });
    Ok((text, csv, body))
}
