use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "borcherds",
    version,
    about = "Borcherds exponents of class polynomials and their congruences modulo primes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Directory for cached class polynomials.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for parallel loops (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Exact exponents A(n², d) for 1 ≤ n ≤ N.
    Exponents {
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Fit the congruence A(n², d) mod ℓ against a basis of cusp forms.
    Congruence {
        #[arg(long)]
        d: i64,
        #[arg(long = "D", default_value_t = 1)]
        #[serde(rename = "D")]
        big_d: u64,
        #[arg(long)]
        ell: u64,
        /// Verification order (at least max(200, 3r)).
        #[arg(long, default_value_t = 200)]
        n: i64,
        /// Basis recipe such as "1*D^1E4^2E6^2 + 22*D^2E4^2"; repeat for
        /// each form. Defaults to the Hecke eigenbasis.
        #[arg(long)]
        basis: Vec<String>,
    },
    /// Residue-class densities of A(p², d) mod ℓ.
    Density {
        #[arg(long)]
        d: i64,
        #[arg(long = "D", default_value_t = 1)]
        #[serde(rename = "D")]
        big_d: u64,
        #[arg(long)]
        ell: u64,
        /// Count primes below X instead of the Chebotarev limit.
        #[arg(long, alias = "x")]
        empirical: Option<u64>,
        #[arg(long)]
        basis: Vec<String>,
    },
    /// Compare exact exponents with the fitted formula for n ≤ N.
    Check {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 300)]
        n: u64,
    },
    /// The supersingular polynomial s_ℓ(x) over F_ℓ.
    Supersingular {
        #[arg(long)]
        ell: u64,
    },
    /// The (weighted) Hilbert class polynomial of discriminant −d.
    Classpoly {
        #[arg(long)]
        d: i64,
    },
    /// Discriminants d ≤ dmax whose class polynomial divides s_ℓ squarefree.
    Table2 {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        dmax: i64,
        /// Scan every d ≡ 0, 3 (mod 4) instead of d or d/4 squarefree.
        #[arg(long)]
        all_candidates: bool,
    },
}

/// The resolved configuration echoed into every output document.
#[derive(Serialize)]
pub struct RunConfig<'a> {
    #[serde(flatten)]
    pub command: &'a Command,
    #[serde(flatten)]
    pub global: &'a Global,
}
