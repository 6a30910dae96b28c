use std::path::PathBuf;

use ceresa_core::arith::{parse_rational, Rational};
use clap::{Args, Parser, Subcommand};

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("'{s}' is not an exact rational (use m or m/n)"))
}

#[derive(Parser, Debug)]
#[command(name = "ceresa", version, about = "Ceresa cycle torsion on bielliptic Picard curves y^3 = x^4 + a x^2 + b")]
pub struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Emit an aligned text table instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    /// Directory for the result cache; CERESA_CACHE_DIR takes precedence.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Ignore the cache entirely.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub a: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub b: Rational,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Torsion decision for y^3 = x^4 + a x^2 + b.
    Decide {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Torsion decision for the one-parameter family (a, b) = (2t, 1).
    DecideT {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        t: Rational,
    },
    /// Infinite-order certificate, from hints or by search.
    Certify {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, requires_all = ["ell", "q"])]
        v: Option<u64>,
        #[arg(long, requires_all = ["v", "q"])]
        ell: Option<u64>,
        #[arg(long, requires_all = ["v", "ell"])]
        q: Option<u64>,
        /// Search bound for v and q.
        #[arg(long, default_value_t = 200)]
        v_max: u64,
        /// Also write the canonical certificate text to this file.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Minimal polynomials of the parameters t with Q_t of exact order N <= n-max.
    EnumerateTorsion {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
    },
    /// Canonical height of (x, y) on y^2 = x^3 + d, or of the marked point of (a, b).
    Height {
        #[arg(long, value_parser = rational, allow_hyphen_values = true, requires_all = ["x", "y"], conflicts_with_all = ["a", "b"])]
        d: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        y: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, requires = "b")]
        a: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, requires = "a")]
        b: Option<Rational>,
    },
    /// Verdict and height for every t = m/n with max(|m|, n) <= B.
    Scan {
        #[arg(long = "b", value_name = "B", value_parser = clap::value_parser!(u64).range(1..))]
        bound_b: u64,
        /// Keep rows with height at most this value ("inf" keeps all).
        #[arg(long, default_value = "inf")]
        bound: f64,
    },
    /// Number of points of the curve over F_{p^i}.
    Count {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        i: u32,
    },
    /// L-polynomials L_C, L_E and L_P at p.
    Lpoly {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        p: u64,
    },
    /// Frobenius determinant on V at q, with the ell-adic unit test.
    Frobdet {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
    },
    /// Re-validate a certificate file.
    CheckCert {
        path: PathBuf,
    },
}
