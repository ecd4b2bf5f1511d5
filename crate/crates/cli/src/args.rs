use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rowing_spectra::exactnum::parse_rational;
use rowing_spectra::Rational;

/// Exact smallest eigenvalues of rowing graphs and caterpillars.
///
/// Rationals are written as `num/den` or as decimals, which are read
/// exactly. Output is one JSON object per line unless `--human` is given.
#[derive(Debug, Parser)]
#[command(name = "rowing-spectra", version)]
pub struct Cli {
    /// Print tables instead of JSON lines.
    #[arg(long, global = true)]
    pub human: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brackets for lambda*, lambda', rho, phi and alpha_2..alpha_12.
    Constants {
        #[arg(long, value_parser = rational, default_value = "1/1000000")]
        tol: Rational,
    },
    /// Certified bracket for the smallest adjacency eigenvalue.
    Lambda1 {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_parser = rational, default_value = "1/1000000")]
        tol: Rational,
        /// Also print the characteristic polynomial and an isolating
        /// interval for the smallest root.
        #[arg(long)]
        exact: bool,
    },
    /// Bracket for the limit of lambda_1(F, a 0^n) as n grows.
    Tail {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_parser = rational, default_value = "1/1000000")]
        tol: Rational,
    },
    /// Searches for a graph with lambda_1 in (-lambda - eps, -lambda).
    Search(SearchArgs),
    /// Runs the certificate checkers; exits 0 iff every claim verifies.
    Certs {
        /// Claim-id prefix, e.g. `prop-4.6`.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random instances per randomized checker.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Include wall-clock time per claim (not reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long, env = "ROWING_SPECTRA_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// A signed p-coloring, or `none`.
    Color {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short = 'p', value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
    },
    /// Multiplicity of -lambda as an eigenvalue.
    Mult {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Writes the graph of an encoding as JSON or DOT.
    Build {
        #[arg(long)]
        encoding: String,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
        /// Output file; stdout when absent.
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph JSON file: {"n": .., "edges": [[u, v, sign], ..], "root": ..}.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Rowing (`F1:0110`) or caterpillar (`CAT:2,0,1`) encoding.
    #[arg(long)]
    pub encoding: Option<String>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_parser = rational)]
    pub lambda: Rational,
    #[arg(long, value_parser = rational)]
    pub eps: Rational,
    #[arg(long, default_value_t = 64)]
    pub max_len: usize,
    #[arg(long, default_value_t = 20_000)]
    pub max_nodes: usize,
    /// Bisection tolerance; eps/8 when absent.
    #[arg(long, value_parser = rational)]
    pub tol: Option<Rational>,
    /// Force a base (F1, F2, F3) instead of choosing it from lambda.
    #[arg(long)]
    pub base: Option<String>,
    #[arg(long, default_value_t = 8)]
    pub leg_cap: u32,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Accepted for interface stability; the search has no random choices.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, env = "ROWING_SPECTRA_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Dot,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}
