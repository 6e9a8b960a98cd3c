//! `qbrauer`: command-line front end with deterministic JSON reports.

mod commands;

use clap::{Args, Parser, Subcommand};
use commands::Failure;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "qbrauer", version, about = "Exact computations in the q-Brauer algebra B_n(q, z)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Directory for multiplication-table files.
    #[arg(long, global = true, env = "QBRAUER_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Largest accepted rank.
    #[arg(long, global = true, default_value_t = 5)]
    pub max_n: usize,
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

/// A cell label `(f, λ)` of `B_n`.
#[derive(Args, Debug, Clone)]
pub struct LabelArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub f: usize,
    /// Partition as a bracketed comma list, e.g. `[2,1]` or `[]`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

/// Specialization of the parameters; symbolic when neither flag is given.
#[derive(Args, Debug, Clone)]
#[group(multiple = false)]
pub struct SpecArgs {
    /// Substitute `z = q^a`.
    #[arg(long, allow_hyphen_values = true)]
    pub z_exp: Option<i32>,
    /// Numeric point `char,q0,z0`; `char = 0` means the rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub numeric: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every defining relation on the regular representation.
    VerifyRelations {
        #[arg(long)]
        n: usize,
    },
    /// Gram matrix of a cell module and its determinant.
    Gram {
        #[command(flatten)]
        label: LabelArgs,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Eigenvalues of the Jucys-Murphy elements on a cell module, with triangularity checks.
    JmSpectrum {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Restriction filtration of a cell module to rank n - 1.
    Branching {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
    },
    /// Exponents a for which some Gram determinant vanishes under z = q^a.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i32>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i32>,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
    },
    /// Brute-force semisimplicity against the closed-form criterion.
    Semisimple {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
    },
    /// Product of two generator words, e.g. `--lhs "T1 E" --rhs "T2^-1"`.
    Mul {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Number of normal words, by deficiency.
    BasisCount {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.global.threads > 0 {
        // Only fails if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads).build_global();
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qbrauer: {f}");
            ExitCode::from(f.code())
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Check(m) => write!(f, "check failed: {m}"),
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Environment(m) => write!(f, "{m}"),
        }
    }
}
