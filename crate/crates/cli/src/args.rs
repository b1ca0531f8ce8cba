use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use torsionlab::invariants::{EigenvalueIndex, TwistKnotParam};
use torsionlab::Precision;

use crate::CliError;

/// Largest accepted `|n|`.
pub const MAX_ABS_N: i64 = 10_000;
/// Largest accepted `--N`.
pub const MAX_N: u64 = 1_000_000;
/// Largest accepted `--Nmax`.
pub const MAX_NMAX: u64 = 10_000;

#[derive(Debug, Parser)]
#[command(name = "torsionlab", version, about = "Higher-dimensional Reidemeister torsion of graph manifolds from 4-surgery on twist knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Working precision: 53 (binary64) or 54..=106 (double-double).
    #[arg(long, global = true, env = "TORSIONLAB_PRECISION_BITS", default_value_t = 53)]
    pub precision_bits: u32,

    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the metabelian representatives and the graph-manifold representations.
    Reps {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Only this metabelian class.
        #[arg(long)]
        k: Option<i64>,
        /// Only this eigenvalue index.
        #[arg(long)]
        j: Option<i64>,
        /// Check residuals against this presentation instead of the built-in one.
        #[arg(long)]
        presentation_file: Option<PathBuf>,
    },
    /// Torsion of the graph manifold for the 2N-dimensional representation.
    Torsion {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        j: i64,
        #[arg(long = "N")]
        big_n: u64,
        /// Also run the generic engine and the Fox oracle and report deltas.
        #[arg(long)]
        oracle: bool,
    },
    /// Sweep log|Tor|/(2N) against the predicted limit.
    Asymptotics {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Only this eigenvalue index (default: all).
        #[arg(long)]
        j: Option<i64>,
        #[arg(long = "Nmax")]
        n_max: u64,
    },
    /// The set of limits over all eigenvalue indices and its minimum.
    Limits {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Run every invariant check.
    Verify {
        /// Comma-separated list of n.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        n: Vec<i64>,
    },
}

/// A validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n: Vec<i64>,
    pub j: Option<i64>,
    pub k: Option<i64>,
    pub big_n: Option<u64>,
    pub precision: Precision,
    pub format: Format,
    pub seed: u64,
}

pub fn validate_n(n: i64) -> Result<TwistKnotParam, CliError> {
    if n.abs() > MAX_ABS_N {
        return Err(CliError::Invalid(format!("|n| = {} exceeds {MAX_ABS_N}", n.abs())));
    }
    Ok(TwistKnotParam::new(n)?)
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let precision = Precision::from_bits(cli.common.precision_bits).ok_or_else(|| {
            CliError::Invalid(format!(
                "precision_bits = {} unsupported (use 53 or 54..=106)",
                cli.common.precision_bits
            ))
        })?;
        let mut cfg = RunConfig {
            n: Vec::new(),
            j: None,
            k: None,
            big_n: None,
            precision,
            format: cli.common.format,
            seed: cli.common.seed,
        };
        match &cli.command {
            Command::Reps { n, k, j, .. } => {
                let p = validate_n(*n)?;
                if let Some(k) = *k {
                    if k < 1 || k > p.num_classes() {
                        return Err(CliError::Invalid(format!("k = {k} out of range 1..={}", p.num_classes())));
                    }
                }
                if let Some(j) = *j {
                    EigenvalueIndex::new(p, j)?;
                }
                cfg.n = vec![*n];
                cfg.k = *k;
                cfg.j = *j;
            }
            Command::Torsion { n, j, big_n, .. } => {
                EigenvalueIndex::new(validate_n(*n)?, *j)?;
                if *big_n > MAX_N {
                    return Err(CliError::Invalid(format!("N = {big_n} exceeds {MAX_N}")));
                }
                cfg.n = vec![*n];
                cfg.j = Some(*j);
                cfg.big_n = Some(*big_n);
            }
            Command::Asymptotics { n, j, n_max } => {
                let p = validate_n(*n)?;
                if let Some(j) = *j {
                    EigenvalueIndex::new(p, j)?;
                }
                if *n_max < 1 {
                    return Err(CliError::Invalid("N_max must be at least 1".into()));
                }
                if *n_max > MAX_NMAX {
                    return Err(CliError::Invalid(format!("N_max = {n_max} exceeds {MAX_NMAX}")));
                }
                cfg.n = vec![*n];
                cfg.j = *j;
                cfg.big_n = Some(*n_max);
            }
            Command::Limits { n } => {
                validate_n(*n)?;
                cfg.n = vec![*n];
            }
            Command::Verify { n } => {
                for &v in n {
                    validate_n(v)?;
                }
                cfg.n = n.clone();
            }
        }
        Ok(cfg)
    }
}
