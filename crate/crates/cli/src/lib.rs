//! The `lukas` command line tool.
//!
//! Every subcommand maps onto one operation of the `lukasiewicz` crate and
//! prints a JSON envelope (default) or a CSV table with a header row.
//! Exit codes: `0` success, `2` invalid input, `3` numerical non-convergence.

mod commands;
pub mod output;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lukasiewicz::asymptotics::Quantity;
use lukasiewicz::{Error, PathKind, StepSet};

use output::{Envelope, Precision};

pub const TOOL: &str = "lukas";

#[derive(Debug, Parser)]
#[command(name = "lukas", version, about = "r-ascents in Lukasiewicz paths")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Step set, e.g. "-1,0,2".
    #[arg(
        long,
        global = true,
        default_value = "-1,1",
        allow_hyphen_values = true
    )]
    pub steps: String,
    /// Path family.
    #[arg(long, global = true, default_value = "excursion")]
    pub kind: String,
    /// Path length (or series order).
    #[arg(short = 'n', long = "length", global = true, default_value_t = 10)]
    pub n: usize,
    /// Ascent length.
    #[arg(short = 'r', long = "ascent", global = true, default_value_t = 1)]
    pub r: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Significant digits of approximate values; doubles when unset.
    #[arg(long, global = true, env = "LUKAS_DIGITS")]
    pub digits: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of sampled paths.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Worker threads for the exact dynamic program.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Count,
    Mean,
    Variance,
}

impl From<QuantityArg> for Quantity {
    fn from(q: QuantityArg) -> Self {
        match q {
            QuantityArg::Count => Quantity::Count,
            QuantityArg::Mean => Quantity::Mean,
            QuantityArg::Variance => Quantity::Variance,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of paths of length n.
    Count,
    /// Exact distribution of the number of r-ascents.
    Dist,
    /// Exact count, mean and variance of the number of r-ascents.
    Moments,
    /// Structural and limit-law constants of the step set.
    Constants,
    /// Bivariate generating function coefficients up to z^n.
    Series,
    /// Asymptotic approximation of a count, mean or variance.
    Asym {
        #[arg(long, value_enum, default_value_t = QuantityArg::Mean)]
        quantity: QuantityArg,
    },
    /// Exact values against asymptotics over several lengths.
    Compare {
        #[arg(long, value_enum, default_value_t = QuantityArg::Mean)]
        quantity: QuantityArg,
        /// Comma separated lengths.
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<usize>,
    },
    /// Uniform random path; with --trials, Monte Carlo moments.
    Sample {
        /// Also report the Kolmogorov-Smirnov distance to the normal limit
        /// (meanders; needs --trials).
        #[arg(long)]
        ks: bool,
    },
    /// Convert between an excursion and its plane tree, read from stdin.
    Tree,
}

/// Failure of one invocation.
#[derive(Debug)]
pub enum Failure {
    /// Argument parsing failed or help was requested; clap renders it.
    Usage(clap::Error),
    Library(Error),
    Input(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(e) => e.exit_code(),
            Failure::Library(Error::NoConvergence(_)) => 3,
            Failure::Library(_) | Failure::Input(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(e) => write!(f, "{e}"),
            Failure::Library(e) => write!(f, "error: {e}"),
            Failure::Input(m) => write!(f, "error: {m}"),
        }
    }
}

/// Parsed common arguments.
pub struct Context {
    pub steps: StepSet,
    pub kind: PathKind,
    pub n: usize,
    pub r: usize,
    pub precision: Precision,
    pub seed: u64,
    pub trials: Option<usize>,
    pub threads: usize,
}

/// Runs one invocation; `args` includes the program name and `stdin` is the
/// standard input (read only by `tree`).
pub fn run<I, T>(args: I, stdin: &str) -> Result<String, Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&args).map_err(Failure::Usage)?;
    let c = &cli.common;
    if c.digits == Some(0) {
        return Err(Failure::Input("--digits must be positive".into()));
    }
    let ctx = Context {
        steps: c.steps.parse()?,
        kind: c.kind.parse()?,
        n: c.n,
        r: c.r,
        precision: c.digits.map_or(Precision::F64, Precision::Digits),
        seed: c.seed,
        trials: c.trials,
        threads: c.threads.max(1),
    };
    let report = commands::dispatch(&cli.command, &ctx, stdin)?;
    Ok(match c.format {
        Format::Csv => report.csv(),
        Format::Json => Envelope {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            steps: ctx.steps.to_string(),
            command: args
                .iter()
                .skip(1)
                .map(|a| a.to_string_lossy().into_owned())
                .collect(),
            precision: ctx.precision.describe(),
            payload: report.payload,
        }
        .render(),
    })
}
