//! Command-line front end for `hookw`.
//!
//! Each subcommand maps to one library operation or one verification suite.
//! Output is JSON (`--json`) or an aligned text projection of the same JSON.
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage or
//! input error.

mod commands;
pub mod render;
pub mod sweep;

use clap::{Args, Parser, Subcommand};
use hookw::catalog::{GtSeries, TargetKind};
use hookw::exact::{parse_bigrat, parse_ratfunc, BigRat, RatFunc};
use hookw::liedata::Family;
use hookw::spectra::{ClassicalType, SingObject};
use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use sweep::{parse_range, SweepSpec};

/// Environment variable holding the number of sweep worker threads.
pub const WORKERS_ENV: &str = "HOOKW_WORKERS";

/// Parses an exact rational `[+-]digits[/digits]`.
pub fn parse_rational(text: &str) -> Result<BigRat, String> {
    parse_bigrat(text).map_err(|e| e.to_string())
}

fn parse_symbolic(text: &str) -> Result<RatFunc, String> {
    parse_ratfunc(text).map_err(|e| e.to_string())
}

fn parse_family(text: &str) -> Result<Family, String> {
    text.parse().map_err(|e: hookw::Error| e.to_string())
}

fn parse_kind(text: &str) -> Result<TargetKind, String> {
    text.parse().map_err(|e: hookw::Error| e.to_string())
}

fn parse_classical(text: &str) -> Result<ClassicalType, String> {
    text.parse().map_err(|e: hookw::Error| e.to_string())
}

fn parse_object(text: &str) -> Result<SingObject, String> {
    text.parse().map_err(|e: hookw::Error| e.to_string())
}

fn parse_series(text: &str) -> Result<GtSeries, String> {
    text.parse().map_err(|e: hookw::Error| e.to_string())
}

/// Exact algebra of hook-type orthosymplectic W-algebra cosets.
#[derive(Parser, Debug)]
#[command(name = "hookw", version, about)]
pub struct Cli {
    /// Emit JSON instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// A family point `iX(n, m)`.
#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Family tag: 1B, 1C, 1D, 1O, 2B, 2C, 2D or 2O.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Central charge of the coset, symbolic in psi or at an exact psi.
    Charge {
        #[command(flatten)]
        family: FamilyArgs,
        /// Exact rational value of psi (symbolic if absent).
        #[arg(long, value_parser = parse_rational)]
        psi: Option<BigRat>,
    },
    /// Algebra identification of the W-algebra and its coset.
    Describe {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Strong generating types of the W-algebra and of the coset.
    Gentype {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Truncation curve (c(psi), lambda(psi)) or its point at psi.
    Curve {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// n as an integer, rational or symbol (e.g. `n`).
        #[arg(long, value_parser = parse_symbolic)]
        n: RatFunc,
        /// m as an integer, rational or symbol (e.g. `m`).
        #[arg(long, value_parser = parse_symbolic)]
        m: RatFunc,
        #[arg(long, value_parser = parse_rational)]
        psi: Option<BigRat>,
    },
    /// Conformal weight of the lowest singular vector at level -h^v + u/v.
    Sing {
        /// `sp` or `so_odd`.
        #[arg(long, value_parser = parse_classical)]
        kind: ClassicalType,
        /// `affine` or `principal_w`.
        #[arg(long, value_parser = parse_object)]
        object: SingObject,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        /// Evaluate the formulas even when gcd(u, v) != 1.
        #[arg(long)]
        unchecked: bool,
    },
    /// Rational intersection points of two truncation curves.
    ///
    /// Curves are written `2B(0,1)` for a family point or `sp:1`,
    /// `so_even:2`, `osp:1`, `so_odd:1` for a target algebra of rank r.
    Intersect {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Run a verification suite over a sweep.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Rationality witnesses on a family point.
    RationalPoints {
        #[command(flatten)]
        family: FamilyArgs,
        /// Range of the auxiliary rank r (or level k), e.g. `1..3`.
        #[arg(long, alias = "k", value_parser = parse_range, default_value = "1..4")]
        r: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range, default_value = "1..8")]
        p: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range, default_value = "1..8")]
        q: RangeInclusive<i64>,
        /// Also emit conjectural points (tagged as such).
        #[arg(long)]
        include_conjectural: bool,
    },
    /// Gelfand-Tsetlin factor list of L_k(g) for series B, C or D.
    GtFactors {
        #[arg(long, value_parser = parse_series)]
        series: GtSeries,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
}

/// Common options of the verification suites.
#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    /// Ranges such as `n=0..4,m=0..4`; unspecified variables use defaults.
    #[arg(long, default_value = "")]
    pub sweep: SweepSpec,
    /// Upper bound on the number of grid points.
    #[arg(long, default_value_t = 100_000)]
    pub max_points: u64,
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Triality identities for n <= m on the sweep (variables n, m).
    Trialities {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Also check the identities with symbolic n, m.
        #[arg(long)]
        symbolic: bool,
    },
    /// Coincidence tables on the sweep (variables n, m, r).
    Coincidences {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Restrict to one source family.
        #[arg(long, value_parser = parse_family)]
        source: Option<Family>,
        /// Restrict to one target kind (sp, so_even, osp).
        #[arg(long, value_parser = parse_kind)]
        kind: Option<TargetKind>,
        /// Also check every entry with symbolic n, m, r.
        #[arg(long)]
        symbolic: bool,
    },
    /// Assembled central charges against the closed forms (variables n, m).
    Charges {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// General singular-weight formula against the closed forms (variables n, u, v).
    Singular {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

/// Result of a command: JSON data plus whether a verification failed.
pub struct Outcome {
    pub value: serde_json::Value,
    pub failed: bool,
}

/// Errors mapped to exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<hookw::Error> for UsageError {
    fn from(e: hookw::Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<String> for UsageError {
    fn from(e: String) -> Self {
        UsageError(e)
    }
}

fn worker_pool() -> Result<rayon::ThreadPool, UsageError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(text) = std::env::var(WORKERS_ENV) {
        let n: usize = text
            .trim()
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                UsageError(format!(
                    "{WORKERS_ENV} must be a positive integer, got `{text}`"
                ))
            })?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| UsageError(e.to_string()))
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome, UsageError> {
    let pool = worker_pool()?;
    pool.install(|| commands::dispatch(&cli.command))
}

/// Parses `args`, runs the command and writes to the given streams;
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => emit(&outcome, cli.json, out, err),
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Writes an outcome as JSON or a table; returns 1 if it records a failed
/// verification and 0 otherwise.
pub fn emit(outcome: &Outcome, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let text = if json {
        let mut s = serde_json::to_string_pretty(&outcome.value).expect("serializable");
        s.push('\n');
        s
    } else {
        render::render_table(&outcome.value)
    };
    let _ = out.write_all(text.as_bytes());
    if outcome.failed {
        let _ = writeln!(err, "verification failed");
        1
    } else {
        0
    }
}
