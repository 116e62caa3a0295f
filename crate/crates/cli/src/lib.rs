//! Command-line front end: coefficient tables, verification sweeps,
//! weighted integrals and single `2F1` evaluations.
//!
//! [`run`] is the whole program minus process I/O, so tests can drive it
//! directly. Reports are sorted before emission and carry no timing or
//! worker information, so the same configuration always yields the same
//! bytes.

use std::collections::BTreeSet;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fibcheb::integrals::{DmInterpretation, IntegralKind};
use fibcheb::scalar::{format_rational, parse_rational};
use fibcheb::{ConnectionDirection, Hypergeom2F1, Status};
use thiserror::Error;

pub mod output;
pub mod verify;

pub use verify::Suite;

/// Default upper bound on `--jmax`.
pub const DEFAULT_JMAX_CAP: usize = 500;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "FIBCHEB_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] fibcheb::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DmFlag {
    /// Leave `d_m` undefined; the first-kind product formula is reported as unevaluable.
    Undefined,
    /// Read `d_m` as the normalizer `c_{j-2m}`.
    Normalizer,
}

impl From<DmFlag> for DmInterpretation {
    fn from(f: DmFlag) -> Self {
        match f {
            DmFlag::Undefined => DmInterpretation::Undefined,
            DmFlag::Normalizer => DmInterpretation::Normalizer,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fibcheb", version, about = "Exact Fibonacci/Chebyshev connection formulae")]
pub struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = WORKERS_ENV, default_value_t = 0)]
    pub workers: usize,

    /// Largest accepted --jmax / --j.
    #[arg(long, global = true, default_value_t = DEFAULT_JMAX_CAP)]
    pub jmax_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connection coefficients of one direction.
    Table(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Chebyshev-weighted integrals of Fibonacci products.
    Integrate(IntegrateArgs),
    /// Evaluate a terminating 2F1(a, b; c; z).
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// t-in-f, u-in-f, f-in-t or f-in-u.
    #[arg(long)]
    pub direction: ConnectionDirection,
    /// Emit every j from the smallest valid one up to this value.
    #[arg(long, conflicts_with = "j")]
    pub jmax: Option<usize>,
    /// Emit a single j.
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated suites or identity ids.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub suite: Vec<String>,
    #[arg(long, default_value_t = 20)]
    pub jmax: usize,
    /// Largest derivative order.
    #[arg(long, default_value_t = 5)]
    pub qmax: usize,
    #[arg(long, value_enum, default_value_t = DmFlag::Undefined)]
    pub interpret_dm: DmFlag,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    /// ft, fu, ff1 or ff2; all four when omitted.
    #[arg(long)]
    pub kind: Option<IntegralKind>,
    #[arg(long, requires = "k", conflicts_with = "jmax")]
    pub j: Option<usize>,
    #[arg(long, requires = "j")]
    pub k: Option<usize>,
    /// Sweep 0 <= k <= j <= jmax.
    #[arg(long)]
    pub jmax: Option<usize>,
    /// Also cross-check with Gauss-Chebyshev quadrature.
    #[arg(long)]
    pub quadrature: bool,
    #[arg(long, value_enum, default_value_t = DmFlag::Undefined)]
    pub interpret_dm: DmFlag,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub c: String,
    #[arg(long)]
    pub z: String,
}

/// What to emit, validated.
#[derive(Debug, Clone, PartialEq)]
pub enum RunConfig {
    Table {
        direction: ConnectionDirection,
        js: Vec<usize>,
        format: Format,
    },
    Verify {
        ids: BTreeSet<&'static str>,
        suites: Vec<String>,
        jmax: usize,
        qmax: usize,
        dm: DmInterpretation,
        format: Format,
        workers: usize,
    },
    Integrate {
        kinds: Vec<IntegralKind>,
        pairs: Vec<(usize, usize)>,
        quadrature: bool,
        dm: DmInterpretation,
        format: Format,
        workers: usize,
    },
    Eval(Hypergeom2F1),
}

fn check_cap(name: &str, value: usize, cap: usize) -> Result<(), CliError> {
    if value > cap {
        Err(CliError::Config(format!("{name} = {value} exceeds the cap {cap} (raise --jmax-cap)")))
    } else {
        Ok(())
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let cap = cli.jmax_cap;
        Ok(match cli.command {
            Command::Table(t) => {
                let lo = t.direction.min_j();
                let js: Vec<usize> = match (t.j, t.jmax) {
                    (Some(j), _) => {
                        check_cap("j", j, cap)?;
                        if j < lo {
                            return Err(CliError::Config(format!("{} needs j >= {lo}", t.direction)));
                        }
                        vec![j]
                    }
                    (None, Some(jmax)) => {
                        check_cap("jmax", jmax, cap)?;
                        (lo..=jmax).collect()
                    }
                    (None, None) => return Err(CliError::Config("table needs --j or --jmax".into())),
                };
                RunConfig::Table {
                    direction: t.direction,
                    js,
                    format: t.format,
                }
            }
            Command::Verify(v) => {
                check_cap("jmax", v.jmax, cap)?;
                if v.qmax == 0 {
                    return Err(CliError::Config("qmax must be at least 1".into()));
                }
                let ids = verify::resolve_suites(&v.suite)?;
                RunConfig::Verify {
                    ids,
                    suites: v.suite,
                    jmax: v.jmax,
                    qmax: v.qmax,
                    dm: v.interpret_dm.into(),
                    format: v.format,
                    workers: cli.workers,
                }
            }
            Command::Integrate(i) => {
                let pairs = match (i.j, i.k, i.jmax) {
                    (Some(j), Some(k), _) => {
                        check_cap("j", j, cap)?;
                        if j < k {
                            return Err(CliError::Config(format!("need j >= k, got j = {j}, k = {k}")));
                        }
                        vec![(j, k)]
                    }
                    (None, None, Some(jmax)) => {
                        check_cap("jmax", jmax, cap)?;
                        (0..=jmax).flat_map(|j| (0..=j).map(move |k| (j, k))).collect()
                    }
                    _ => return Err(CliError::Config("integrate needs --j and --k, or --jmax".into())),
                };
                RunConfig::Integrate {
                    kinds: i.kind.map_or_else(|| IntegralKind::ALL.to_vec(), |k| vec![k]),
                    pairs,
                    quadrature: i.quadrature,
                    dm: i.interpret_dm.into(),
                    format: i.format,
                    workers: cli.workers,
                }
            }
            Command::Eval(e) => {
                let p = |name: &str, s: &str| {
                    parse_rational(s).map_err(|err| CliError::Config(format!("--{name}: {err}")))
                };
                RunConfig::Eval(Hypergeom2F1::new(p("a", &e.a)?, p("b", &e.b)?, p("c", &e.c)?, p("z", &e.z)?))
            }
        })
    }
}

/// Emitted text plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, CliError> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(workers).build()?)
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    match config {
        RunConfig::Table { direction, js, format } => {
            let expansions = js
                .iter()
                .map(|&j| fibcheb::expand(j, *direction))
                .collect::<fibcheb::Result<Vec<_>>>()?;
            Ok(Outcome {
                exit_code: 0,
                output: output::table(&expansions, *format)?,
            })
        }
        RunConfig::Verify {
            ids,
            suites,
            jmax,
            qmax,
            dm,
            format,
            workers,
        } => {
            let reports = pool(*workers)?.install(|| verify::run_sweep(ids, *jmax, *qmax, *dm))?;
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            let header = output::VerifyHeader {
                suites: suites.clone(),
                jmax: *jmax,
                qmax: *qmax,
                interpret_dm: matches!(dm, DmInterpretation::Normalizer),
            };
            Ok(Outcome {
                exit_code: i32::from(failed),
                output: output::verify(&header, ids, &reports, *format)?,
            })
        }
        RunConfig::Integrate {
            kinds,
            pairs,
            quadrature,
            dm,
            format,
            workers,
        } => {
            let rows = pool(*workers)?.install(|| verify::run_integrals(kinds, pairs, *quadrature, *dm))?;
            let failed = rows.iter().any(|r| {
                r.outcome.report.status == Status::Fail || r.quadrature.as_ref().is_some_and(|q| q.status == Status::Fail)
            });
            Ok(Outcome {
                exit_code: i32::from(failed),
                output: output::integrals(&rows, *format)?,
            })
        }
        RunConfig::Eval(series) => Ok(Outcome {
            exit_code: 0,
            output: format!("{}\n", format_rational(&series.eval()?)),
        }),
    }
}

/// Parse arguments and run; clap usage errors keep clap's own exit code (2).
pub fn run_args<I, T>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Config(e.to_string()))?;
    run(&RunConfig::from_cli(cli)?)
}

