//! Command-line harness: pair distinguishing, SR benchmarks, lifts, rule
//! ablations and the built-in counterexample suite.

pub mod ablate;
pub mod bench;
pub mod distinguish;
pub mod input;
pub mod lift;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;

use ccwl_core::engine::{EngineError, InitScheme, RefinementRule};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use input::{Format, LiftMethod, LiftParams};

pub const EXIT_DISTINGUISHED: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 10;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {msg}")]
    Input { path: String, msg: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl CliError {
    /// 2 for usage and file access problems, 1 for bad input data.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Input { .. } | CliError::Engine(_) => EXIT_INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ccwl",
    version,
    about = "Color refinement on combinatorial complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether two inputs are told apart; exit 0 if so, 10 if not.
    Distinguish(distinguish::DistinguishArgs),
    /// Failure rates over all pairs of graph6 families.
    SrBench(bench::SrBenchArgs),
    /// Built-in pairs that a baseline test cannot separate.
    Counterexamples(suite::SuiteArgs),
    /// Class counts and pair rates for a sweep of rules and ring sizes.
    Ablate(ablate::AblateArgs),
    /// Lift a graph or hypergraph to a cc-v1 complex.
    Lift(lift::LiftArgs),
}

/// Options shared by every command that refines.
#[derive(Debug, Clone, Args)]
pub struct RefineOpts {
    /// Initial colors: rank-only, rank-degree, or seeded (cc-v1 labels).
    #[arg(long, default_value = "rank-degree")]
    pub init: String,
    /// Do not include the shared cell's color in adjacency messages.
    #[arg(long)]
    pub no_bridges: bool,
}

/// Options that select and parameterise a lift.
#[derive(Debug, Clone, Args)]
pub struct LiftOpts {
    #[arg(long, value_enum, default_value = "auto")]
    pub lift: LiftMethod,
    /// Longest ring used by the ring lift.
    #[arg(long, default_value_t = 6)]
    pub max_ring: usize,
    /// Highest rank produced by the clique lift.
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    /// Input format; inferred from the extension when absent.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

impl LiftOpts {
    pub fn params(&self) -> Result<LiftParams, CliError> {
        let p = LiftParams {
            method: self.lift,
            max_ring: self.max_ring,
            max_dim: self.max_dim,
        };
        p.validate()?;
        Ok(p)
    }
}

/// The init scheme to use, or `None` for seeded init.
pub fn parse_init(name: &str) -> Result<Option<InitScheme>, CliError> {
    if name == "seeded" {
        return Ok(None);
    }
    InitScheme::from_name(name)
        .map(Some)
        .ok_or_else(|| CliError::Usage(format!("unknown init scheme {name:?}")))
}

pub fn parse_rule(name: &str, no_bridges: bool) -> Result<RefinementRule, CliError> {
    let rule = RefinementRule::from_name(name).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(if no_bridges {
        rule.without_bridges()
    } else {
        rule
    })
}

pub fn require_unseeded(init: &str) -> Result<InitScheme, CliError> {
    parse_init(init)?
        .ok_or_else(|| CliError::Usage("seeded init is only available for distinguish".into()))
}

/// Runs `f` on a rayon pool sized by `CCWL_THREADS` (0 or unset = automatic).
pub fn with_thread_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let threads = match std::env::var("CCWL_THREADS") {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("CCWL_THREADS must be a number, got {v:?}")))?,
        _ => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(pool.install(f))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

/// Parses `args` (including the program name) and runs the command, writing
/// reports to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Distinguish(a) => distinguish::run(a),
        Command::SrBench(a) => bench::run(a),
        Command::Counterexamples(a) => suite::run(a),
        Command::Ablate(a) => ablate::run(a),
        Command::Lift(a) => lift::run(a),
    };
    match result.and_then(|(text, code)| write_out(out, &text).map(|_| code)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
