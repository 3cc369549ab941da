use std::path::PathBuf;

use ccwl_core::io::write_cc_document;
use clap::{Args, ValueEnum};

use crate::input::{lift, load_one, Format, LiftMethod, LiftParams};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Clique,
    Ring,
    HyperFlat,
    HyperRanked,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long, default_value_t = 6)]
    pub max_ring: usize,
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

pub fn run(args: &LiftArgs) -> Result<(String, i32), CliError> {
    let method = match args.method {
        Method::Clique => LiftMethod::Clique,
        Method::Ring => LiftMethod::Ring,
        Method::HyperFlat => LiftMethod::HyperFlat,
        Method::HyperRanked => LiftMethod::HyperRanked,
    };
    let params = LiftParams {
        method,
        max_ring: args.max_ring,
        max_dim: args.max_dim,
    };
    params.validate()?;
    let lifted = lift(&load_one(&args.input, args.format)?, &params)?;
    let text = write_cc_document(&lifted.complex, None);
    match &args.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok((String::new(), 0))
        }
        None => Ok((text, 0)),
    }
}
