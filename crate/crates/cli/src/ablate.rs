use std::fmt::Write as _;
use std::path::PathBuf;

use ccwl_core::engine::{refine_family, refine_to_stable};
use ccwl_core::{CombinatorialComplex, NeighborhoodIndex};
use clap::Args;
use rayon::prelude::*;

use crate::bench::{format_rate, select_pairs};
use crate::input::{lift, load_all, Format, LiftMethod, LiftParams, Structure};
use crate::{parse_rule, require_unseeded, with_thread_pool, CliError, RefineOpts};

#[derive(Debug, Args)]
pub struct AblateArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, value_enum, default_value = "auto")]
    pub lift: LiftMethod,
    /// Ring sizes to sweep, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "3,4,5,6")]
    pub max_ring: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    /// Rule presets, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "full,reduced,wo-b,wo-c,wo-up,wo-down"
    )]
    pub rules: Vec<String>,
    #[command(flatten)]
    pub refine: RefineOpts,
}

pub const HEADER: &str = "ring,rule,classes,stable_at,pairs,distinguished,rate";

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn run(args: &AblateArgs) -> Result<(String, i32), CliError> {
    let scheme = require_unseeded(&args.refine.init)?;
    let rules = args
        .rules
        .iter()
        .map(|r| {
            Ok((
                r.to_ascii_lowercase(),
                parse_rule(r, args.refine.no_bridges)?,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut structures: Vec<Structure> = Vec::new();
    for p in &args.inputs {
        structures.extend(load_all(p, args.format)?);
    }
    // Only sweep ring sizes when some input is ring lifted.
    let probe = LiftParams {
        method: args.lift,
        max_ring: 3,
        max_dim: args.max_dim,
    };
    probe.validate()?;
    let mut uses_ring = false;
    for s in &structures {
        uses_ring |= lift(s, &probe)?.ring;
    }
    let rings: Vec<Option<usize>> = if uses_ring {
        args.max_ring.iter().map(|&k| Some(k)).collect()
    } else {
        vec![None]
    };
    let mut lifted: Vec<(Option<usize>, Vec<CombinatorialComplex>)> = Vec::new();
    for &ring in &rings {
        let params = LiftParams {
            method: args.lift,
            max_ring: ring.unwrap_or(3),
            max_dim: args.max_dim,
        };
        params.validate()?;
        let ccs = structures
            .iter()
            .map(|s| lift(s, &params).map(|l| l.complex))
            .collect::<Result<Vec<_>, _>>()?;
        lifted.push((ring, ccs));
    }
    let pairs = select_pairs(structures.len(), None);
    let configs: Vec<(usize, usize)> = (0..lifted.len())
        .flat_map(|i| (0..rules.len()).map(move |j| (i, j)))
        .collect();
    let rows = with_thread_pool(|| {
        configs
            .par_iter()
            .map(|&(i, j)| {
                let (ring, ccs) = &lifted[i];
                let (name, rule) = &rules[j];
                let mut classes = Vec::new();
                let mut stable = Vec::new();
                for cc in ccs {
                    let t = refine_to_stable(cc, &NeighborhoodIndex::new(cc), rule, &scheme)?;
                    classes.push(t.stable().num_colors);
                    stable.push(t.stable_at);
                }
                let (rate, distinguished) = if pairs.is_empty() {
                    (String::new(), String::new())
                } else {
                    let refs: Vec<&CombinatorialComplex> = ccs.iter().collect();
                    let fam = refine_family(&refs, rule, &scheme)?;
                    let d = pairs
                        .iter()
                        .filter(|&&(a, b)| fam.verdict(a, b).is_distinguished())
                        .count();
                    (format_rate(d as f64 / pairs.len() as f64), d.to_string())
                };
                Ok(format!(
                    "{},{},{},{},{},{},{}",
                    ring.map_or("-".to_string(), |k| k.to_string()),
                    name,
                    join(&classes),
                    join(&stable),
                    pairs.len(),
                    distinguished,
                    rate
                ))
            })
            .collect::<Result<Vec<String>, CliError>>()
    })??;
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    for r in rows {
        let _ = writeln!(out, "{r}");
    }
    Ok((out, 0))
}
