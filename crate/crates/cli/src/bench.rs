use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use ccwl_core::engine::{refine_family, InitScheme, RefinementRule};
use ccwl_core::graph::Graph;
use ccwl_core::io::load_sr_family;
use ccwl_core::lifting::{clique_lift, ring_lift};
use ccwl_core::CombinatorialComplex;
use clap::Args;
use rayon::prelude::*;

use crate::input::{family_files, LiftMethod, LiftParams};
use crate::{parse_rule, require_unseeded, with_thread_pool, CliError, RefineOpts};

#[derive(Debug, Args)]
pub struct SrBenchArgs {
    /// graph6 family files or directories of them.
    #[arg(required = true)]
    pub families: Vec<PathBuf>,
    /// ring or clique.
    #[arg(long, value_enum, default_value = "ring")]
    pub lift: LiftMethod,
    /// Ring sizes to sweep, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "6")]
    pub max_ring: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    /// Rule presets, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "full")]
    pub rule: Vec<String>,
    #[command(flatten)]
    pub refine: RefineOpts,
    /// Keep only the first N unordered pairs in lexicographic order.
    #[arg(long)]
    pub max_pairs: Option<usize>,
    /// Keep only the first N graphs of each family.
    #[arg(long)]
    pub max_graphs: Option<usize>,
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: String,
    pub ring: Option<usize>,
    pub rule: String,
    pub pairs: usize,
    pub failures: usize,
    pub wall_ms: u128,
}

impl BenchRow {
    /// Fraction of inconclusive pairs; NaN without pairs.
    pub fn rate(&self) -> f64 {
        if self.pairs == 0 {
            f64::NAN
        } else {
            self.failures as f64 / self.pairs as f64
        }
    }
}

pub const HEADER: &str = "family,ring,rule,pairs,failures,rate,wall_ms";

pub fn format_rate(rate: f64) -> String {
    if rate.is_nan() {
        "NaN".into()
    } else {
        format!("{rate:.4}")
    }
}

/// The first `max_pairs` pairs (i < j) of `n` graphs in lexicographic order.
pub fn select_pairs(n: usize, max_pairs: Option<usize>) -> Vec<(usize, usize)> {
    let cap = max_pairs.unwrap_or(usize::MAX);
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .take(cap)
        .collect()
}

/// Counts inconclusive pairs among `pairs` for the lifted family.
pub fn count_failures(
    complexes: &[CombinatorialComplex],
    pairs: &[(usize, usize)],
    rule: &RefinementRule,
    scheme: &InitScheme,
) -> Result<usize, CliError> {
    let needed = pairs.iter().map(|&(_, j)| j + 1).max().unwrap_or(0);
    let refs: Vec<&CombinatorialComplex> = complexes[..needed].iter().collect();
    let fam = refine_family(&refs, rule, scheme)?;
    Ok(pairs
        .iter()
        .filter(|&&(i, j)| !fam.verdict(i, j).is_distinguished())
        .count())
}

fn lift_all(graphs: &[Graph], lift: &LiftParams) -> Vec<CombinatorialComplex> {
    graphs
        .par_iter()
        .map(|g| match lift.method {
            LiftMethod::Clique => clique_lift(g, lift.max_dim),
            _ => ring_lift(g, lift.max_ring),
        })
        .collect()
}

pub fn run(args: &SrBenchArgs) -> Result<(String, i32), CliError> {
    if !matches!(args.lift, LiftMethod::Ring | LiftMethod::Clique) {
        return Err(CliError::Usage(
            "sr-bench supports --lift ring or clique".into(),
        ));
    }
    let scheme = require_unseeded(&args.refine.init)?;
    let rules = args
        .rule
        .iter()
        .map(|r| {
            Ok((
                r.to_ascii_lowercase(),
                parse_rule(r, args.refine.no_bridges)?,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let rings: Vec<Option<usize>> = match args.lift {
        LiftMethod::Ring => args.max_ring.iter().map(|&k| Some(k)).collect(),
        _ => vec![None],
    };
    let mut configs = Vec::new();
    for &ring in &rings {
        let params = LiftParams {
            method: args.lift,
            max_ring: ring.unwrap_or(3),
            max_dim: args.max_dim,
        };
        params.validate()?;
        for (name, rule) in &rules {
            configs.push((ring, params, name.clone(), *rule));
        }
    }
    let mut families = Vec::new();
    for path in family_files(&args.families)? {
        let mut graphs = load_sr_family(&path).map_err(|e| match e {
            ccwl_core::io::FamilyError::Io { path, source } => CliError::Io { path, source },
            other => CliError::Input {
                path: path.display().to_string(),
                msg: other.to_string(),
            },
        })?;
        if let Some(m) = args.max_graphs {
            graphs.truncate(m);
        }
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        families.push((name, graphs));
    }
    let rows = with_thread_pool(|| {
        let mut rows = Vec::new();
        for (name, graphs) in &families {
            let pairs = select_pairs(graphs.len(), args.max_pairs);
            let part: Vec<Result<BenchRow, CliError>> = configs
                .par_iter()
                .map(|(ring, params, rule_name, rule)| {
                    let start = Instant::now();
                    let complexes = lift_all(graphs, params);
                    let failures = count_failures(&complexes, &pairs, rule, &scheme)?;
                    Ok(BenchRow {
                        family: name.clone(),
                        ring: *ring,
                        rule: rule_name.clone(),
                        pairs: pairs.len(),
                        failures,
                        wall_ms: start.elapsed().as_millis(),
                    })
                })
                .collect();
            rows.extend(part);
        }
        rows.into_iter().collect::<Result<Vec<_>, CliError>>()
    })??;
    let mut out = String::new();
    let cap = |o: Option<usize>| o.map_or("all".to_string(), |v| v.to_string());
    let _ = writeln!(
        out,
        "# sr-bench lift={} init={} bridges={} max_graphs={} max_pairs={} pairs=lexicographic-prefix",
        if args.lift == LiftMethod::Ring { "ring" } else { "clique" },
        args.refine.init.to_ascii_lowercase(),
        if args.refine.no_bridges { "off" } else { "on" },
        cap(args.max_graphs),
        cap(args.max_pairs),
    );
    out.push_str(HEADER);
    out.push('\n');
    for r in &rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.family,
            r.ring.map_or("-".to_string(), |k| k.to_string()),
            r.rule,
            r.pairs,
            r.failures,
            format_rate(r.rate()),
            r.wall_ms
        );
    }
    Ok((out, 0))
}
