use std::collections::BTreeMap;
use std::path::PathBuf;

use ccwl_core::complex::{disjoint_union_many, Side};
use ccwl_core::engine::{
    refine_to_stable, side_histograms, trace_json, InitScheme, RefinementRule, Verdict,
};
use ccwl_core::NeighborhoodIndex;
use clap::Args;
use serde_json::{json, Value};

use crate::input::{lift, load_one, Lifted};
use crate::{
    parse_init, parse_rule, CliError, LiftOpts, RefineOpts, EXIT_DISTINGUISHED, EXIT_INCONCLUSIVE,
};

#[derive(Debug, Args)]
pub struct DistinguishArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    #[command(flatten)]
    pub lift: LiftOpts,
    /// Rule preset: full, reduced, no-cob, cwl, swl, wo-b, wo-c, wo-up, wo-down, hwl.
    #[arg(long, default_value = "full")]
    pub rule: String,
    #[command(flatten)]
    pub refine: RefineOpts,
}

/// Joint refinement of two lifted inputs. `scheme` of `None` seeds from the
/// inputs' labels; cells without a label get label 0.
pub fn compare(
    a: &Lifted,
    b: &Lifted,
    rule: &RefinementRule,
    scheme: Option<&InitScheme>,
) -> Result<(Verdict, Value), CliError> {
    let (union, origin) = disjoint_union_many(&[&a.complex, &b.complex]);
    let sides: Vec<Side> = origin
        .iter()
        .map(|&(k, _)| if k == 0 { Side::A } else { Side::B })
        .collect();
    let scheme = match scheme {
        Some(s) => s.clone(),
        None => {
            let labels = [&a.labels, &b.labels];
            let seeds: BTreeMap<usize, i64> = origin
                .iter()
                .enumerate()
                .map(|(cell, &(k, local))| {
                    let l = labels[k].as_ref().and_then(|m| m.get(&local)).copied();
                    (cell, l.unwrap_or(0))
                })
                .collect();
            InitScheme::Seeded(seeds)
        }
    };
    let index = NeighborhoodIndex::new(&union);
    let trace = refine_to_stable(&union, &index, rule, &scheme)?;
    let first_diff = side_histograms(&union, &trace, &sides)
        .iter()
        .position(|(x, y)| x != y);
    let verdict = match first_diff {
        Some(iteration) => Verdict::Distinguished { iteration },
        None => Verdict::Inconclusive {
            stable_at: trace.stable_at,
        },
    };
    let mut report = trace_json(&union, &trace, Some(&sides));
    let obj = report.as_object_mut().expect("trace json is an object");
    obj.insert(
        "verdict".into(),
        json!(if verdict.is_distinguished() {
            "distinguished"
        } else {
            "inconclusive"
        }),
    );
    obj.insert("iteration".into(), json!(first_diff));
    Ok((verdict, report))
}

pub fn run(args: &DistinguishArgs) -> Result<(String, i32), CliError> {
    let params = args.lift.params()?;
    let rule = parse_rule(&args.rule, args.refine.no_bridges)?;
    let scheme = parse_init(&args.refine.init)?;
    let a = lift(&load_one(&args.a, args.lift.format)?, &params)?;
    let b = lift(&load_one(&args.b, args.lift.format)?, &params)?;
    let (verdict, mut report) = compare(&a, &b, &rule, scheme.as_ref())?;
    let obj = report.as_object_mut().expect("trace json is an object");
    obj.insert("rule".into(), json!(args.rule.to_ascii_lowercase()));
    obj.insert("init".into(), json!(args.refine.init.to_ascii_lowercase()));
    obj.insert("bridges".into(), json!(!args.refine.no_bridges));
    let text = serde_json::to_string_pretty(&report).expect("json values serialize") + "\n";
    let code = if verdict.is_distinguished() {
        EXIT_DISTINGUISHED
    } else {
        EXIT_INCONCLUSIVE
    };
    Ok((text, code))
}
