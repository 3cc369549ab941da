use std::fmt::Write as _;

use ccwl_core::baselines::{hwl_distinguish, wl1_distinguish};
use ccwl_core::engine::{distinguish, InitScheme, RefinementRule, Verdict};
use ccwl_core::fixtures::{bridged_pentagons, c8, face_pair, glued_hexagons, k33, prism, two_c4};
use ccwl_core::graph::{Graph, Hypergraph};
use ccwl_core::lifting::{clique_lift, ring_lift};
use clap::Args;

use crate::CliError;

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Comma-separated fixture names; an empty list runs nothing.
    #[arg(long)]
    pub fixtures: Option<String>,
}

pub const FIXTURES: [&str; 4] = [
    "c8-vs-2c4",
    "glued-c6-vs-bridged-c5",
    "face-pair",
    "prism-vs-k33",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    /// Baseline tests that are expected to fail, with their verdicts.
    pub baselines: Vec<(String, Verdict)>,
    pub ccwl: String,
    pub ccwl_verdict: Verdict,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.baselines.iter().all(|(_, v)| !v.is_distinguished())
            && self.ccwl_verdict.is_distinguished()
    }
}

fn swl(a: &Graph, b: &Graph) -> Result<Verdict, CliError> {
    Ok(distinguish(
        &clique_lift(a, 1),
        &clique_lift(b, 1),
        &RefinementRule::SWL,
        &InitScheme::RankOnly,
    )?)
}

fn graph_case(
    name: &str,
    a: &Graph,
    b: &Graph,
    with_swl: bool,
    max_ring: usize,
) -> Result<CaseResult, CliError> {
    let mut baselines = vec![("wl1".to_string(), wl1_distinguish(a, b))];
    if with_swl {
        baselines.push(("swl".to_string(), swl(a, b)?));
    }
    let v = distinguish(
        &ring_lift(a, max_ring),
        &ring_lift(b, max_ring),
        &RefinementRule::FULL,
        &InitScheme::RankDegree,
    )?;
    Ok(CaseResult {
        name: name.into(),
        baselines,
        ccwl: format!("ring{max_ring}/full"),
        ccwl_verdict: v,
    })
}

pub fn run_case(name: &str) -> Result<CaseResult, CliError> {
    match name {
        "c8-vs-2c4" => graph_case(name, &c8(), &two_c4(), true, 8),
        "glued-c6-vs-bridged-c5" => {
            graph_case(name, &glued_hexagons(), &bridged_pentagons(), true, 6)
        }
        "face-pair" => {
            let (a, b) = face_pair();
            let base = distinguish(&a, &b, &RefinementRule::CWL, &InitScheme::RankOnly)?;
            let v = distinguish(&a, &b, &RefinementRule::FULL, &InitScheme::RankOnly)?;
            Ok(CaseResult {
                name: name.into(),
                baselines: vec![("cwl".into(), base)],
                ccwl: "identity/full".into(),
                ccwl_verdict: v,
            })
        }
        "prism-vs-k33" => {
            let (a, b) = (prism(), k33());
            let h = hwl_distinguish(&Hypergraph::from_graph(&a), &Hypergraph::from_graph(&b));
            let v = distinguish(
                &clique_lift(&a, 2),
                &clique_lift(&b, 2),
                &RefinementRule::REDUCED,
                &InitScheme::RankDegree,
            )?;
            Ok(CaseResult {
                name: name.into(),
                baselines: vec![("wl1".into(), wl1_distinguish(&a, &b)), ("hwl".into(), h)],
                ccwl: "clique2/reduced".into(),
                ccwl_verdict: v,
            })
        }
        other => Err(CliError::Usage(format!(
            "unknown fixture {other:?}; known: {}",
            FIXTURES.join(", ")
        ))),
    }
}

pub fn verdict_label(v: &Verdict) -> String {
    match v {
        Verdict::Distinguished { iteration } => format!("distinguished@{iteration}"),
        Verdict::Inconclusive { .. } => "inconclusive".into(),
    }
}

pub fn run_suite(names: &[&str]) -> Result<Vec<CaseResult>, CliError> {
    names.iter().map(|n| run_case(n)).collect()
}

pub fn render(results: &[CaseResult]) -> String {
    let mut out = String::from("fixture,baselines,baseline_verdicts,ccwl,ccwl_verdict,result\n");
    for r in results {
        let names: Vec<&str> = r.baselines.iter().map(|(n, _)| n.as_str()).collect();
        let verdicts: Vec<String> = r.baselines.iter().map(|(_, v)| verdict_label(v)).collect();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.name,
            names.join("+"),
            verdicts.join("+"),
            r.ccwl,
            verdict_label(&r.ccwl_verdict),
            if r.passed() { "PASS" } else { "FAIL" }
        );
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "# {passed}/{} passed", results.len());
    out
}

pub fn run(args: &SuiteArgs) -> Result<(String, i32), CliError> {
    let names: Vec<&str> = match &args.fixtures {
        None => FIXTURES.to_vec(),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect(),
    };
    let results = run_suite(&names)?;
    let code = if results.iter().all(CaseResult::passed) {
        0
    } else {
        1
    };
    Ok((render(&results), code))
}
