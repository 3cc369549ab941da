//! Baseline refinement tests and checks that CCWL simulates them.
//!
//! `wl1` and `hwl` are standalone implementations that share no code with the
//! engine, so they can serve as independent references.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::complex::CombinatorialComplex;
use crate::engine::{
    partition_refines, refine_to_stable, Coloring, EngineError, InitScheme, PartitionRelation,
    RefinementRule, Verdict,
};
use crate::graph::{Graph, Hypergraph};
use crate::lifting::{clique_lift, hypergraph_lift, ring_lift, HyperLiftMode};
use crate::neighborhood::NeighborhoodIndex;

/// Colors per iteration; the last entry is stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wl1Result {
    pub rounds: Vec<Vec<u32>>,
}

impl Wl1Result {
    pub fn stable(&self) -> &[u32] {
        self.rounds.last().expect("at least the initial coloring")
    }

    pub fn num_classes(&self) -> usize {
        count_classes(self.stable())
    }

    pub fn stable_at(&self) -> usize {
        self.rounds.len() - 1
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

fn relabel<K: Ord + Clone>(keys: Vec<K>) -> Vec<u32> {
    let mut ids: BTreeMap<K, u32> = keys.iter().cloned().map(|k| (k, 0)).collect();
    for (i, v) in ids.values_mut().enumerate() {
        *v = i as u32;
    }
    keys.iter().map(|k| ids[k]).collect()
}

/// Classic 1-WL color refinement on nodes.
pub fn wl1(g: &Graph, labels: Option<&[i64]>) -> Wl1Result {
    let n = g.num_vertices();
    let init: Vec<i64> = match labels {
        Some(l) => l.to_vec(),
        None => vec![0; n],
    };
    let mut rounds = vec![relabel(init)];
    if n == 0 {
        return Wl1Result { rounds };
    }
    loop {
        let cur = rounds.last().unwrap();
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut m: Vec<u32> = g.neighbors(v).iter().map(|&w| cur[w]).collect();
                m.sort_unstable();
                (cur[v], m)
            })
            .collect();
        let next = relabel(keys);
        let done = count_classes(&next) == count_classes(cur);
        rounds.push(next);
        if done {
            return Wl1Result { rounds };
        }
    }
}

fn color_multiset(colors: &[u32]) -> Vec<u32> {
    let mut m = colors.to_vec();
    m.sort_unstable();
    m
}

/// 1-WL on the disjoint union; compares color multisets of the two sides.
pub fn wl1_distinguish(g: &Graph, h: &Graph) -> Verdict {
    let u = g.union(h);
    let n = g.num_vertices();
    let res = wl1(&u, None);
    for (t, round) in res.rounds.iter().enumerate() {
        if color_multiset(&round[..n]) != color_multiset(&round[n..]) {
            return Verdict::Distinguished { iteration: t };
        }
    }
    Verdict::Inconclusive {
        stable_at: res.stable_at(),
    }
}

/// Node and hyperedge colors per iteration of two-stage hypergraph WL.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwlResult {
    pub node_rounds: Vec<Vec<u32>>,
    pub edge_rounds: Vec<Vec<u32>>,
}

impl HwlResult {
    pub fn nodes(&self) -> &[u32] {
        self.node_rounds.last().unwrap()
    }

    pub fn edges(&self) -> &[u32] {
        self.edge_rounds.last().unwrap()
    }

    pub fn stable_at(&self) -> usize {
        self.node_rounds.len() - 1
    }
}

/// Two-stage hypergraph WL: hyperedges read their nodes, then nodes read
/// their hyperedges, until neither partition changes.
pub fn hwl(h: &Hypergraph) -> HwlResult {
    let edges: Vec<&[usize]> = h.hyperedges().collect();
    let mut incident = vec![Vec::new(); h.num_vertices()];
    for (i, e) in edges.iter().enumerate() {
        for &v in e.iter() {
            incident[v].push(i);
        }
    }
    let mut node_rounds = vec![vec![0u32; h.num_vertices()]];
    let mut edge_rounds = vec![vec![0u32; edges.len()]];
    if h.num_vertices() == 0 {
        return HwlResult {
            node_rounds,
            edge_rounds,
        };
    }
    loop {
        let cv = node_rounds.last().unwrap();
        let ce = edge_rounds.last().unwrap();
        let ekeys: Vec<(u32, Vec<u32>)> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                (
                    ce[i],
                    color_multiset(&e.iter().map(|&v| cv[v]).collect::<Vec<_>>()),
                )
            })
            .collect();
        let ne = relabel(ekeys);
        let vkeys: Vec<(u32, Vec<u32>)> = (0..h.num_vertices())
            .map(|v| {
                let m: Vec<u32> = incident[v].iter().map(|&e| ne[e]).collect();
                (cv[v], color_multiset(&m))
            })
            .collect();
        let nv = relabel(vkeys);
        let done =
            count_classes(&nv) == count_classes(cv) && count_classes(&ne) == count_classes(ce);
        node_rounds.push(nv);
        edge_rounds.push(ne);
        if done {
            return HwlResult {
                node_rounds,
                edge_rounds,
            };
        }
    }
}

fn hyper_union(a: &Hypergraph, b: &Hypergraph) -> Hypergraph {
    let off = a.num_vertices();
    let edges = a
        .hyperedges()
        .map(|e| e.to_vec())
        .chain(b.hyperedges().map(|e| e.iter().map(|v| v + off).collect()));
    Hypergraph::new(off + b.num_vertices(), edges).expect("disjoint union is valid")
}

/// Hypergraph WL on the disjoint union.
pub fn hwl_distinguish(a: &Hypergraph, b: &Hypergraph) -> Verdict {
    let u = hyper_union(a, b);
    let (n, m) = (a.num_vertices(), a.num_hyperedges());
    let res = hwl(&u);
    for t in 0..res.node_rounds.len() {
        let (v, e) = (&res.node_rounds[t], &res.edge_rounds[t]);
        if color_multiset(&v[..n]) != color_multiset(&v[n..])
            || color_multiset(&e[..m]) != color_multiset(&e[m..])
        {
            return Verdict::Distinguished { iteration: t };
        }
    }
    Verdict::Inconclusive {
        stable_at: res.stable_at(),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimulationError {
    #[error("incompatible lift: {0}")]
    IncompatibleLift(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Structure handed to [`simulate_check`].
#[derive(Clone, Debug)]
pub enum SimInput {
    Graph(Graph),
    Hypergraph(Hypergraph),
    Complex(CombinatorialComplex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lift {
    /// Use a complex input as is.
    Identity,
    Clique {
        max_dim: usize,
    },
    Ring {
        max_ring: usize,
    },
    Hyper(HyperLiftMode),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseTest {
    Wl1,
    Hwl,
    Swl,
    Cwl,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimulationReport {
    pub base_classes: usize,
    pub ccwl_classes: usize,
    /// Relation of the restricted CCWL partition to the base partition.
    pub relation: PartitionRelation,
    /// The CCWL partition refines or equals the base partition.
    pub recoverable: bool,
}

fn as_coloring(colors: Vec<u32>) -> Coloring {
    let num_colors = colors
        .iter()
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    Coloring { colors, num_colors }
}

/// Runs `base` on the input and CCWL with `rule` on its lift, then checks
/// that the CCWL stable partition, restricted to the cells the base test
/// colors, refines or equals the base partition.
pub fn simulate_check(
    input: &SimInput,
    lift: Lift,
    base: BaseTest,
    rule: &RefinementRule,
    scheme: &InitScheme,
) -> Result<SimulationReport, SimulationError> {
    let incompatible = |msg: &str| Err(SimulationError::IncompatibleLift(msg.to_string()));
    let cc = match (input, lift) {
        (SimInput::Graph(g), Lift::Clique { max_dim }) => clique_lift(g, max_dim),
        (SimInput::Graph(g), Lift::Ring { max_ring }) => ring_lift(g, max_ring),
        (SimInput::Hypergraph(h), Lift::Hyper(mode)) => hypergraph_lift(h, mode),
        (SimInput::Complex(c), Lift::Identity) => c.clone(),
        _ => return incompatible("lift does not accept this input kind"),
    };
    let index = NeighborhoodIndex::new(&cc);
    let ccwl = refine_to_stable(&cc, &index, rule, scheme)?;
    let stable = ccwl.stable();
    let (base_col, restricted) = match (base, input) {
        (BaseTest::Wl1, SimInput::Graph(g)) => {
            let w = wl1(g, None);
            let nodes = (0..g.num_vertices())
                .map(|v| stable.colors[cc.vertex_cell(v)])
                .collect();
            (as_coloring(w.stable().to_vec()), as_coloring(nodes))
        }
        (BaseTest::Hwl, SimInput::Hypergraph(h)) => {
            let w = hwl(h);
            let off = count_classes(w.nodes()) as u32;
            let mut base_colors = w.nodes().to_vec();
            base_colors.extend(w.edges().iter().map(|&c| c + off));
            let mut ours: Vec<u32> = (0..h.num_vertices())
                .map(|v| stable.colors[cc.vertex_cell(v)])
                .collect();
            for e in h.hyperedges() {
                let cell = cc.find_cell(e).expect("every hyperedge is a cell");
                ours.push(stable.colors[cell]);
            }
            (as_coloring(base_colors), as_coloring(ours))
        }
        (BaseTest::Swl | BaseTest::Cwl, _) => {
            let preset = if base == BaseTest::Swl {
                RefinementRule::SWL
            } else {
                RefinementRule::CWL
            };
            let b = refine_to_stable(&cc, &index, &preset, scheme)?;
            (b.stable().clone(), stable.clone())
        }
        _ => return incompatible("base test does not apply to this input"),
    };
    let relation = partition_refines(&restricted, &base_col)?;
    Ok(SimulationReport {
        base_classes: base_col.num_colors,
        ccwl_classes: restricted.num_colors,
        relation,
        recoverable: matches!(
            relation,
            PartitionRelation::Equal | PartitionRelation::Refines
        ),
    })
}
