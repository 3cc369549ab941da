//! Color refinement over combinatorial complexes.

mod compare;
mod export;
mod refine;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

pub use compare::{
    compare_rules, partition_refines, IterationReport, PartitionRelation, RuleComparison,
};
pub use export::trace_json;
pub use refine::{
    distinguish, histogram, initial_coloring, joint_refine, refine_family, refine_family_seeded,
    refine_step, refine_to_stable, side_histograms, FamilyResult, TokenDictionary,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("no seed label for cell {0}")]
    MissingSeedLabel(usize),
    #[error("colorings cover {0} and {1} cells")]
    SizeMismatch(usize, usize),
    #[error("rule enables no neighborhood")]
    EmptyRule,
    #[error("unknown rule preset {0:?}")]
    UnknownPreset(String),
}

/// Which neighborhoods feed the relabeling token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RefinementRule {
    pub use_boundary: bool,
    pub use_coboundary: bool,
    pub use_lower: bool,
    pub use_upper: bool,
    /// Alternate rank-0 and rank>=1 half-steps over vertex incidence.
    pub two_stage_hypergraph: bool,
    /// Include bridge colors in adjacency tokens.
    pub bridge_colors: bool,
}

const fn rule(b: bool, c: bool, lo: bool, up: bool) -> RefinementRule {
    RefinementRule {
        use_boundary: b,
        use_coboundary: c,
        use_lower: lo,
        use_upper: up,
        two_stage_hypergraph: false,
        bridge_colors: true,
    }
}

impl RefinementRule {
    pub const FULL: Self = rule(true, true, true, true);
    pub const REDUCED: Self = rule(false, false, true, true);
    pub const NO_COB: Self = rule(true, false, true, true);
    pub const CWL: Self = rule(true, false, false, true);
    pub const SWL: Self = rule(true, true, false, false);
    pub const WITHOUT_B: Self = rule(false, true, true, true);
    pub const WITHOUT_C: Self = Self::NO_COB;
    pub const WITHOUT_UP: Self = rule(true, true, true, false);
    pub const WITHOUT_DOWN: Self = rule(true, true, false, true);
    pub const HWL: Self = RefinementRule {
        use_boundary: false,
        use_coboundary: false,
        use_lower: false,
        use_upper: false,
        two_stage_hypergraph: true,
        bridge_colors: true,
    };

    /// Named presets accepted by [`RefinementRule::from_name`].
    pub const PRESETS: [(&'static str, RefinementRule); 10] = [
        ("full", Self::FULL),
        ("reduced", Self::REDUCED),
        ("no-cob", Self::NO_COB),
        ("cwl", Self::CWL),
        ("swl", Self::SWL),
        ("wo-b", Self::WITHOUT_B),
        ("wo-c", Self::WITHOUT_C),
        ("wo-up", Self::WITHOUT_UP),
        ("wo-down", Self::WITHOUT_DOWN),
        ("hwl", Self::HWL),
    ];

    pub fn from_name(name: &str) -> Result<Self, EngineError> {
        let key = name.to_ascii_lowercase().replace('_', "-");
        Self::PRESETS
            .iter()
            .find(|(n, _)| *n == key)
            .map(|(_, r)| *r)
            .ok_or_else(|| EngineError::UnknownPreset(name.to_string()))
    }

    pub fn without_bridges(mut self) -> Self {
        self.bridge_colors = false;
        self
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if self.two_stage_hypergraph
            || self.use_boundary
            || self.use_coboundary
            || self.use_lower
            || self.use_upper
        {
            Ok(())
        } else {
            Err(EngineError::EmptyRule)
        }
    }
}

/// How a complex's cells are colored before the first refinement step.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum InitScheme {
    RankOnly,
    /// Rank plus boundary and coboundary sizes.
    #[default]
    RankDegree,
    /// Rank plus a label for every cell.
    Seeded(BTreeMap<usize, i64>),
}

impl InitScheme {
    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().replace('_', "-").as_str() {
            "rank-only" | "rank" => Some(InitScheme::RankOnly),
            "rank-degree" | "degree" => Some(InitScheme::RankDegree),
            _ => None,
        }
    }
}

/// Dense color ids, one per cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn color_of(&self, cell: usize) -> u32 {
        self.colors[cell]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinementTrace {
    /// Colorings for t = 0..=stable_at.
    pub colorings: Vec<Coloring>,
    pub stable_at: usize,
    pub dictionary_size: usize,
}

impl RefinementTrace {
    pub fn stable(&self) -> &Coloring {
        self.colorings
            .last()
            .expect("trace holds the initial coloring")
    }

    pub fn class_counts(&self) -> Vec<usize> {
        self.colorings.iter().map(|c| c.num_colors).collect()
    }
}

/// Multiplicity of each `(rank, color)` pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorHistogram {
    pub counts: BTreeMap<(usize, u32), usize>,
}

impl ColorHistogram {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    /// Histograms first differ at this iteration.
    Distinguished { iteration: usize },
    /// Histograms agree up to and including the stable iteration.
    Inconclusive { stable_at: usize },
}

impl Verdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, Verdict::Distinguished { .. })
    }
}
