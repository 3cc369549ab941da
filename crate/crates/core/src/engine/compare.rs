use std::collections::HashMap;

use serde::Serialize;

use super::{refine_to_stable, Coloring, EngineError, InitScheme, RefinementRule};
use crate::complex::CombinatorialComplex;
use crate::neighborhood::NeighborhoodIndex;

/// Relation between two partitions of the same cell set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionRelation {
    Equal,
    /// The left partition is strictly finer.
    Refines,
    /// The left partition is strictly coarser.
    RefinedBy,
    Incomparable,
}

fn is_finer(c: &Coloring, d: &Coloring) -> bool {
    let mut map: HashMap<u32, u32> = HashMap::new();
    c.colors
        .iter()
        .zip(&d.colors)
        .all(|(&x, &y)| *map.entry(x).or_insert(y) == y)
}

/// Compares the partitions induced by `c` and `d`; raw ids are ignored.
pub fn partition_refines(c: &Coloring, d: &Coloring) -> Result<PartitionRelation, EngineError> {
    if c.len() != d.len() {
        return Err(EngineError::SizeMismatch(c.len(), d.len()));
    }
    Ok(match (is_finer(c, d), is_finer(d, c)) {
        (true, true) => PartitionRelation::Equal,
        (true, false) => PartitionRelation::Refines,
        (false, true) => PartitionRelation::RefinedBy,
        (false, false) => PartitionRelation::Incomparable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IterationReport {
    pub iteration: usize,
    pub classes_a: usize,
    pub classes_b: usize,
    pub relation: PartitionRelation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleComparison {
    /// Relation of rule A's stable partition to rule B's.
    pub relation: PartitionRelation,
    pub stable_at_a: usize,
    pub stable_at_b: usize,
    pub per_iteration: Vec<IterationReport>,
}

/// Runs both rules to stability and compares partitions. Past its stable
/// point a trace is extended with its stable coloring.
pub fn compare_rules(
    cc: &CombinatorialComplex,
    rule_a: &RefinementRule,
    rule_b: &RefinementRule,
    scheme: &InitScheme,
) -> Result<RuleComparison, EngineError> {
    let index = NeighborhoodIndex::new(cc);
    let ta = refine_to_stable(cc, &index, rule_a, scheme)?;
    let tb = refine_to_stable(cc, &index, rule_b, scheme)?;
    let steps = ta.colorings.len().max(tb.colorings.len());
    let mut per_iteration = Vec::with_capacity(steps);
    for t in 0..steps {
        let ca = &ta.colorings[t.min(ta.stable_at)];
        let cb = &tb.colorings[t.min(tb.stable_at)];
        per_iteration.push(IterationReport {
            iteration: t,
            classes_a: ca.num_colors,
            classes_b: cb.num_colors,
            relation: partition_refines(ca, cb)?,
        });
    }
    Ok(RuleComparison {
        relation: partition_refines(ta.stable(), tb.stable())?,
        stable_at_a: ta.stable_at,
        stable_at_b: tb.stable_at,
        per_iteration,
    })
}
