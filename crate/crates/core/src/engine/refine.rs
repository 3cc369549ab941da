use std::collections::{BTreeMap, HashMap};

use super::{
    ColorHistogram, Coloring, EngineError, InitScheme, RefinementRule, RefinementTrace, Verdict,
};
use crate::complex::{disjoint_union, disjoint_union_many, CombinatorialComplex, Side};
use crate::neighborhood::NeighborhoodIndex;

/// Relabels tokens to dense ids.
///
/// Ids follow the sorted order of the distinct tokens of a round, so they are
/// canonical: they depend only on the multiset of tokens and not on cell order
/// or on earlier rounds. A fresh id space is used every round; `size` counts
/// distinct tokens over all rounds.
#[derive(Clone, Debug, Default)]
pub struct TokenDictionary {
    size: usize,
}

impl TokenDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn intern(&mut self, tokens: &FlatTokens) -> Coloring {
        let n = tokens.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by(|&a, &b| tokens.get(a).cmp(tokens.get(b)));
        let mut colors = vec![0u32; n];
        let mut next = 0u32;
        for (k, &cell) in order.iter().enumerate() {
            if k > 0 && tokens.get(order[k - 1]) != tokens.get(cell) {
                next += 1;
            }
            colors[cell] = next;
        }
        let num_colors = if n == 0 { 0 } else { next as usize + 1 };
        self.size += num_colors;
        Coloring { colors, num_colors }
    }
}

/// Variable-length tokens stored back to back.
struct FlatTokens {
    data: Vec<u32>,
    starts: Vec<usize>,
}

impl FlatTokens {
    fn with_capacity(cells: usize) -> Self {
        let mut starts = Vec::with_capacity(cells + 1);
        starts.push(0);
        FlatTokens {
            data: Vec::new(),
            starts,
        }
    }

    fn len(&self) -> usize {
        self.starts.len() - 1
    }

    fn get(&self, i: usize) -> &[u32] {
        &self.data[self.starts[i]..self.starts[i + 1]]
    }

    fn finish_token(&mut self) {
        self.starts.push(self.data.len());
    }

    fn push_multiset(&mut self, scratch: &mut Vec<u32>) {
        scratch.sort_unstable();
        self.data.push(scratch.len() as u32);
        self.data.extend_from_slice(scratch);
        scratch.clear();
    }

    fn push_pairs(&mut self, scratch: &mut Vec<u64>) {
        scratch.sort_unstable();
        self.data.push(scratch.len() as u32);
        for &p in scratch.iter() {
            self.data.push((p >> 32) as u32);
            self.data.push(p as u32);
        }
        scratch.clear();
    }
}

fn dense_from_keys<K: Ord + Clone>(keys: &[K]) -> Coloring {
    let distinct: BTreeMap<K, u32> = keys.iter().cloned().map(|k| (k, 0)).collect();
    let ids: BTreeMap<K, u32> = distinct
        .into_keys()
        .enumerate()
        .map(|(i, k)| (k, i as u32))
        .collect();
    Coloring {
        colors: keys.iter().map(|k| ids[k]).collect(),
        num_colors: ids.len(),
    }
}

pub fn initial_coloring(
    cc: &CombinatorialComplex,
    index: &NeighborhoodIndex,
    scheme: &InitScheme,
) -> Result<Coloring, EngineError> {
    let n = cc.num_cells();
    let keys: Vec<(usize, i64, i64)> = match scheme {
        InitScheme::RankOnly => (0..n).map(|c| (cc.rank_of(c), 0, 0)).collect(),
        InitScheme::RankDegree => (0..n)
            .map(|c| {
                (
                    cc.rank_of(c),
                    index.boundary(c).len() as i64,
                    index.coboundary(c).len() as i64,
                )
            })
            .collect(),
        InitScheme::Seeded(labels) => (0..n)
            .map(|c| {
                labels
                    .get(&c)
                    .map(|&l| (cc.rank_of(c), l, 0))
                    .ok_or(EngineError::MissingSeedLabel(c))
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(dense_from_keys(&keys))
}

/// One refinement round.
pub fn refine_step(
    cc: &CombinatorialComplex,
    index: &NeighborhoodIndex,
    coloring: &Coloring,
    rule: &RefinementRule,
    dict: &mut TokenDictionary,
) -> Coloring {
    if rule.two_stage_hypergraph {
        let half = two_stage_half(cc, coloring, true, dict);
        return two_stage_half(cc, &half, false, dict);
    }
    let c = &coloring.colors;
    let n = cc.num_cells();
    let mut tokens = FlatTokens::with_capacity(n);
    let mut singles: Vec<u32> = Vec::new();
    let mut pairs: Vec<u64> = Vec::new();
    let pair = |t: usize, d: usize| ((c[t] as u64) << 32) | c[d] as u64;
    for cell in 0..n {
        tokens.data.push(c[cell]);
        if rule.use_boundary {
            singles.extend(index.boundary(cell).iter().map(|&t| c[t]));
            tokens.push_multiset(&mut singles);
        }
        if rule.use_coboundary {
            singles.extend(index.coboundary(cell).iter().map(|&t| c[t]));
            tokens.push_multiset(&mut singles);
        }
        if rule.use_lower {
            if rule.bridge_colors {
                pairs.extend(index.lower_adj(cell).map(|(t, d)| pair(t, d)));
                tokens.push_pairs(&mut pairs);
            } else {
                singles.extend(index.lower_adj(cell).map(|(t, _)| c[t]));
                tokens.push_multiset(&mut singles);
            }
        }
        if rule.use_upper {
            if rule.bridge_colors {
                pairs.extend(index.upper_adj(cell).map(|(t, d)| pair(t, d)));
                tokens.push_pairs(&mut pairs);
            } else {
                singles.extend(index.upper_adj(cell).map(|(t, _)| c[t]));
                tokens.push_multiset(&mut singles);
            }
        }
        tokens.finish_token();
    }
    dict.intern(&tokens)
}

/// Hyperedge half (`edges == true`): rank>=1 cells read the 0-cells they
/// contain. Node half: 0-cells read the higher cells containing them.
fn two_stage_half(
    cc: &CombinatorialComplex,
    coloring: &Coloring,
    edges: bool,
    dict: &mut TokenDictionary,
) -> Coloring {
    let c = &coloring.colors;
    let n = cc.num_cells();
    let mut tokens = FlatTokens::with_capacity(n);
    let mut scratch = Vec::new();
    for cell in 0..n {
        tokens.data.push(c[cell]);
        let is_node = cc.rank_of(cell) == 0 && cc.cell(cell).len() == 1;
        if edges && !is_node {
            scratch.extend(cc.cell(cell).vertices.iter().map(|&v| c[cc.vertex_cell(v)]));
            tokens.push_multiset(&mut scratch);
        } else if !edges && is_node {
            let v = cc.cell(cell).vertices[0];
            scratch.extend(
                cc.cells_containing(v)
                    .iter()
                    .filter(|&&e| e != cell)
                    .map(|&e| c[e]),
            );
            tokens.push_multiset(&mut scratch);
        }
        tokens.finish_token();
    }
    dict.intern(&tokens)
}

fn refine_from(
    cc: &CombinatorialComplex,
    index: &NeighborhoodIndex,
    rule: &RefinementRule,
    init: Coloring,
) -> RefinementTrace {
    let mut dict = TokenDictionary::new();
    let mut colorings = vec![init];
    if cc.num_cells() == 0 {
        return RefinementTrace {
            colorings,
            stable_at: 0,
            dictionary_size: 0,
        };
    }
    loop {
        let prev = colorings.last().unwrap();
        let next = refine_step(cc, index, prev, rule, &mut dict);
        // Refinement is monotone, so an unchanged class count means an
        // unchanged partition.
        let done = next.num_colors == prev.num_colors;
        colorings.push(next);
        if done {
            break;
        }
    }
    RefinementTrace {
        stable_at: colorings.len() - 1,
        colorings,
        dictionary_size: dict.size(),
    }
}

/// Refines until the partition stops changing.
pub fn refine_to_stable(
    cc: &CombinatorialComplex,
    index: &NeighborhoodIndex,
    rule: &RefinementRule,
    scheme: &InitScheme,
) -> Result<RefinementTrace, EngineError> {
    let init = initial_coloring(cc, index, scheme)?;
    Ok(refine_from(cc, index, rule, init))
}

/// Histogram of the cells of `cc` selected by `keep`.
pub fn histogram(
    cc: &CombinatorialComplex,
    coloring: &Coloring,
    mut keep: impl FnMut(usize) -> bool,
) -> ColorHistogram {
    let mut counts = BTreeMap::new();
    for cell in 0..cc.num_cells() {
        if keep(cell) {
            *counts
                .entry((cc.rank_of(cell), coloring.colors[cell]))
                .or_insert(0) += 1;
        }
    }
    ColorHistogram { counts }
}

/// Per-side histograms of a joint run, one pair per iteration.
pub fn side_histograms(
    union: &CombinatorialComplex,
    trace: &RefinementTrace,
    origin: &[Side],
) -> Vec<(ColorHistogram, ColorHistogram)> {
    trace
        .colorings
        .iter()
        .map(|col| {
            (
                histogram(union, col, |c| origin[c] == Side::A),
                histogram(union, col, |c| origin[c] == Side::B),
            )
        })
        .collect()
}

/// Refines the disjoint union of `a` and `b` with one dictionary.
/// Returns the union, its trace and the side of every union cell.
pub fn joint_refine(
    a: &CombinatorialComplex,
    b: &CombinatorialComplex,
    rule: &RefinementRule,
    scheme: &InitScheme,
) -> Result<(CombinatorialComplex, RefinementTrace, Vec<Side>), EngineError> {
    let (union, origin) = disjoint_union(a, b);
    let index = NeighborhoodIndex::new(&union);
    let trace = refine_to_stable(&union, &index, rule, scheme)?;
    Ok((union, trace, origin))
}

pub fn distinguish(
    a: &CombinatorialComplex,
    b: &CombinatorialComplex,
    rule: &RefinementRule,
    scheme: &InitScheme,
) -> Result<Verdict, EngineError> {
    let (union, trace, origin) = joint_refine(a, b, rule, scheme)?;
    for (t, (ha, hb)) in side_histograms(&union, &trace, &origin).iter().enumerate() {
        if ha != hb {
            return Ok(Verdict::Distinguished { iteration: t });
        }
    }
    Ok(Verdict::Inconclusive {
        stable_at: trace.stable_at,
    })
}

/// Joint refinement of many complexes at once.
#[derive(Clone, Debug)]
pub struct FamilyResult {
    pub trace: RefinementTrace,
    /// `classes[t][k]`: id of component `k`'s histogram at iteration `t`;
    /// equal ids mean equal histograms.
    pub classes: Vec<Vec<u32>>,
    /// Per-component histograms at the stable iteration.
    pub stable_histograms: Vec<ColorHistogram>,
}

impl FamilyResult {
    pub fn verdict(&self, i: usize, j: usize) -> Verdict {
        for (t, row) in self.classes.iter().enumerate() {
            if row[i] != row[j] {
                return Verdict::Distinguished { iteration: t };
            }
        }
        Verdict::Inconclusive {
            stable_at: self.trace.stable_at,
        }
    }

    pub fn len(&self) -> usize {
        self.stable_histograms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stable_histograms.is_empty()
    }
}

/// Refines the disjoint union of all `parts` with one dictionary.
///
/// A cell's color at iteration t is an injective function of its depth-t
/// unfolding, which does not depend on the other components, so the verdict
/// for any pair equals the one from refining that pair alone.
pub fn refine_family(
    parts: &[&CombinatorialComplex],
    rule: &RefinementRule,
    scheme: &InitScheme,
) -> Result<FamilyResult, EngineError> {
    let (union, origin) = disjoint_union_many(parts);
    let index = NeighborhoodIndex::new(&union);
    let trace = refine_to_stable(&union, &index, rule, scheme)?;
    Ok(family_result(&union, trace, &origin, parts.len()))
}

/// [`refine_family`] with per-component seed labels keyed by local cell index.
pub fn refine_family_seeded(
    parts: &[&CombinatorialComplex],
    labels: &[&BTreeMap<usize, i64>],
    rule: &RefinementRule,
) -> Result<FamilyResult, EngineError> {
    let (union, origin) = disjoint_union_many(parts);
    let mut seeds = BTreeMap::new();
    for (cell, &(k, local)) in origin.iter().enumerate() {
        let l = labels
            .get(k)
            .and_then(|m| m.get(&local))
            .ok_or(EngineError::MissingSeedLabel(local))?;
        seeds.insert(cell, *l);
    }
    let index = NeighborhoodIndex::new(&union);
    let trace = refine_to_stable(&union, &index, rule, &InitScheme::Seeded(seeds))?;
    Ok(family_result(&union, trace, &origin, parts.len()))
}

fn family_result(
    union: &CombinatorialComplex,
    trace: RefinementTrace,
    origin: &[(usize, usize)],
    k: usize,
) -> FamilyResult {
    let mut classes = Vec::with_capacity(trace.colorings.len());
    let mut last = vec![ColorHistogram::default(); k];
    for col in &trace.colorings {
        let mut hists = vec![ColorHistogram::default(); k];
        for (cell, &(comp, _)) in origin.iter().enumerate() {
            *hists[comp]
                .counts
                .entry((union.rank_of(cell), col.colors[cell]))
                .or_insert(0) += 1;
        }
        let mut ids: HashMap<&ColorHistogram, u32> = HashMap::new();
        let row = hists
            .iter()
            .map(|h| {
                let next = ids.len() as u32;
                *ids.entry(h).or_insert(next)
            })
            .collect();
        classes.push(row);
        last = hists;
    }
    FamilyResult {
        trace,
        classes,
        stable_histograms: last,
    }
}
