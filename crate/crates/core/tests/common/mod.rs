//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ccwl_core::complex::CombinatorialComplex;
use ccwl_core::graph::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Relations computed directly from the definitions by pairwise checks.
pub struct NaiveRelations {
    pub boundary: Vec<BTreeSet<usize>>,
    pub coboundary: Vec<BTreeSet<usize>>,
    pub lower: Vec<BTreeMap<(usize, usize), usize>>,
    pub upper: Vec<BTreeMap<(usize, usize), usize>>,
}

pub fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn naive_relations(cc: &CombinatorialComplex) -> NaiveRelations {
    let n = cc.num_cells();
    let cells = cc.cells();
    let mut boundary = vec![BTreeSet::new(); n];
    let mut coboundary = vec![BTreeSet::new(); n];
    for s in 0..n {
        for t in 0..n {
            if s != t
                && subset(&cells[t].vertices, &cells[s].vertices)
                && cells[t].rank + 1 == cells[s].rank
            {
                boundary[s].insert(t);
                coboundary[t].insert(s);
            }
        }
    }
    let mut lower = vec![BTreeMap::new(); n];
    let mut upper = vec![BTreeMap::new(); n];
    for s in 0..n {
        for t in 0..n {
            if s == t || cells[s].rank != cells[t].rank {
                continue;
            }
            for d in boundary[s].intersection(&boundary[t]) {
                *lower[s].entry((t, *d)).or_insert(0) += 1;
            }
            for d in coboundary[s].intersection(&coboundary[t]) {
                *upper[s].entry((t, *d)).or_insert(0) += 1;
            }
        }
    }
    NaiveRelations {
        boundary,
        coboundary,
        lower,
        upper,
    }
}

/// Flags in the order boundary, coboundary, lower, upper.
pub type Flags = [bool; 4];

/// Stable partition by plain signature refinement; colors are arbitrary class
/// representatives, so only the induced partition is meaningful. Returns the
/// partition after every round and the stable round index.
pub fn naive_refine(
    cc: &CombinatorialComplex,
    flags: Flags,
    rank_degree: bool,
) -> (Vec<Vec<usize>>, usize) {
    let rel = naive_relations(cc);
    let n = cc.num_cells();
    let classes = |keys: Vec<Vec<i64>>| -> Vec<usize> {
        let distinct: BTreeSet<Vec<i64>> = keys.iter().cloned().collect();
        let ids: BTreeMap<Vec<i64>, usize> = distinct.into_iter().zip(0..).collect();
        keys.iter().map(|k| ids[k]).collect()
    };
    let init = (0..n)
        .map(|c| {
            let mut k = vec![cc.rank_of(c) as i64];
            if rank_degree {
                k.push(rel.boundary[c].len() as i64);
                k.push(rel.coboundary[c].len() as i64);
            }
            k
        })
        .collect();
    let mut rounds = vec![classes(init)];
    loop {
        let cur = rounds.last().unwrap().clone();
        let keys = (0..n)
            .map(|c| {
                let mut k = vec![cur[c] as i64];
                let mut push = |mut m: Vec<i64>| {
                    m.sort();
                    k.push(-1);
                    k.extend(m);
                };
                if flags[0] {
                    push(rel.boundary[c].iter().map(|&t| cur[t] as i64).collect());
                }
                if flags[1] {
                    push(rel.coboundary[c].iter().map(|&t| cur[t] as i64).collect());
                }
                for (on, adj) in [(flags[2], &rel.lower[c]), (flags[3], &rel.upper[c])] {
                    if on {
                        let mut m = Vec::new();
                        for (&(t, d), &mult) in adj {
                            for _ in 0..mult {
                                m.push(cur[t] as i64 * 1_000_000 + cur[d] as i64);
                            }
                        }
                        push(m);
                    }
                }
                k
            })
            .collect();
        let next = classes(keys);
        let same = count(&next) == count(&cur);
        rounds.push(next);
        if same {
            let t = rounds.len() - 1;
            return (rounds, t);
        }
    }
}

pub fn count(classes: &[usize]) -> usize {
    classes.iter().collect::<BTreeSet<_>>().len()
}

/// Same partition, ignoring ids.
pub fn same_partition(a: &[u32], b: &[usize]) -> bool {
    let mut f = BTreeMap::new();
    let mut g = BTreeMap::new();
    a.iter()
        .zip(b)
        .all(|(x, y)| *f.entry(*x).or_insert(*y) == *y && *g.entry(*y).or_insert(*x) == *x)
}

/// Every vertex subset of size >= 3 that induces a single cycle.
pub fn brute_force_rings(g: &Graph, max_len: usize) -> BTreeSet<Vec<usize>> {
    let n = g.num_vertices();
    assert!(n <= 16);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if vs.len() < 3 || vs.len() > max_len {
            continue;
        }
        // Induced 2-regular and connected.
        if !vs
            .iter()
            .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
        {
            continue;
        }
        let mut seen = BTreeSet::from([vs[0]]);
        let mut stack = vec![vs[0]];
        while let Some(v) = stack.pop() {
            for &w in &vs {
                if g.has_edge(v, w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() == vs.len() {
            out.insert(vs);
        }
    }
    out
}

pub fn brute_force_cliques(g: &Graph, max_size: usize) -> BTreeSet<Vec<usize>> {
    let n = g.num_vertices();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if vs.len() < 2 || vs.len() > max_size {
            continue;
        }
        if vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        {
            out.insert(vs);
        }
    }
    out
}
