//! Lifting maps from graphs, hypergraphs and simplicial inputs to complexes.

use std::collections::BTreeSet;

use crate::complex::{build_complex, CombinatorialComplex};
use crate::graph::{Graph, Hypergraph};

/// How hyperedges are ranked by [`hypergraph_lift`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperLiftMode {
    /// Every hyperedge has rank 1.
    Flat,
    /// A hyperedge of size k+1 has rank k.
    SizeRanked,
}

/// All cliques with 2..=max_size vertices, each sorted.
pub fn cliques(g: &Graph, max_size: usize) -> Vec<Vec<usize>> {
    fn extend(
        g: &Graph,
        clique: &mut Vec<usize>,
        candidates: &[usize],
        max_size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        for (i, &v) in candidates.iter().enumerate() {
            clique.push(v);
            out.push(clique.clone());
            if clique.len() < max_size {
                let next: Vec<usize> = candidates[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                extend(g, clique, &next, max_size, out);
            }
            clique.pop();
        }
    }
    let mut out = Vec::new();
    if max_size < 2 {
        return out;
    }
    for v in 0..g.num_vertices() {
        let higher: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        let mut clique = vec![v];
        extend(g, &mut clique, &higher, max_size, &mut out);
    }
    out
}

/// Each (k+1)-clique with k <= max_dim becomes a rank-k cell.
pub fn clique_lift(g: &Graph, max_dim: usize) -> CombinatorialComplex {
    let cells = cliques(g, max_dim + 1).into_iter().map(|c| {
        let r = c.len() - 1;
        (c, r)
    });
    build_complex(g.num_vertices(), cells, true).expect("clique complexes are valid")
}

/// Induced chordless cycles of length 3..=max_len, each in cyclic order
/// starting from its smallest vertex.
pub fn chordless_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    fn dfs(
        g: &Graph,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        max_len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w <= s || on_path[w] {
                continue;
            }
            // No chord from w to the interior of the path.
            if path
                .get(1..path.len() - 1)
                .unwrap_or(&[])
                .iter()
                .any(|&p| g.has_edge(p, w))
            {
                continue;
            }
            if path.len() > 1 && g.has_edge(w, s) {
                if path[1] < w {
                    let mut cyc = path.clone();
                    cyc.push(w);
                    out.push(cyc);
                }
                continue;
            }
            if path.len() + 1 < max_len {
                path.push(w);
                on_path[w] = true;
                dfs(g, path, on_path, max_len, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if max_len < 3 {
        return out;
    }
    let mut on_path = vec![false; g.num_vertices()];
    for s in 0..g.num_vertices() {
        let mut path = vec![s];
        on_path[s] = true;
        dfs(g, &mut path, &mut on_path, max_len, &mut out);
        on_path[s] = false;
    }
    out
}

/// Vertices and edges of `g`, plus a rank-2 cell for each induced chordless
/// cycle of length 3..=max_ring.
pub fn ring_lift(g: &Graph, max_ring: usize) -> CombinatorialComplex {
    let rings: BTreeSet<Vec<usize>> = chordless_cycles(g, max_ring)
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    let cells = g
        .edges()
        .map(|(u, v)| (vec![u, v], 1))
        .chain(rings.into_iter().map(|r| (r, 2)));
    build_complex(g.num_vertices(), cells, true).expect("ring complexes are valid")
}

/// Nodes become 0-cells and hyperedges higher cells. The result is built
/// without strict validation since hyperedges may nest or skip ranks.
pub fn hypergraph_lift(h: &Hypergraph, mode: HyperLiftMode) -> CombinatorialComplex {
    let cells = h.hyperedges().map(|e| {
        let rank = match mode {
            HyperLiftMode::Flat => 1,
            HyperLiftMode::SizeRanked => e.len() - 1,
        };
        (e.to_vec(), rank)
    });
    build_complex(h.num_vertices(), cells, false).expect("hypergraph lifts are order-preserving")
}

/// Downward closure of the given simplices; a k-simplex gets rank k.
pub fn embed_simplicial(simplices: &[Vec<usize>]) -> CombinatorialComplex {
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut n = 0;
    for s in simplices {
        let mut s = s.clone();
        s.sort_unstable();
        s.dedup();
        if let Some(&m) = s.last() {
            n = n.max(m + 1);
        }
        let k = s.len();
        assert!(k < usize::BITS as usize, "simplex too large to close");
        if all.contains(&s) {
            continue;
        }
        for mask in 1u64..(1u64 << k) {
            let face: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| s[i])
                .collect();
            all.insert(face);
        }
    }
    let cells = all.into_iter().map(|f| {
        let r = f.len() - 1;
        (f, r)
    });
    build_complex(n, cells, true).expect("simplicial complexes are valid")
}
