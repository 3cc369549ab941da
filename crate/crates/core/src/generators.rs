//! Random graphs and complexes for property tests and benchmarks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{build_complex, CombinatorialComplex};
use crate::graph::Graph;
use crate::lifting::chordless_cycles;

/// Erdős–Rényi graph G(n, p).
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("valid random graph")
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Strict complex of dimension at most 2 on 1..=max_vertices vertices.
///
/// Rank-1 cells are graph edges; rank-2 cells are vertex sets of size 3..=5
/// in which every vertex lies on an edge of the set, with no face nested in
/// another.
pub fn random_strict_complex<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
) -> CombinatorialComplex {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let p = rng.gen_range(0.2..0.8);
    let g = random_graph(rng, n, p);
    let mut faces: Vec<Vec<usize>> = Vec::new();
    if n >= 3 {
        for _ in 0..rng.gen_range(0..=n) {
            let k = rng.gen_range(3..=5.min(n));
            let mut s: Vec<usize> = rand::seq::index::sample(rng, n, k).into_vec();
            s.sort_unstable();
            let covered = s
                .iter()
                .all(|&v| s.iter().any(|&w| w != v && g.has_edge(v, w)));
            let nested = faces
                .iter()
                .any(|f| f.iter().all(|v| s.contains(v)) || s.iter().all(|v| f.contains(v)));
            if covered && !nested {
                faces.push(s);
            }
        }
    }
    let cells = g
        .edges()
        .map(|(u, v)| (vec![u, v], 1))
        .chain(faces.into_iter().map(|f| (f, 2)));
    build_complex(n, cells, true).expect("generator emits strict complexes")
}

/// Strict complex of dimension at most 2 in which no cell has exactly one
/// coface.
///
/// Starts from the ring lift of a random graph (rings up to length 5), drops
/// some rings, then repeatedly removes any ring on an edge with a single
/// coface and any edge at a vertex of degree one.
pub fn random_closed_complex<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
) -> CombinatorialComplex {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let p = rng.gen_range(0.25..0.8);
    let g = random_graph(rng, n, p);
    let keep = rng.gen_range(0.3..1.0);
    let max_ring = rng.gen_range(3..=5);
    let mut edges: BTreeSet<(usize, usize)> = g.edges().collect();
    let mut faces: BTreeSet<Vec<usize>> = chordless_cycles(&g, max_ring)
        .into_iter()
        .filter(|_| rng.gen_bool(keep))
        .collect();
    // Faces are kept in cyclic order so their boundary edges are known.
    let face_edges = |f: &Vec<usize>| -> Vec<(usize, usize)> {
        (0..f.len())
            .map(|i| {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                (a.min(b), a.max(b))
            })
            .collect()
    };
    loop {
        let mut changed = false;
        let mut cof = std::collections::BTreeMap::<(usize, usize), usize>::new();
        for f in &faces {
            for e in face_edges(f) {
                *cof.entry(e).or_insert(0) += 1;
            }
        }
        let before = faces.len();
        faces.retain(|f| face_edges(f).iter().all(|e| cof[e] != 1));
        changed |= faces.len() != before;
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let leaves: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(u, v)| deg[u] == 1 || deg[v] == 1)
            .collect();
        for e in leaves {
            edges.remove(&e);
            faces.retain(|f| !face_edges(f).contains(&e));
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let cells = edges
        .into_iter()
        .map(|(u, v)| (vec![u, v], 1))
        .chain(faces.into_iter().map(|mut f| {
            f.sort_unstable();
            (f, 2)
        }));
    build_complex(n, cells, true).expect("generator emits strict complexes")
}
