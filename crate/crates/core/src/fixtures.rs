//! Small named complexes and graph pairs used in tests and the CLI suite.

use crate::complex::{build_complex, CombinatorialComplex, ComplexError};
use crate::graph::Graph;
use crate::lifting::embed_simplicial;

/// Two triangles sharing an edge: 4 nodes, 5 edges, 2 faces.
pub fn two_triangles() -> CombinatorialComplex {
    embed_simplicial(&[vec![0, 1, 2], vec![1, 2, 3]])
}

/// The full simplex on four vertices (15 cells, dimension 3).
pub fn tetrahedron() -> CombinatorialComplex {
    embed_simplicial(&[vec![0, 1, 2, 3]])
}

pub fn c8() -> Graph {
    Graph::cycle(8)
}

pub fn two_c4() -> Graph {
    Graph::cycle(4).union(&Graph::cycle(4))
}

/// Two 6-cycles sharing the edge {0, 1}.
pub fn glued_hexagons() -> Graph {
    Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (1, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 0),
        ],
    )
    .expect("valid graph")
}

/// Two 5-cycles joined by the edge {0, 5}.
pub fn bridged_pentagons() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
    edges.push((0, 5));
    Graph::new(10, edges).expect("valid graph")
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> Graph {
    Graph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("valid graph")
}

pub fn k33() -> Graph {
    Graph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).expect("valid graph")
}

/// Edges shared by both face complexes of [`face_pair`]. Found by exhaustive
/// search over edge subsets: with rank-only initial colors, the `CWL` preset
/// cannot separate the pair while `FULL` does so at iteration 1.
pub const FACE_PAIR_EDGES: &[(usize, usize)] =
    &[(0, 1), (0, 5), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)];

/// Faces of the first complex of [`face_pair`].
pub const FACE_PAIR_A: [[usize; 3]; 4] = [[0, 1, 2], [0, 3, 4], [1, 2, 5], [3, 4, 5]];
/// Faces of the second complex of [`face_pair`].
pub const FACE_PAIR_B: [[usize; 3]; 4] = [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]];

/// Two 6-vertex complexes with the same edges and four triangular rank-2
/// cells each. The faces span their vertices without a full edge boundary, so
/// the complexes are only valid with strict mode off.
pub fn face_pair_with(
    edges: &[(usize, usize)],
    strict: bool,
) -> Result<(CombinatorialComplex, CombinatorialComplex), ComplexError> {
    let build = |faces: &[[usize; 3]; 4]| {
        let cells = edges
            .iter()
            .map(|&(u, v)| (vec![u, v], 1))
            .chain(faces.iter().map(|f| (f.to_vec(), 2)));
        build_complex(6, cells, strict)
    };
    Ok((build(&FACE_PAIR_A)?, build(&FACE_PAIR_B)?))
}

pub fn face_pair() -> (CombinatorialComplex, CombinatorialComplex) {
    face_pair_with(FACE_PAIR_EDGES, false).expect("valid face complexes")
}
