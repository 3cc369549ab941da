//! Combinatorial complexes: cells, validation and structural operations.

use std::collections::HashMap;

use thiserror::Error;

/// A vertex subset with a rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub rank: usize,
    pub vertices: Vec<usize>,
}

impl Cell {
    pub fn new(mut vertices: Vec<usize>, rank: usize) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Cell { rank, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_subset_of(&self, other: &Cell) -> bool {
        let mut it = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error(
        "cell {cell:?} references vertex {vertex} but the complex has {num_vertices} vertices"
    )]
    VertexOutOfRange {
        cell: Vec<usize>,
        vertex: usize,
        num_vertices: usize,
    },
    #[error("empty cell")]
    EmptyCell,
    #[error("duplicate cell {0:?}")]
    DuplicateCell(Vec<usize>),
    #[error("singleton cell {{{vertex}}} has rank {rank}, expected 0")]
    SingletonRankViolation { vertex: usize, rank: usize },
    #[error("cell {sub:?} (rank {sub_rank}) is contained in {sup:?} of lower rank {sup_rank}")]
    RankOrderViolation {
        sub: Vec<usize>,
        sub_rank: usize,
        sup: Vec<usize>,
        sup_rank: usize,
    },
    #[error("free-face violation: {sub:?} (rank {sub_rank}) is incident on {sup:?} (rank {sup_rank}) without a rank-adjacent chain")]
    FreeFaceViolation {
        sub: Vec<usize>,
        sub_rank: usize,
        sup: Vec<usize>,
        sup_rank: usize,
    },
    #[error("invalid vertex permutation: {0}")]
    InvalidPermutation(String),
}

/// A validated combinatorial complex.
///
/// Cells are kept sorted by `(rank, vertices)`, so cell indices are canonical
/// for a given cell set. Every vertex has a singleton 0-cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialComplex {
    num_vertices: usize,
    cells: Vec<Cell>,
    dimension: usize,
    strict: bool,
    vertex_cell: Vec<usize>,
    /// For each vertex, sorted indices of cells containing it.
    incidence: Vec<Vec<usize>>,
}

impl CombinatorialComplex {
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.cells[i].rank
    }

    /// Maximum rank; 0 for the empty complex.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Whether the complex was validated in strict mode.
    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Index of the singleton cell `{v}`.
    pub fn vertex_cell(&self, v: usize) -> usize {
        self.vertex_cell[v]
    }

    /// Indices of cells containing vertex `v` (including its singleton).
    pub fn cells_containing(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn find_cell(&self, vertices: &[usize]) -> Option<usize> {
        let first = *vertices.first()?;
        if first >= self.num_vertices {
            return None;
        }
        self.incidence[first]
            .iter()
            .copied()
            .find(|&c| self.cells[c].vertices == vertices)
    }

    pub fn count_rank(&self, rank: usize) -> usize {
        self.cells.iter().filter(|c| c.rank == rank).count()
    }

    /// All pairs `(sub, sup)` of distinct cells with `sub ⊂ sup`.
    pub fn containments(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, cell) in self.cells.iter().enumerate() {
            for j in self.supersets(cell) {
                if j != i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Indices of cells that contain every vertex of `cell` (the cell itself included).
    pub(crate) fn supersets<'a>(&'a self, cell: &'a Cell) -> impl Iterator<Item = usize> + 'a {
        let pivot = cell
            .vertices
            .iter()
            .copied()
            .min_by_key(|&v| self.incidence[v].len())
            .unwrap_or(0);
        let list: &[usize] = if cell.vertices.is_empty() {
            &[]
        } else {
            &self.incidence[pivot]
        };
        list.iter()
            .copied()
            .filter(move |&j| cell.is_subset_of(&self.cells[j]))
    }

    /// Cells with exactly one coface, i.e. free faces in the topological sense,
    /// given the rank-adjacent coboundary.
    pub fn free_faces(&self) -> Vec<usize> {
        let mut cofaces = vec![0usize; self.cells.len()];
        for (sub, sup) in self.containments() {
            if self.cells[sup].rank == self.cells[sub].rank + 1 {
                cofaces[sub] += 1;
            }
        }
        (0..self.cells.len()).filter(|&i| cofaces[i] == 1).collect()
    }

    pub fn has_free_faces(&self) -> bool {
        !self.free_faces().is_empty()
    }

    /// Cell list as `(vertices, rank)` pairs, suitable for rebuilding.
    pub fn to_cell_list(&self) -> Vec<(Vec<usize>, usize)> {
        self.cells
            .iter()
            .map(|c| (c.vertices.clone(), c.rank))
            .collect()
    }

    fn from_sorted_cells(num_vertices: usize, cells: Vec<Cell>, strict: bool) -> Self {
        let mut incidence = vec![Vec::new(); num_vertices];
        let mut vertex_cell = vec![usize::MAX; num_vertices];
        for (i, c) in cells.iter().enumerate() {
            for &v in &c.vertices {
                incidence[v].push(i);
            }
            if c.vertices.len() == 1 {
                vertex_cell[c.vertices[0]] = i;
            }
        }
        let dimension = cells.iter().map(|c| c.rank).max().unwrap_or(0);
        CombinatorialComplex {
            num_vertices,
            cells,
            dimension,
            strict,
            vertex_cell,
            incidence,
        }
    }
}

/// Builds and validates a complex. Missing singletons are inserted at rank 0.
pub fn build_complex(
    num_vertices: usize,
    cells: impl IntoIterator<Item = (Vec<usize>, usize)>,
    strict: bool,
) -> Result<CombinatorialComplex, ComplexError> {
    let mut list: Vec<Cell> = Vec::new();
    let mut has_singleton = vec![false; num_vertices];
    for (vs, rank) in cells {
        let raw_len = vs.len();
        let cell = Cell::new(vs, rank);
        if cell.is_empty() {
            return Err(ComplexError::EmptyCell);
        }
        if cell.len() != raw_len {
            return Err(ComplexError::DuplicateCell(cell.vertices));
        }
        if let Some(&v) = cell.vertices.iter().find(|&&v| v >= num_vertices) {
            return Err(ComplexError::VertexOutOfRange {
                cell: cell.vertices,
                vertex: v,
                num_vertices,
            });
        }
        if cell.len() == 1 {
            if cell.rank != 0 {
                return Err(ComplexError::SingletonRankViolation {
                    vertex: cell.vertices[0],
                    rank: cell.rank,
                });
            }
            has_singleton[cell.vertices[0]] = true;
        }
        list.push(cell);
    }
    for (v, present) in has_singleton.iter().enumerate() {
        if !present {
            list.push(Cell::new(vec![v], 0));
        }
    }
    list.sort_unstable();
    for w in list.windows(2) {
        if w[0].vertices == w[1].vertices {
            return Err(ComplexError::DuplicateCell(w[0].vertices.clone()));
        }
    }
    // Same vertex set with different ranks sorts apart; catch those too.
    {
        let mut seen: HashMap<&[usize], usize> = HashMap::with_capacity(list.len());
        for c in &list {
            if seen.insert(&c.vertices, c.rank).is_some() {
                return Err(ComplexError::DuplicateCell(c.vertices.clone()));
            }
        }
    }
    let cc = CombinatorialComplex::from_sorted_cells(num_vertices, list, strict);
    validate(&cc)?;
    Ok(cc)
}

fn validate(cc: &CombinatorialComplex) -> Result<(), ComplexError> {
    let cells = &cc.cells;
    for (i, sub) in cells.iter().enumerate() {
        let sups: Vec<usize> = cc.supersets(sub).filter(|&j| j != i).collect();
        let covers: Vec<usize> = sups
            .iter()
            .copied()
            .filter(|&j| cells[j].rank == sub.rank + 1)
            .collect();
        for &j in &sups {
            let sup = &cells[j];
            if sub.rank > sup.rank {
                return Err(ComplexError::RankOrderViolation {
                    sub: sub.vertices.clone(),
                    sub_rank: sub.rank,
                    sup: sup.vertices.clone(),
                    sup_rank: sup.rank,
                });
            }
            if !cc.strict || sup.rank == sub.rank + 1 {
                continue;
            }
            // Strict: no equal-rank nesting, and a rank gap >= 2 must be bridged
            // by an intermediate cell of rank sub.rank + 1.
            let bridged =
                sup.rank > sub.rank + 1 && covers.iter().any(|&k| cells[k].is_subset_of(sup));
            if !bridged {
                return Err(ComplexError::FreeFaceViolation {
                    sub: sub.vertices.clone(),
                    sub_rank: sub.rank,
                    sup: sup.vertices.clone(),
                    sup_rank: sup.rank,
                });
            }
        }
    }
    Ok(())
}

/// Which input a cell of a disjoint union came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

/// Disjoint union of two complexes; `b`'s vertices are shifted by `a.num_vertices()`.
pub fn disjoint_union(
    a: &CombinatorialComplex,
    b: &CombinatorialComplex,
) -> (CombinatorialComplex, Vec<Side>) {
    let (cc, origin) = disjoint_union_many(&[a, b]);
    let sides = origin
        .into_iter()
        .map(|(k, _)| if k == 0 { Side::A } else { Side::B })
        .collect();
    (cc, sides)
}

/// Disjoint union of any number of complexes. The origin map gives, for each
/// union cell, `(component, cell index within that component)`.
pub fn disjoint_union_many(
    parts: &[&CombinatorialComplex],
) -> (CombinatorialComplex, Vec<(usize, usize)>) {
    let mut tagged: Vec<(Cell, usize, usize)> = Vec::new();
    let mut offset = 0;
    for (k, p) in parts.iter().enumerate() {
        for (i, c) in p.cells.iter().enumerate() {
            let vs = c.vertices.iter().map(|v| v + offset).collect();
            tagged.push((
                Cell {
                    rank: c.rank,
                    vertices: vs,
                },
                k,
                i,
            ));
        }
        offset += p.num_vertices;
    }
    tagged.sort_unstable_by(|x, y| x.0.cmp(&y.0));
    let strict = parts.iter().all(|p| p.strict);
    let origin = tagged.iter().map(|t| (t.1, t.2)).collect();
    let cells = tagged.into_iter().map(|t| t.0).collect();
    (
        CombinatorialComplex::from_sorted_cells(offset, cells, strict),
        origin,
    )
}

/// Maps every vertex `v` to `perm[v]`.
pub fn relabel_vertices(
    cc: &CombinatorialComplex,
    perm: &[usize],
) -> Result<CombinatorialComplex, ComplexError> {
    let n = cc.num_vertices;
    if perm.len() != n {
        return Err(ComplexError::InvalidPermutation(format!(
            "length {} for {} vertices",
            perm.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(ComplexError::InvalidPermutation(format!(
                "{p} is out of range or repeated"
            )));
        }
        seen[p] = true;
    }
    let mut cells: Vec<Cell> = cc
        .cells
        .iter()
        .map(|c| Cell::new(c.vertices.iter().map(|&v| perm[v]).collect(), c.rank))
        .collect();
    cells.sort_unstable();
    Ok(CombinatorialComplex::from_sorted_cells(n, cells, cc.strict))
}
