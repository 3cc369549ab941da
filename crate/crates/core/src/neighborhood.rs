//! Boundary, coboundary, and lower/upper adjacency with bridge cells.

use crate::complex::CombinatorialComplex;

/// Incidence structure of a complex.
///
/// Boundary and coboundary lists are stored; lower and upper adjacency are
/// derived on demand from them, since on dense ring lifts the adjacency lists
/// are orders of magnitude larger than the incidences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodIndex {
    boundary: Vec<Vec<usize>>,
    coboundary: Vec<Vec<usize>>,
}

impl NeighborhoodIndex {
    pub fn new(cc: &CombinatorialComplex) -> Self {
        let n = cc.num_cells();
        let mut boundary = vec![Vec::new(); n];
        let mut coboundary = vec![Vec::new(); n];
        for (sub, sup) in cc.containments() {
            if cc.rank_of(sup) == cc.rank_of(sub) + 1 {
                boundary[sup].push(sub);
                coboundary[sub].push(sup);
            }
        }
        for l in boundary.iter_mut().chain(coboundary.iter_mut()) {
            l.sort_unstable();
        }
        NeighborhoodIndex {
            boundary,
            coboundary,
        }
    }

    pub fn num_cells(&self) -> usize {
        self.boundary.len()
    }

    pub fn boundary(&self, cell: usize) -> &[usize] {
        &self.boundary[cell]
    }

    pub fn coboundary(&self, cell: usize) -> &[usize] {
        &self.coboundary[cell]
    }

    /// `(neighbor, bridge)` pairs: same-rank cells sharing a boundary cell.
    pub fn lower_adj(&self, cell: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.boundary[cell].iter().flat_map(move |&d| {
            self.coboundary[d]
                .iter()
                .filter(move |&&t| t != cell)
                .map(move |&t| (t, d))
        })
    }

    /// `(neighbor, bridge)` pairs: same-rank cells sharing a coboundary cell.
    pub fn upper_adj(&self, cell: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.coboundary[cell].iter().flat_map(move |&d| {
            self.boundary[d]
                .iter()
                .filter(move |&&t| t != cell)
                .map(move |&t| (t, d))
        })
    }

    pub fn lower_degree(&self, cell: usize) -> usize {
        self.boundary[cell]
            .iter()
            .map(|&d| self.coboundary[d].len() - 1)
            .sum()
    }

    pub fn upper_degree(&self, cell: usize) -> usize {
        self.coboundary[cell]
            .iter()
            .map(|&d| self.boundary[d].len() - 1)
            .sum()
    }
}
