//! The cyclic Latin square and the orientation of the rook's graph it induces.

use crate::digraph::Digraph;
use crate::vertex_set::Vertex;

/// Entry `(r + c) mod n` of the cyclic Latin square, 0-based.
///
/// Panics if `r` or `c` is not below `n`.
pub fn latin_value(r: usize, c: usize, n: usize) -> usize {
    assert!(r < n && c < n, "cell ({r}, {c}) outside a {n}x{n} square");
    (r + c) % n
}

/// Row-major bijection between cells of the `n x n` square and vertex ids:
/// `id = r * n + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellIndexMap {
    n: usize,
}

impl CellIndexMap {
    pub fn new(n: usize) -> Self {
        CellIndexMap { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_cells(&self) -> usize {
        self.n * self.n
    }

    pub fn vertex(&self, r: usize, c: usize) -> Vertex {
        debug_assert!(r < self.n && c < self.n);
        r * self.n + c
    }

    pub fn cell(&self, v: Vertex) -> (usize, usize) {
        debug_assert!(v < self.num_cells());
        (v / self.n, v % self.n)
    }
}

/// Orients the rook's graph of the `n x n` square by the cyclic Latin square:
/// row edges point to larger entries, column edges point to smaller ones.
/// Every vertex ends up with outdegree `n - 1`.
pub fn build_square_orientation(n: usize) -> Digraph {
    let cells = CellIndexMap::new(n);
    let out = (0..cells.num_cells())
        .map(|v| {
            let (r, c) = cells.cell(v);
            let here = latin_value(r, c, n);
            let along_row = (0..n)
                .filter(|&c2| here < latin_value(r, c2, n))
                .map(|c2| cells.vertex(r, c2));
            let along_col = (0..n)
                .filter(|&r2| here > latin_value(r2, c, n))
                .map(|r2| cells.vertex(r2, c));
            along_row.chain(along_col).collect()
        })
        .collect();
    Digraph::from_adjacency(out)
}

/// True iff `g` is exactly the orientation produced for some `n`, returning that `n`.
pub fn square_orientation_order(g: &Digraph) -> Option<usize> {
    let v = g.num_vertices();
    let n = (v as f64).sqrt().round() as usize;
    (n * n == v && *g == build_square_orientation(n)).then_some(n)
}
