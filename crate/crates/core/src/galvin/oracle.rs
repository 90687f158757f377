//! Kernel oracles: anything that can produce a kernel of an induced subgraph.

use crate::digraph::Digraph;
use crate::kernel::{find_kernel_bruteforce_with_cap, DEFAULT_KERNEL_CAP};
use crate::stable_matching::{deferred_acceptance, PreferenceProfile, Rank, RankedPair};
use crate::vertex_set::VertexSet;

use super::latin::{latin_value, CellIndexMap};

/// Produces a kernel of the subgraph of `g` induced on `s`.
///
/// Returning `None`, or a set that is not a kernel, is treated as an oracle
/// failure by the coloring engine.
pub trait KernelOracle {
    fn kernel(&self, g: &Digraph, s: &VertexSet) -> Option<VertexSet>;
}

impl<F> KernelOracle for F
where
    F: Fn(&Digraph, &VertexSet) -> Option<VertexSet>,
{
    fn kernel(&self, g: &Digraph, s: &VertexSet) -> Option<VertexSet> {
        self(g, s)
    }
}

/// Exhaustive search; only usable on small subsets.
#[derive(Debug, Clone, Copy)]
pub struct BruteForceOracle {
    pub cap: usize,
}

impl Default for BruteForceOracle {
    fn default() -> Self {
        BruteForceOracle { cap: DEFAULT_KERNEL_CAP }
    }
}

impl KernelOracle for BruteForceOracle {
    fn kernel(&self, g: &Digraph, s: &VertexSet) -> Option<VertexSet> {
        find_kernel_bruteforce_with_cap(g, s, self.cap).ok().flatten()
    }
}

/// Kernels of the Latin-square orientation of the `n x n` square via stable
/// matchings. The graph argument is ignored apart from its size, which must
/// be `n * n`.
#[derive(Debug, Clone, Copy)]
pub struct SquareKernelOracle {
    pub n: usize,
}

impl KernelOracle for SquareKernelOracle {
    fn kernel(&self, g: &Digraph, s: &VertexSet) -> Option<VertexSet> {
        if g.num_vertices() != self.n * self.n || s.last().is_some_and(|v| v >= g.num_vertices()) {
            return None;
        }
        Some(square_kernel_oracle(self.n, s))
    }
}

/// Marriage market on the cells of `s`: rows are men, columns are women.
/// A row prefers larger Latin values, a column prefers smaller ones, which is
/// exactly the direction of the row and column edges of the orientation.
pub fn square_profile(n: usize, s: &VertexSet) -> PreferenceProfile {
    let cells = CellIndexMap::new(n);
    let pairs = s.iter().map(|v| {
        let (row, col) = cells.cell(v);
        let value = latin_value(row, col, n) as Rank;
        RankedPair { row, col, row_rank: n as Rank - 1 - value, col_rank: value }
    });
    PreferenceProfile::new(n, n, pairs).expect("Latin values are distinct along rows and columns")
}

/// The row-optimal stable matching of [`square_profile`], as a set of cells.
/// It is a kernel of the orientation induced on `s`.
pub fn square_kernel_oracle(n: usize, s: &VertexSet) -> VertexSet {
    let cells = CellIndexMap::new(n);
    deferred_acceptance(&square_profile(n, s))
        .pairs()
        .iter()
        .map(|&(r, c)| cells.vertex(r, c))
        .collect()
}
