//! List coloring of digraphs in which every induced subgraph has a kernel.
//!
//! Each pass takes the smallest color still available to some uncolored
//! vertex, asks the oracle for a kernel of the vertices that could use it,
//! colors the kernel, and strikes the color from everyone else in that group.
//! Every struck vertex had an out-neighbor in the kernel, so it loses one
//! color and at least one out-neighbor together; `|list| > outdegree`
//! survives every pass.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::digraph::{ColorId, Coloring, Digraph, GraphError, ListAssignment};
use crate::kernel::is_kernel_unchecked;
use crate::vertex_set::{Vertex, VertexSet};

use super::oracle::KernelOracle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} has {list_size} colors but outdegree {outdegree}")]
    Precondition { vertex: Vertex, list_size: usize, outdegree: usize },
    #[error("oracle failed on color {color}: {returned:?} is not a kernel of {subset}; uncolored: {uncolored}")]
    OracleFailure {
        color: ColorId,
        subset: VertexSet,
        returned: Option<VertexSet>,
        uncolored: VertexSet,
    },
    #[error("after pass {pass}, vertex {vertex} has {list_size} colors but residual outdegree {outdegree}")]
    InvariantViolated { pass: usize, vertex: Vertex, list_size: usize, outdegree: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ColoringOptions {
    /// Re-check `|list| > residual outdegree` for every uncolored vertex after each pass.
    pub check_invariants: bool,
}

impl ColoringOptions {
    pub fn checked() -> Self {
        ColoringOptions { check_invariants: true }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColoringTrace {
    pub passes: usize,
    /// Passes that colored at least one vertex.
    pub productive_passes: usize,
    /// Per-vertex invariant checks performed (zero unless checking is on).
    pub invariant_checks: usize,
    /// `(color, kernel)` for every pass, in order.
    pub kernels: Vec<(ColorId, VertexSet)>,
}

/// Outcome of [`check_condition_y`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionYReport {
    Satisfied,
    Violated { vertex: Vertex, list_size: usize, outdegree: usize },
}

impl ConditionYReport {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, ConditionYReport::Satisfied)
    }
}

/// Every list strictly larger than its vertex's outdegree. A vertex with no
/// list counts as having an empty one.
pub fn check_condition_y(g: &Digraph, lists: &ListAssignment) -> ConditionYReport {
    (0..g.num_vertices())
        .find_map(|v| {
            let list_size = lists.lists().get(v).map_or(0, BTreeSet::len);
            let outdegree = g.out_neighbors(v).len();
            (list_size <= outdegree).then_some(ConditionYReport::Violated { vertex: v, list_size, outdegree })
        })
        .unwrap_or(ConditionYReport::Satisfied)
}

pub fn list_color_with_kernels(
    g: &Digraph,
    lists: &ListAssignment,
    oracle: &impl KernelOracle,
) -> Result<Coloring, ColoringError> {
    list_color_with_kernels_traced(g, lists, oracle, ColoringOptions::default()).map(|(c, _)| c)
}

pub fn list_color_with_kernels_traced(
    g: &Digraph,
    lists: &ListAssignment,
    oracle: &impl KernelOracle,
    options: ColoringOptions,
) -> Result<(Coloring, ColoringTrace), ColoringError> {
    let n = g.num_vertices();
    if lists.len() != n {
        return Err(GraphError::ListCountMismatch { lists: lists.len(), num_vertices: n }.into());
    }
    if let ConditionYReport::Violated { vertex, list_size, outdegree } = check_condition_y(g, lists) {
        return Err(ColoringError::Precondition { vertex, list_size, outdegree });
    }

    let mut current: Vec<BTreeSet<ColorId>> = lists.lists().to_vec();
    let mut uncolored = VertexSet::full(n);
    let mut coloring = Coloring::empty(n);
    let mut trace = ColoringTrace::default();

    while !uncolored.is_empty() {
        // Condition Y keeps every uncolored list non-empty.
        let color = uncolored
            .iter()
            .filter_map(|v| current[v].first().copied())
            .min()
            .expect("uncolored vertices have non-empty lists");
        let candidates: VertexSet = uncolored.iter().filter(|&v| current[v].contains(&color)).collect();

        let returned = oracle.kernel(g, &candidates);
        let kernel = match returned {
            Some(k) if k.is_subset(&candidates) && is_kernel_unchecked(g, &candidates, &k) => k,
            returned => {
                return Err(ColoringError::OracleFailure {
                    color,
                    subset: candidates,
                    returned,
                    uncolored,
                })
            }
        };

        trace.passes += 1;
        if !kernel.is_empty() {
            trace.productive_passes += 1;
        }
        for v in &kernel {
            coloring.set(v, color);
            uncolored.remove(v);
        }
        for v in candidates.difference(&kernel).iter() {
            current[v].remove(&color);
        }

        if options.check_invariants {
            for v in &uncolored {
                trace.invariant_checks += 1;
                let outdegree = g.outdegree_within(v, &uncolored);
                if current[v].len() <= outdegree {
                    return Err(ColoringError::InvariantViolated {
                        pass: trace.passes,
                        vertex: v,
                        list_size: current[v].len(),
                        outdegree,
                    });
                }
            }
        }
        trace.kernels.push((color, kernel));
    }
    Ok((coloring, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{verify_list_coloring, ColoringReport};
    use crate::galvin::latin::build_square_orientation;
    use crate::galvin::oracle::{BruteForceOracle, SquareKernelOracle};

    fn lists(ls: &[&[ColorId]]) -> ListAssignment {
        ls.iter().map(|l| l.iter().copied().collect()).collect()
    }

    #[test]
    fn single_vertex() {
        let g = Digraph::new(1, []).unwrap();
        let c = list_color_with_kernels(&g, &lists(&[&[7]]), &BruteForceOracle::default()).unwrap();
        assert_eq!(c.get(0), Some(7));
    }

    #[test]
    fn square2_shared_lists() {
        let g = build_square_orientation(2);
        let l = ListAssignment::uniform(4, [1, 2]);
        let (c, trace) =
            list_color_with_kernels_traced(&g, &l, &SquareKernelOracle { n: 2 }, ColoringOptions::checked())
                .unwrap();
        assert_eq!(c.as_slice(), &[Some(2), Some(1), Some(1), Some(2)]);
        assert_eq!(trace.passes, 2);
        assert_eq!(trace.kernels[0], (1, [1, 2].into_iter().collect()));
        assert_eq!(verify_list_coloring(&g, &l, &c), Ok(ColoringReport::Valid));
    }

    #[test]
    fn square2_disjoint_lists() {
        let g = build_square_orientation(2);
        let l = lists(&[&[1, 2], &[3, 4], &[5, 6], &[7, 8]]);
        let (c, trace) = list_color_with_kernels_traced(
            &g,
            &l,
            &SquareKernelOracle { n: 2 },
            ColoringOptions::default(),
        )
        .unwrap();
        assert_eq!(c.as_slice(), &[Some(1), Some(3), Some(5), Some(7)]);
        assert_eq!(trace.passes, 4);
        assert_eq!(trace.invariant_checks, 0);
    }

    #[test]
    fn precondition_names_vertex() {
        let g = Digraph::new(3, [(0, 1), (0, 2)]).unwrap();
        let l = lists(&[&[1, 2], &[1], &[1]]);
        assert_eq!(
            list_color_with_kernels(&g, &l, &BruteForceOracle::default()),
            Err(ColoringError::Precondition { vertex: 0, list_size: 2, outdegree: 2 })
        );
        assert_eq!(
            check_condition_y(&g, &l),
            ConditionYReport::Violated { vertex: 0, list_size: 2, outdegree: 2 }
        );
        assert!(check_condition_y(&Digraph::new(1, []).unwrap(), &lists(&[&[0]])).is_satisfied());
    }

    #[test]
    fn odd_cycle_breaks_the_oracle() {
        // lists of size 2 satisfy the outdegree bound, but C3 has no kernel
        let g = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let l = ListAssignment::uniform(3, [0, 1]);
        match list_color_with_kernels(&g, &l, &BruteForceOracle::default()) {
            Err(ColoringError::OracleFailure { color: 0, returned: None, subset, .. }) => {
                assert_eq!(subset, VertexSet::full(3))
            }
            other => panic!("unexpected {other:?}"),
        }
        let liar = |_: &Digraph, _: &VertexSet| Some(VertexSet::from_mask(0b11));
        assert!(matches!(
            list_color_with_kernels(&g, &l, &liar),
            Err(ColoringError::OracleFailure { .. })
        ));
    }

    #[test]
    fn list_count_mismatch() {
        let g = Digraph::new(2, []).unwrap();
        assert!(matches!(
            list_color_with_kernels(&g, &lists(&[&[0]]), &BruteForceOracle::default()),
            Err(ColoringError::Graph(GraphError::ListCountMismatch { .. }))
        ));
    }
}
