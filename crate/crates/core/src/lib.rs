//! Constructive list coloring for digraphs whose induced subgraphs all have
//! kernels, and a Dinitz solver built on it.
//!
//! The pieces, bottom up:
//!
//! * [`digraph`]: immutable orientations, induced subgraphs, list colorings.
//! * [`kernel`]: kernel checks, exhaustive kernel search, property-X audits.
//! * [`stable_matching`]: deferred acceptance with forbidden pairs.
//! * [`galvin`]: the Latin-square orientation of the `n x n` grid, the
//!   stable-matching kernel oracle, the coloring loop and the Dinitz solver.
//! * [`format`] and [`cli`]: file formats and the `dinitz` command.
//!
//! ```
//! use dinitz::galvin::{solve_dinitz, verify_generalized_latin, DinitzInstance};
//!
//! let lists = vec![vec!["a".to_string(), "b".to_string()]; 4];
//! let (inst, _) = DinitzInstance::from_labels(2, lists).unwrap();
//! let grid = solve_dinitz(&inst).unwrap();
//! assert!(verify_generalized_latin(&inst, &grid).unwrap().is_valid());
//! assert_eq!(grid.label_rows(&inst), vec![vec!["b", "a"], vec!["a", "b"]]);
//! ```

pub mod cli;
pub mod digraph;
pub mod format;
pub mod galvin;
pub mod kernel;
pub mod stable_matching;
pub mod vertex_set;

pub use digraph::{verify_list_coloring, ColorId, Coloring, ColoringReport, Digraph, GraphError, ListAssignment};
pub use vertex_set::{Vertex, VertexSet};
