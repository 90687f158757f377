//! Immutable directed graphs on dense vertex ids, plus list assignments and
//! colorings over them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::vertex_set::{Vertex, VertexSet};

/// Interned color.
pub type ColorId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{num_vertices}")]
    EndpointOutOfRange { u: Vertex, v: Vertex, num_vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edges ({u}, {v}) and ({v}, {u}) are both present")]
    BidirectionalPair { u: Vertex, v: Vertex },
    #[error("vertex {vertex} outside 0..{num_vertices}")]
    VertexOutOfRange { vertex: Vertex, num_vertices: usize },
    #[error("{lists} lists given for a graph on {num_vertices} vertices")]
    ListCountMismatch { lists: usize, num_vertices: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Orientation of a simple graph: no loops, no antiparallel pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    num_edges: usize,
}

impl Digraph {
    /// Validates and builds a graph. Duplicate edges collapse.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= num_vertices || v >= num_vertices {
                return Err(GraphError::EndpointOutOfRange { u, v, num_vertices });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u, v));
        }
        for &(u, v) in &set {
            if u < v && set.contains(&(v, u)) {
                return Err(GraphError::BidirectionalPair { u, v });
            }
        }
        let mut out = vec![Vec::new(); num_vertices];
        // BTreeSet order keeps each adjacency list sorted.
        for &(u, v) in &set {
            out[u].push(v);
        }
        Ok(Digraph { out, num_edges: set.len() })
    }

    /// Builds from adjacency lists already known to form an orientation.
    /// Invariants are only re-checked in debug builds.
    pub(crate) fn from_adjacency(mut out: Vec<Vec<Vertex>>) -> Self {
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        let g = Digraph { num_edges: out.iter().map(Vec::len).sum(), out };
        debug_assert!(g.edges().all(|(u, v)| u != v && v < g.num_vertices() && !g.has_edge(v, u)));
        g
    }

    pub fn num_vertices(&self) -> usize {
        self.out.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    /// Out-neighbors of `v`, ascending. Panics if `v` is out of range.
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.out.len() && self.out[u].binary_search(&v).is_ok()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn outdegree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.out[v].len())
    }

    /// Number of out-neighbors of `v` that lie in `within`.
    pub fn outdegree_within(&self, v: Vertex, within: &VertexSet) -> usize {
        self.out[v].iter().filter(|&&w| within.contains(w)).count()
    }

    /// The graph with every edge reversed.
    pub fn reversed(&self) -> Digraph {
        let mut out = vec![Vec::new(); self.num_vertices()];
        for (u, v) in self.edges() {
            out[v].push(u);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        Digraph { out, num_edges: self.num_edges }
    }

    /// Subgraph induced on `s`, relabeled densely in ascending id order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Digraph, Relabeling), GraphError> {
        self.check_set(s)?;
        let new_to_old = s.to_vec();
        let mut old_to_new = vec![None; self.num_vertices()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut num_edges = 0;
        let out = new_to_old
            .iter()
            .map(|&old| {
                let list: Vec<Vertex> =
                    self.out[old].iter().filter_map(|&w| old_to_new[w]).collect();
                num_edges += list.len();
                list
            })
            .collect();
        Ok((Digraph { out, num_edges }, Relabeling { old_to_new, new_to_old }))
    }

    /// True iff no edge, in either direction, joins two members of `s`.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        Ok(s.iter().all(|u| self.out[u].iter().all(|&w| !s.contains(w))))
    }

    pub(crate) fn check_vertex(&self, vertex: Vertex) -> Result<(), GraphError> {
        if vertex < self.num_vertices() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex, num_vertices: self.num_vertices() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.last() {
            Some(vertex) => self.check_vertex(vertex),
            None => Ok(()),
        }
    }

    /// Serializes as `n m` followed by one `u v` line per edge, sorted.
    pub fn to_text(&self) -> String {
        let mut text = format!("{} {}\n", self.num_vertices(), self.num_edges);
        for (u, v) in self.edges() {
            text.push_str(&format!("{u} {v}\n"));
        }
        text
    }

    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let parse_err = |line: usize, message: String| GraphError::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header".into()))?;
        let (n, m) = parse_pair(header).map_err(|e| parse_err(hline, e))?;
        let mut edges = Vec::new();
        for (line, content) in lines {
            edges.push(parse_pair(content).map_err(|e| parse_err(line, e))?);
        }
        if edges.len() != m {
            return Err(parse_err(hline, format!("header declares {m} edges, found {}", edges.len())));
        }
        Digraph::new(n, edges)
    }
}

impl FromStr for Digraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        Digraph::from_text(s)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(format!("expected two integers, got {:?}", line));
    }
    let parse = |f: &str| f.parse::<usize>().map_err(|e| format!("{f:?}: {e}"));
    Ok((parse(fields[0])?, parse(fields[1])?))
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("num_vertices", &self.num_vertices())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex correspondence produced by [`Digraph::induced_subgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Vertex>,
}

/// Color lists `A_v`, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<ColorId>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<ColorId>>) -> Self {
        ListAssignment { lists }
    }

    /// Every vertex gets the same list.
    pub fn uniform(num_vertices: usize, colors: impl IntoIterator<Item = ColorId>) -> Self {
        let list: BTreeSet<ColorId> = colors.into_iter().collect();
        ListAssignment { lists: vec![list; num_vertices] }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: Vertex) -> &BTreeSet<ColorId> {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[BTreeSet<ColorId>] {
        &self.lists
    }
}

impl FromIterator<BTreeSet<ColorId>> for ListAssignment {
    fn from_iter<I: IntoIterator<Item = BTreeSet<ColorId>>>(iter: I) -> Self {
        ListAssignment { lists: iter.into_iter().collect() }
    }
}

/// Partial or complete assignment of colors to vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assigned: Vec<Option<ColorId>>,
}

impl Coloring {
    pub fn empty(num_vertices: usize) -> Self {
        Coloring { assigned: vec![None; num_vertices] }
    }

    pub fn from_colors(colors: impl IntoIterator<Item = ColorId>) -> Self {
        Coloring { assigned: colors.into_iter().map(Some).collect() }
    }

    pub fn get(&self, v: Vertex) -> Option<ColorId> {
        self.assigned.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: Vertex, color: ColorId) {
        self.assigned[v] = Some(color);
    }

    pub fn len(&self) -> usize {
        self.assigned.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assigned.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.assigned.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<ColorId>] {
        &self.assigned
    }
}

/// Outcome of [`verify_list_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringReport {
    Valid,
    Uncolored { vertex: Vertex },
    EdgeConflict { u: Vertex, v: Vertex, color: ColorId },
    NotInList { vertex: Vertex, color: ColorId },
}

impl ColoringReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ColoringReport::Valid)
    }
}

/// Checks completeness, then edges in lexicographic order, then list membership.
pub fn verify_list_coloring(
    g: &Digraph,
    lists: &ListAssignment,
    coloring: &Coloring,
) -> Result<ColoringReport, GraphError> {
    let n = g.num_vertices();
    if lists.len() != n {
        return Err(GraphError::ListCountMismatch { lists: lists.len(), num_vertices: n });
    }
    if let Some(vertex) = (0..n).find(|&v| coloring.get(v).is_none()) {
        return Ok(ColoringReport::Uncolored { vertex });
    }
    let color = |v: Vertex| coloring.get(v).expect("checked complete");
    if let Some((u, v)) = g.edges().find(|&(u, v)| color(u) == color(v)) {
        return Ok(ColoringReport::EdgeConflict { u, v, color: color(u) });
    }
    if let Some(vertex) = (0..n).find(|&v| !lists.list(v).contains(&color(v))) {
        return Ok(ColoringReport::NotInList { vertex, color: color(vertex) });
    }
    Ok(ColoringReport::Valid)
}
