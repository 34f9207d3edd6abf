//! Simple undirected graphs revealed as edge streams.
//!
//! Vertices are opaque integer labels. A [`Graph`] assigns each label a dense
//! index in order of first appearance and keeps edge indices equal to arrival
//! positions, so colorings and advice can be addressed by arrival index.

mod degeneracy;
mod gadgets;
mod generate;
mod stream;

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use degeneracy::{classify, degeneracy, DegeneracyOrder, EdgeClassification};
pub use gadgets::{build_g, build_h, build_h_between, GadgetG, GadgetH, LabelAllocator};
pub use generate::{gen_bipartite, gen_d_degenerate, gen_forest, gen_star, gen_star_minus_one};
pub use stream::{parse_stream, serialize_stream};

/// Opaque vertex label as it appears in a stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One request of the online input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    /// 0-based position in the stream.
    pub arrival: usize,
}

impl Edge {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    /// The endpoint that is not `w`. Panics if `w` is not an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            assert_eq!(w, self.v, "{w} is not an endpoint of edge {}", self.arrival);
            self.u
        }
    }

    fn key(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate edge {u} {v} (line {line})")]
    DuplicateEdge { u: VertexId, v: VertexId, line: usize },
    #[error("self-loop at vertex {v} (line {line})")]
    SelfLoop { v: VertexId, line: usize },
}

/// Ordered arrival sequence of the edges of a simple graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeStream {
    edges: Vec<Edge>,
}

impl EdgeStream {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a stream from endpoint pairs in arrival order.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for (i, (u, v)) in pairs.into_iter().enumerate() {
            let (u, v) = (VertexId(u), VertexId(v));
            let line = i + 1;
            if u == v {
                return Err(GraphError::SelfLoop { v, line });
            }
            let edge = Edge { u, v, arrival: i };
            if !seen.insert(edge.key()) {
                return Err(GraphError::DuplicateEdge { u, v, line });
            }
            edges.push(edge);
        }
        Ok(EdgeStream { edges })
    }

    /// Appends an edge. Linear in the stream length; builders that know their
    /// output is simple should prefer [`EdgeStream::from_pairs`] once.
    pub fn push(&mut self, u: VertexId, v: VertexId) -> Result<&Edge, GraphError> {
        let line = self.edges.len() + 1;
        if u == v {
            return Err(GraphError::SelfLoop { v, line });
        }
        let candidate = Edge { u, v, arrival: self.edges.len() };
        if self.edges.iter().any(|e| e.key() == candidate.key()) {
            return Err(GraphError::DuplicateEdge { u, v, line });
        }
        self.edges.push(candidate);
        Ok(self.edges.last().unwrap())
    }

    pub(crate) fn from_edges_unchecked(edges: Vec<Edge>) -> Self {
        debug_assert!(edges.iter().enumerate().all(|(i, e)| e.arrival == i && e.u != e.v));
        EdgeStream { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.edges.iter()
    }

    /// Same edges and order, with endpoints of edge `i` swapped where `flip[i]`.
    pub fn reoriented(&self, flip: &[bool]) -> EdgeStream {
        assert_eq!(flip.len(), self.edges.len());
        let edges = self
            .edges
            .iter()
            .zip(flip)
            .map(|(e, &f)| if f { Edge { u: e.v, v: e.u, arrival: e.arrival } } else { *e })
            .collect();
        EdgeStream { edges }
    }

    /// The sub-stream of the selected arrivals, re-indexed 0..k in the same
    /// relative order.
    pub fn substream(&self, arrivals: &[usize]) -> EdgeStream {
        let edges = arrivals
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let e = self.edges[a];
                Edge { u: e.u, v: e.v, arrival: i }
            })
            .collect();
        EdgeStream { edges }
    }
}

impl<'a> IntoIterator for &'a EdgeStream {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// Adjacency view of a stream. Vertex indices are dense in order of first
/// appearance; edge indices equal arrival indices.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    ends: Vec<(usize, usize)>,
    /// Per vertex: (neighbor, edge) in arrival order.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn from_stream(stream: &EdgeStream) -> Graph {
        let mut g = Graph { labels: Vec::new(), index: HashMap::new(), ends: Vec::new(), adj: Vec::new() };
        for e in stream {
            let a = g.intern(e.u);
            let b = g.intern(e.v);
            let id = g.ends.len();
            g.ends.push((a, b));
            g.adj[a].push((b, id));
            g.adj[b].push((a, id));
        }
        g
    }

    /// Convenience for tests and fixtures: edges in the given order.
    pub fn from_pairs<I>(pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        Ok(Graph::from_stream(&EdgeStream::from_pairs(pairs)?))
    }

    fn intern(&mut self, label: VertexId) -> usize {
        if let Some(&i) = self.index.get(&label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label);
        self.index.insert(label, i);
        self.adj.push(Vec::new());
        i
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> VertexId {
        self.labels[v]
    }

    pub fn index_of(&self, label: VertexId) -> Option<usize> {
        self.index.get(&label).copied()
    }

    /// Dense endpoints of edge `e`, in stream orientation.
    pub fn ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    pub fn edge_ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    /// (neighbor, edge) pairs of `v`, in arrival order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn to_stream(&self) -> EdgeStream {
        let edges = self
            .ends
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Edge { u: self.labels[a], v: self.labels[b], arrival: i })
            .collect();
        EdgeStream { edges }
    }

    /// Graph on the given edges (vertex set = their endpoints). Returned edge
    /// `i` is `edges[i]` of `self`.
    pub fn edge_subgraph(&self, edges: &[usize]) -> Graph {
        let pairs: Vec<Edge> = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let (a, b) = self.ends[e];
                Edge { u: self.labels[a], v: self.labels[b], arrival: i }
            })
            .collect();
        Graph::from_stream(&EdgeStream { edges: pairs })
    }

    /// Proper 2-coloring of the vertices if the graph is bipartite.
    pub fn two_color(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        let mut stack = Vec::new();
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &(w, _) in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_color().is_some()
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.ends {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_indices_follow_first_appearance() {
        let g = Graph::from_pairs([(7, 3), (3, 9)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.label(0), VertexId(7));
        assert_eq!(g.index_of(VertexId(9)), Some(2));
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.incident(1), &[(0, 0), (2, 1)]);
    }

    #[test]
    fn push_rejects_reversed_duplicate() {
        let mut s = EdgeStream::new();
        s.push(VertexId(1), VertexId(2)).unwrap();
        assert!(matches!(s.push(VertexId(2), VertexId(1)), Err(GraphError::DuplicateEdge { .. })));
    }

    #[test]
    fn bipartite_and_forest_checks() {
        let c5 = Graph::from_pairs([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!c5.is_bipartite());
        assert!(!c5.is_forest());
        let c4 = Graph::from_pairs([(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_bipartite());
        let path = Graph::from_pairs([(0, 1), (1, 2)]).unwrap();
        assert!(path.is_forest());
    }

    #[test]
    fn substream_reindexes() {
        let s = EdgeStream::from_pairs([(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = s.substream(&[0, 2]);
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.edges()[1].arrival, 1);
        assert_eq!(sub.edges()[1].u, VertexId(2));
    }
}
