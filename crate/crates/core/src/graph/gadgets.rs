//! The rigidity gadget: `H_n` is K_{n,n} on sides L, R plus a leftmost vertex
//! joined to all of L and a rightmost vertex joined to all of R. `G_n` hangs
//! one external edge on each end.

use super::{EdgeStream, VertexId};

/// Hands out fresh vertex labels.
#[derive(Clone, Debug, Default)]
pub struct LabelAllocator {
    next: u64,
}

impl LabelAllocator {
    pub fn starting_at(next: u64) -> Self {
        LabelAllocator { next }
    }

    pub fn fresh(&mut self) -> VertexId {
        let v = VertexId(self.next);
        self.next += 1;
        v
    }

    pub fn fresh_many(&mut self, k: usize) -> Vec<VertexId> {
        (0..k).map(|_| self.fresh()).collect()
    }
}

/// Edge list of one `H_n`, revealed as: leftmost edges, K_{n,n} row by row,
/// rightmost edges.
#[derive(Clone, Debug)]
pub struct GadgetH {
    pub edges: Vec<(VertexId, VertexId)>,
    pub leftmost: VertexId,
    pub rightmost: VertexId,
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

/// Builds `H_n` between existing (or fresh) end vertices; interior vertices
/// come from `labels`.
pub fn build_h_between(n: usize, leftmost: VertexId, rightmost: VertexId, labels: &mut LabelAllocator) -> GadgetH {
    assert!(n >= 1, "H_n needs n >= 1");
    let left = labels.fresh_many(n);
    let right = labels.fresh_many(n);
    let mut edges = Vec::with_capacity(n * n + 2 * n);
    edges.extend(left.iter().map(|&l| (leftmost, l)));
    for &l in &left {
        edges.extend(right.iter().map(|&r| (l, r)));
    }
    edges.extend(right.iter().map(|&r| (r, rightmost)));
    GadgetH { edges, leftmost, rightmost, left, right }
}

/// `H_n` on fresh labels starting at 0.
pub fn build_h(n: usize) -> GadgetH {
    let mut labels = LabelAllocator::default();
    let leftmost = labels.fresh();
    let rightmost = labels.fresh();
    build_h_between(n, leftmost, rightmost, &mut labels)
}

/// `G_n` as a stream `e_l`, the `H_n` edges, `e_r`.
#[derive(Clone, Debug)]
pub struct GadgetG {
    pub stream: EdgeStream,
    /// Arrival index of `e_l`.
    pub e_left: usize,
    /// Arrival index of `e_r`.
    pub e_right: usize,
    pub h: GadgetH,
}

pub fn build_g(n: usize) -> GadgetG {
    let mut labels = LabelAllocator::default();
    let x1 = labels.fresh();
    let x2 = labels.fresh();
    let leftmost = labels.fresh();
    let rightmost = labels.fresh();
    let h = build_h_between(n, leftmost, rightmost, &mut labels);
    let mut pairs = vec![(x1.0, leftmost.0)];
    pairs.extend(h.edges.iter().map(|&(a, b)| (a.0, b.0)));
    pairs.push((rightmost.0, x2.0));
    let stream = EdgeStream::from_pairs(pairs).expect("gadget is simple");
    let e_right = stream.len() - 1;
    GadgetG { stream, e_left: 0, e_right, h }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn h1_is_a_path() {
        let h = build_h(1);
        assert_eq!(h.edges.len(), 3);
        let g = Graph::from_pairs(h.edges.iter().map(|&(a, b)| (a.0, b.0))).unwrap();
        assert!(g.is_forest());
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn h_edge_counts_and_degrees() {
        assert_eq!(build_h(4).edges.len(), 24);
        let h2 = build_h(2);
        assert_eq!(h2.edges.len(), 8);
        let g = Graph::from_pairs(h2.edges.iter().map(|&(a, b)| (a.0, b.0))).unwrap();
        for v in h2.left.iter().chain(&h2.right) {
            assert_eq!(g.degree(g.index_of(*v).unwrap()), 3);
        }
        assert_eq!(g.degree(g.index_of(h2.leftmost).unwrap()), 2);
    }

    #[test]
    fn g_shapes() {
        let g1 = build_g(1);
        assert_eq!(g1.stream.len(), 5);
        assert!(Graph::from_stream(&g1.stream).is_forest());
        let g4 = build_g(4);
        assert_eq!(g4.stream.len(), 26);
        let graph = Graph::from_stream(&g4.stream);
        assert_eq!(graph.max_degree(), 5);
        assert!(graph.is_bipartite());
        assert_eq!(g4.e_right, 25);
    }
}
