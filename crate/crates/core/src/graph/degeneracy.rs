use std::collections::BTreeSet;

use super::{Graph, VertexId};

/// A vertex ordering in which every vertex has at most `d` neighbors of
/// smaller rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    order: Vec<usize>,
    rank: Vec<usize>,
    d: usize,
}

impl DegeneracyOrder {
    /// Wraps an explicit ordering of the dense vertex indices of `g`; `d` is
    /// the largest back-degree it induces. Panics unless `order` is a
    /// permutation of `0..g.n()`.
    pub fn from_order(g: &Graph, order: Vec<usize>) -> DegeneracyOrder {
        assert_eq!(order.len(), g.n(), "ordering must cover every vertex");
        let mut rank = vec![usize::MAX; g.n()];
        for (pos, &v) in order.iter().enumerate() {
            assert_eq!(rank[v], usize::MAX, "vertex {v} listed twice");
            rank[v] = pos;
        }
        let d = (0..g.n())
            .map(|v| g.incident(v).iter().filter(|&&(w, _)| rank[w] < rank[v]).count())
            .max()
            .unwrap_or(0);
        DegeneracyOrder { order, rank, d }
    }

    /// Same as [`DegeneracyOrder::from_order`] but addressed by label.
    pub fn from_labels(g: &Graph, labels: &[VertexId]) -> Option<DegeneracyOrder> {
        let order = labels.iter().map(|&l| g.index_of(l)).collect::<Option<Vec<_>>>()?;
        Some(DegeneracyOrder::from_order(g, order))
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// Maximum back-degree under this ordering.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn labels(&self, g: &Graph) -> Vec<VertexId> {
        self.order.iter().map(|&v| g.label(v)).collect()
    }
}

/// Degeneracy by min-degree peeling, ties broken by the smallest label. The
/// returned order is the reverse peeling order.
pub fn degeneracy(g: &Graph) -> (usize, DegeneracyOrder) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: BTreeSet<(usize, VertexId, usize)> = (0..n).map(|v| (deg[v], g.label(v), v)).collect();
    let mut peeled = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((k, _, v)) = queue.pop_first() {
        d = d.max(k);
        removed[v] = true;
        peeled.push(v);
        for &(w, _) in g.incident(v) {
            if !removed[w] {
                queue.remove(&(deg[w], g.label(w), w));
                deg[w] -= 1;
                queue.insert((deg[w], g.label(w), w));
            }
        }
    }
    peeled.reverse();
    let ord = DegeneracyOrder::from_order(g, peeled);
    debug_assert_eq!(ord.d, d);
    (d, ord)
}

/// Front/back orientation of every edge under an ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    /// Per edge: the endpoint of lower rank (the edge is a front-edge there).
    pub front: Vec<usize>,
    /// Per edge: the endpoint of higher rank.
    pub back: Vec<usize>,
    /// Per vertex: number of front-edges.
    pub front_degree: Vec<usize>,
    /// Per vertex: number of back-edges.
    pub back_degree: Vec<usize>,
}

pub fn classify(g: &Graph, ord: &DegeneracyOrder) -> EdgeClassification {
    let mut c = EdgeClassification {
        front: Vec::with_capacity(g.m()),
        back: Vec::with_capacity(g.m()),
        front_degree: vec![0; g.n()],
        back_degree: vec![0; g.n()],
    };
    for &(a, b) in g.edge_ends() {
        let (f, k) = if ord.rank(a) < ord.rank(b) { (a, b) } else { (b, a) };
        c.front.push(f);
        c.back.push(k);
        c.front_degree[f] += 1;
        c.back_degree[k] += 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_d_degenerate, gen_forest};

    fn complete(n: u64) -> Graph {
        let pairs: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph::from_pairs(pairs).unwrap()
    }

    /// Least max back-degree over all vertex orderings.
    fn brute_force_degeneracy(g: &Graph) -> usize {
        fn permute(g: &Graph, prefix: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut usize) {
            if prefix.len() == g.n() {
                *best = (*best).min(DegeneracyOrder::from_order(g, prefix.clone()).d());
                return;
            }
            for v in 0..g.n() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    permute(g, prefix, used, best);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = usize::MAX;
        permute(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    #[test]
    fn path_is_one_degenerate() {
        let g = Graph::from_pairs([(0, 1), (1, 2)]).unwrap();
        assert_eq!(degeneracy(&g).0, 1);
    }

    #[test]
    fn k4_matches_brute_force() {
        let k4 = complete(4);
        assert_eq!(brute_force_degeneracy(&k4), 3);
        let (d, ord) = degeneracy(&k4);
        assert_eq!(d, 3);
        assert_eq!(ord.d(), 3);
    }

    #[test]
    fn peeling_matches_brute_force_on_small_graphs() {
        for seed in 0..20 {
            let g = Graph::from_stream(&gen_d_degenerate(6, 1 + (seed as usize % 3), seed));
            assert_eq!(degeneracy(&g).0, brute_force_degeneracy(&g), "seed {seed}");
        }
    }

    #[test]
    fn ties_break_on_smallest_label() {
        // Triangle: all degrees equal, so label 5 peels first and lands last.
        let g = Graph::from_pairs([(9, 7), (7, 5), (5, 9)]).unwrap();
        let (_, ord) = degeneracy(&g);
        assert_eq!(ord.labels(&g), vec![VertexId(9), VertexId(7), VertexId(5)]);
    }

    #[test]
    fn star_with_center_last() {
        let g = Graph::from_pairs([(0, 1), (0, 2), (0, 3)]).unwrap();
        let ord = DegeneracyOrder::from_labels(&g, &[VertexId(1), VertexId(2), VertexId(3), VertexId(0)]).unwrap();
        let c = classify(&g, &ord);
        let center = g.index_of(VertexId(0)).unwrap();
        assert_eq!(c.front_degree[center], 0);
        assert_eq!(c.back_degree[center], 3);
        assert_eq!(ord.d(), 3);
    }

    #[test]
    fn path_classification() {
        let g = Graph::from_pairs([(0, 1), (1, 2)]).unwrap();
        let ord = DegeneracyOrder::from_order(&g, vec![0, 1, 2]);
        let c = classify(&g, &ord);
        assert_eq!(c.front[0], 0);
        assert_eq!(c.front_degree, vec![1, 1, 0]);
    }

    #[test]
    fn generated_two_degenerate_back_degrees() {
        for seed in 0..10 {
            let g = Graph::from_stream(&gen_d_degenerate(20, 2, seed));
            let (d, ord) = degeneracy(&g);
            assert!(d <= 2);
            let c = classify(&g, &ord);
            assert!(c.back_degree.iter().all(|&k| k <= 2));
            assert_eq!(c.front_degree.iter().sum::<usize>(), g.m());
        }
    }

    #[test]
    fn forests_are_one_degenerate() {
        for seed in 0..10 {
            let g = Graph::from_stream(&gen_forest(50, seed));
            let (d, _) = degeneracy(&g);
            assert!(d <= 1);
            assert!(d <= g.max_degree());
        }
    }
}
