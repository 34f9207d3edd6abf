//! Seeded instance generators.
//!
//! All generators draw from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! reproduces the same stream on every platform. Fixtures should store the
//! generated stream rather than the seed.

use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Edge, EdgeStream, VertexId};

fn finish(mut pairs: Vec<(u64, u64)>, rng: &mut ChaCha8Rng) -> EdgeStream {
    pairs.shuffle(rng);
    let edges = pairs
        .into_iter()
        .enumerate()
        .map(|(arrival, (u, v))| {
            let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            Edge { u: VertexId(u), v: VertexId(v), arrival }
        })
        .collect();
    EdgeStream::from_edges_unchecked(edges)
}

/// Random graph of degeneracy at most `d`: vertex `i` is wired to between 1
/// and `min(i, d)` distinct earlier vertices chosen uniformly. Labels are a
/// random permutation of `0..n`, arrival order and endpoint order are
/// shuffled.
pub fn gen_d_degenerate(n: usize, d: usize, seed: u64) -> EdgeStream {
    assert!(n >= 1 && d >= 1, "gen_d_degenerate needs n >= 1 and d >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<u64> = (0..n as u64).collect();
    labels.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 1..n {
        let k = rng.gen_range(1..=i.min(d));
        for j in index::sample(&mut rng, i, k) {
            pairs.push((labels[i], labels[j]));
        }
    }
    finish(pairs, &mut rng)
}

/// Random forest on labels `0..n`: each vertex after the first attaches to a
/// uniform earlier vertex with probability 9/10.
pub fn gen_forest(n: usize, seed: u64) -> EdgeStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 1..n as u64 {
        if rng.gen_bool(0.9) {
            pairs.push((i, rng.gen_range(0..i)));
        }
    }
    finish(pairs, &mut rng)
}

/// Random bipartite graph with sides `0..a` and `a..a+b`; every cross pair
/// is present independently with probability `p`.
pub fn gen_bipartite(a: usize, b: usize, p: f64, seed: u64) -> EdgeStream {
    assert!((0.0..=1.0).contains(&p), "edge probability must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for l in 0..a as u64 {
        for r in 0..b as u64 {
            if rng.gen_bool(p) {
                pairs.push((l, a as u64 + r));
            }
        }
    }
    finish(pairs, &mut rng)
}

/// K_{1,delta}: center 0, leaves 1..=delta revealed in order.
pub fn gen_star(delta: usize) -> EdgeStream {
    EdgeStream::from_pairs((1..=delta as u64).map(|leaf| (0, leaf))).expect("star is simple")
}

/// K_{1,delta-1}, the star shape of the star-row adversary.
pub fn gen_star_minus_one(delta: usize) -> EdgeStream {
    gen_star(delta.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degeneracy, Graph};

    #[test]
    fn tiny_instances() {
        assert!(gen_d_degenerate(1, 5, 0).is_empty());
        let f = Graph::from_stream(&gen_d_degenerate(5, 1, 7));
        assert!(f.is_forest());
        assert!(degeneracy(&f).0 <= 1);
    }

    #[test]
    fn degenerate_bound_holds() {
        let g = Graph::from_stream(&gen_d_degenerate(40, 3, 1));
        assert!(degeneracy(&g).0 <= 3);
        assert_eq!(gen_d_degenerate(40, 3, 1), gen_d_degenerate(40, 3, 1));
        assert_ne!(gen_d_degenerate(40, 3, 1), gen_d_degenerate(40, 3, 2));
    }

    #[test]
    fn stars_and_complete_bipartite() {
        let s = gen_star(3);
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(|e| e.u == VertexId(0)));
        assert_eq!(gen_star_minus_one(4).len(), 3);
        let k33 = Graph::from_stream(&gen_bipartite(3, 3, 1.0, 4));
        assert_eq!(k33.m(), 9);
        assert!(k33.is_bipartite());
        assert_eq!(gen_bipartite(3, 3, 0.0, 4).len(), 0);
    }

    #[test]
    fn forest_has_degeneracy_one() {
        let g = Graph::from_stream(&gen_forest(50, 9));
        assert!(g.is_forest());
        assert_eq!(degeneracy(&g).0, 1);
    }

    #[test]
    fn random_bipartite_is_two_colorable() {
        for seed in 0..5 {
            assert!(Graph::from_stream(&gen_bipartite(6, 9, 0.4, seed)).is_bipartite());
        }
    }
}
