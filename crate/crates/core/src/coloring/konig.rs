//! Δ-edge-coloring of bipartite graphs by alternating-path flips.

use super::{Color, Coloring, ColoringError};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Colors edges in arrival order. For edge (u, v) with `a` free at u and `b`
/// free at v: if `a` is also free at v use it; otherwise flip the a/b path
/// leaving v (it cannot reach u in a bipartite graph) and then use `a`.
pub fn konig_color(g: &Graph) -> Result<Coloring, ColoringError> {
    if !g.is_bipartite() {
        return Err(ColoringError::NotBipartite);
    }
    let delta = g.max_degree();
    let mut color: Vec<Color> = vec![0; g.m()];
    let mut at = vec![vec![NONE; delta + 1]; g.n()];
    let free = |at: &Vec<Vec<usize>>, v: usize| -> Color {
        (1..=delta).find(|&c| at[v][c] == NONE).expect("degree bound leaves a free color") as Color
    };
    for e in 0..g.m() {
        let (u, v) = g.ends(e);
        let a = free(&at, u);
        if at[v][a as usize] != NONE {
            let b = free(&at, v);
            let mut path = Vec::new();
            let (mut x, mut want) = (v, a);
            loop {
                let f = at[x][want as usize];
                if f == NONE {
                    break;
                }
                path.push(f);
                let (p, q) = g.ends(f);
                x = if p == x { q } else { p };
                debug_assert_ne!(x, u, "alternating path reached u: graph not bipartite");
                want = if want == a { b } else { a };
            }
            for &f in &path {
                let (p, q) = g.ends(f);
                at[p][color[f] as usize] = NONE;
                at[q][color[f] as usize] = NONE;
            }
            for &f in &path {
                let (p, q) = g.ends(f);
                let swapped = if color[f] == a { b } else { a };
                color[f] = swapped;
                at[p][swapped as usize] = f;
                at[q][swapped as usize] = f;
            }
        }
        color[e] = a;
        at[u][a as usize] = e;
        at[v][a as usize] = e;
    }
    Ok(Coloring::from_colors(color))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use crate::graph::{gen_bipartite, gen_forest};
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        let c4 = Graph::from_pairs([(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = konig_color(&c4).unwrap();
        assert!(is_proper(&c4, &c));
        assert_eq!(c.colors_used(), 2);
        let k33 = Graph::from_stream(&gen_bipartite(3, 3, 1.0, 0));
        let c = konig_color(&k33).unwrap();
        assert!(is_proper(&k33, &c));
        assert_eq!(c.colors_used(), 3);
    }

    #[test]
    fn rejects_odd_cycle() {
        let c3 = Graph::from_pairs([(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(konig_color(&c3), Err(ColoringError::NotBipartite));
    }

    #[test]
    fn forests() {
        for seed in 0..10 {
            let g = Graph::from_stream(&gen_forest(80, seed));
            let c = konig_color(&g).unwrap();
            assert!(is_proper(&g, &c));
            assert_eq!(c.colors_used(), g.max_degree());
        }
    }

    proptest! {
        #[test]
        fn exactly_delta_colors(a in 1usize..9, b in 1usize..9, p in 0.1f64..1.0, seed in 0u64..1000) {
            let g = Graph::from_stream(&gen_bipartite(a, b, p, seed));
            let c = konig_color(&g).unwrap();
            prop_assert!(is_proper(&g, &c));
            prop_assert_eq!(c.colors_used(), g.max_degree());
        }
    }
}
