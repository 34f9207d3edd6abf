//! Misra–Gries fan rotation: a proper (Δ+1)-edge-coloring in O(nm).

use super::{Color, Coloring};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct State<'g> {
    g: &'g Graph,
    color: Vec<Color>,
    /// at[v][c]: edge at v colored c, or NONE. Index 0 unused.
    at: Vec<Vec<usize>>,
}

impl<'g> State<'g> {
    fn is_free(&self, v: usize, c: Color) -> bool {
        self.at[v][c as usize] == NONE
    }

    fn free_color(&self, v: usize) -> Color {
        (1..self.at[v].len()).find(|&c| self.at[v][c] == NONE).expect("Δ+1 colors leave one free") as Color
    }

    fn set(&mut self, e: usize, c: Color) {
        let (a, b) = self.g.ends(e);
        debug_assert!(self.is_free(a, c) && self.is_free(b, c));
        self.color[e] = c;
        self.at[a][c as usize] = e;
        self.at[b][c as usize] = e;
    }

    fn clear(&mut self, e: usize) {
        let c = self.color[e];
        if c == 0 {
            return;
        }
        let (a, b) = self.g.ends(e);
        self.at[a][c as usize] = NONE;
        self.at[b][c as usize] = NONE;
        self.color[e] = 0;
    }

    fn edge_between(&self, u: usize, w: usize) -> usize {
        self.g.incident(u).iter().find(|&&(x, _)| x == w).map(|&(_, e)| e).expect("fan vertices are neighbors")
    }

    /// Swaps colors c and d along the maximal c/d path starting at `start`.
    fn invert_path(&mut self, start: usize, c: Color, d: Color) {
        if c == d {
            return;
        }
        let mut path = Vec::new();
        let mut v = start;
        let mut want = d;
        let mut prev = NONE;
        loop {
            let e = self.at[v][want as usize];
            if e == NONE || e == prev {
                break;
            }
            path.push(e);
            let (a, b) = self.g.ends(e);
            v = if a == v { b } else { a };
            prev = e;
            want = if want == c { d } else { c };
        }
        for &e in &path {
            self.clear(e);
        }
        // Colors alternate d, c, d, ... along the path; swap them.
        for (i, &e) in path.iter().enumerate() {
            self.set(e, if i % 2 == 0 { c } else { d });
        }
    }

    fn color_edge(&mut self, e: usize) {
        let (u, v) = self.g.ends(e);
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.g.n()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = self.g.incident(u).iter().find(|&&(w, f)| {
                !in_fan[w] && self.color[f] != 0 && self.is_free(last, self.color[f])
            });
            match next {
                Some(&(w, _)) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());
        self.invert_path(u, c, d);

        // Longest prefix that is still a fan and ends at a vertex where d is free.
        let mut end = None;
        for i in 0..fan.len() {
            if i > 0 {
                let f = self.edge_between(u, fan[i]);
                if self.color[f] == 0 || !self.is_free(fan[i - 1], self.color[f]) {
                    break;
                }
            }
            if self.is_free(fan[i], d) {
                end = Some(i);
                break;
            }
        }
        let end = end.expect("Misra-Gries invariant: some fan prefix admits d");

        let fan_edges: Vec<usize> = fan[..=end].iter().map(|&w| self.edge_between(u, w)).collect();
        let shifted: Vec<Color> = fan_edges[1..].iter().map(|&f| self.color[f]).collect();
        for &f in &fan_edges[1..] {
            self.clear(f);
        }
        for (i, &col) in shifted.iter().enumerate() {
            self.set(fan_edges[i], col);
        }
        self.set(fan_edges[end], d);
    }
}

/// Proper coloring with at most Δ+1 colors.
pub fn vizing_plus_one(g: &Graph) -> Coloring {
    let palette = g.max_degree() + 1;
    let mut state = State { g, color: vec![0; g.m()], at: vec![vec![NONE; palette + 1]; g.n()] };
    for e in 0..g.m() {
        state.color_edge(e);
    }
    Coloring::from_colors(state.color)
}
