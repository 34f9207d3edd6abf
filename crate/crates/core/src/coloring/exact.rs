//! Complete backtracking search for k-edge-colorings.
//!
//! Branches on the uncolored edge with the fewest available colors (ties:
//! most uncolored neighbors, then lowest index). New colors are introduced in
//! increasing order only, so every coloring is explored up to a renaming of
//! its colors. After each assignment a Hall-type check runs at every touched
//! vertex: the colors still free there must cover its uncolored edges.

use std::ops::ControlFlow;

use super::{konig_color, vizing_plus_one, Color, Coloring, ColoringError};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Width of the color bit masks used by the search.
pub const MAX_SEARCH_COLORS: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactColorer {
    /// Color assignments tried before giving up with `ResourceLimit`.
    pub node_budget: u64,
    /// Answer from Vizing (k > Δ), König (bipartite, k = Δ), or immediately
    /// (k < Δ) instead of searching. Disable to exercise the search itself.
    pub fast_paths: bool,
}

impl Default for ExactColorer {
    fn default() -> Self {
        ExactColorer { node_budget: DEFAULT_NODE_BUDGET, fast_paths: true }
    }
}

impl ExactColorer {
    pub fn with_budget(node_budget: u64) -> Self {
        ExactColorer { node_budget, ..Default::default() }
    }

    pub fn search_only(node_budget: u64) -> Self {
        ExactColorer { node_budget, fast_paths: false }
    }

    /// A proper coloring with at most `k` colors, or `None` if none exists.
    pub fn color(&self, g: &Graph, k: usize) -> Result<Option<Coloring>, ColoringError> {
        assert!(k >= 1, "color budget must be positive");
        if g.m() == 0 {
            return Ok(Some(Coloring::empty(0)));
        }
        let delta = g.max_degree();
        if self.fast_paths {
            if k < delta {
                return Ok(None);
            }
            if k > delta {
                return Ok(Some(vizing_plus_one(g)));
            }
            if g.is_bipartite() {
                return konig_color(g).map(Some);
            }
        }
        self.color_with(g, k, &[])
    }

    /// Like [`ExactColorer::color`], always by search, with some edges
    /// pre-assigned. Symmetry breaking is kept only when the fixed colors form
    /// a prefix `1..=t`.
    pub fn color_with(&self, g: &Graph, k: usize, fixed: &[(usize, Color)]) -> Result<Option<Coloring>, ColoringError> {
        let mut search = Search::new(g, k, self.node_budget, true)?;
        if !search.fix(fixed) {
            return Ok(None);
        }
        let mut found = None;
        search.run(&mut |colors: &[Color]| {
            found = Some(Coloring::from_colors(colors.to_vec()));
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    /// Visits every proper coloring with colors from `1..=k` (no symmetry
    /// breaking). Returns the number of colorings visited.
    pub fn enumerate<F>(&self, g: &Graph, k: usize, mut visit: F) -> Result<u64, ColoringError>
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        let mut search = Search::new(g, k, self.node_budget, false)?;
        let mut count = 0;
        search.run(&mut |colors: &[Color]| {
            count += 1;
            visit(colors)
        })?;
        Ok(count)
    }
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    full: u128,
    /// Per vertex: colors on incident colored edges.
    used: Vec<u128>,
    /// Per vertex: number of uncolored incident edges.
    open: Vec<usize>,
    color: Vec<Color>,
    remaining: usize,
    symmetric: bool,
    /// Highest color that may still be in use; colors above it are
    /// interchangeable when `symmetric`.
    top: Color,
    nodes: u64,
    budget: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, budget: u64, symmetric: bool) -> Result<Self, ColoringError> {
        if k > MAX_SEARCH_COLORS {
            return Err(ColoringError::PaletteTooWide { k, max: MAX_SEARCH_COLORS });
        }
        let full = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
        Ok(Search {
            g,
            k,
            full,
            used: vec![0; g.n()],
            open: (0..g.n()).map(|v| g.degree(v)).collect(),
            color: vec![0; g.m()],
            remaining: g.m(),
            symmetric,
            top: 0,
            nodes: 0,
            budget,
        })
    }

    fn bit(c: Color) -> u128 {
        1u128 << (c - 1)
    }

    fn fix(&mut self, fixed: &[(usize, Color)]) -> bool {
        let mut distinct: Vec<Color> = fixed.iter().map(|&(_, c)| c).collect();
        distinct.sort_unstable();
        distinct.dedup();
        let prefix = distinct.iter().enumerate().all(|(i, &c)| c as usize == i + 1);
        if !prefix {
            self.symmetric = false;
        }
        self.top = distinct.len() as Color;
        for &(e, c) in fixed {
            if c == 0 || c as usize > self.k || self.color[e] != 0 {
                return false;
            }
            let (a, b) = self.g.ends(e);
            if (self.used[a] | self.used[b]) & Self::bit(c) != 0 {
                return false;
            }
            self.assign(e, c);
        }
        true
    }

    fn assign(&mut self, e: usize, c: Color) {
        let (a, b) = self.g.ends(e);
        self.color[e] = c;
        self.used[a] |= Self::bit(c);
        self.used[b] |= Self::bit(c);
        self.open[a] -= 1;
        self.open[b] -= 1;
        self.remaining -= 1;
    }

    fn unassign(&mut self, e: usize) {
        let (a, b) = self.g.ends(e);
        let c = self.color[e];
        self.color[e] = 0;
        self.used[a] &= !Self::bit(c);
        self.used[b] &= !Self::bit(c);
        self.open[a] += 1;
        self.open[b] += 1;
        self.remaining += 1;
    }

    fn available(&self, e: usize) -> u128 {
        let (a, b) = self.g.ends(e);
        self.full & !(self.used[a] | self.used[b])
    }

    /// Most constrained uncolored edge, or None when all are colored.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for e in 0..self.g.m() {
            if self.color[e] != 0 {
                continue;
            }
            let avail = self.available(e).count_ones();
            let (a, b) = self.g.ends(e);
            let pressure = self.open[a] + self.open[b];
            let better = match best {
                None => true,
                Some((ba, bp, _)) => avail < ba || (avail == ba && pressure > bp),
            };
            if better {
                best = Some((avail, pressure, e));
                if avail == 0 {
                    break;
                }
            }
        }
        best.map(|(_, _, e)| e)
    }

    /// Hall check at `v`: free colors reachable by its uncolored edges must
    /// be at least as many as those edges.
    fn vertex_ok(&self, v: usize) -> bool {
        let open = self.open[v];
        if open == 0 {
            return true;
        }
        let free = self.full & !self.used[v];
        if (free.count_ones() as usize) < open {
            return false;
        }
        let mut reach = 0u128;
        for &(w, f) in self.g.incident(v) {
            if self.color[f] == 0 {
                let avail = free & !self.used[w];
                if avail == 0 {
                    return false;
                }
                reach |= avail;
            }
        }
        reach.count_ones() as usize >= open
    }

    fn consistent_after(&self, e: usize) -> bool {
        let (a, b) = self.g.ends(e);
        for &x in &[a, b] {
            if !self.vertex_ok(x) {
                return false;
            }
            for &(w, f) in self.g.incident(x) {
                if self.color[f] == 0 && !self.vertex_ok(w) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Color]) -> ControlFlow<()>) -> Result<(), ColoringError> {
        self.descend(visit).map(|_| ())
    }

    fn descend(&mut self, visit: &mut dyn FnMut(&[Color]) -> ControlFlow<()>) -> Result<ControlFlow<()>, ColoringError> {
        let Some(e) = self.pick() else {
            return Ok(visit(&self.color));
        };
        let mut avail = self.available(e);
        if self.symmetric {
            let limit = (self.top as usize + 1).min(self.k);
            let below = if limit == 128 { u128::MAX } else { (1u128 << limit) - 1 };
            avail &= below;
        }
        while avail != 0 {
            let c = avail.trailing_zeros() as Color + 1;
            avail &= avail - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(ColoringError::ResourceLimit { budget: self.budget });
            }
            let saved_top = self.top;
            self.top = self.top.max(c);
            self.assign(e, c);
            let flow = if self.consistent_after(e) { self.descend(visit)? } else { ControlFlow::Continue(()) };
            self.unassign(e);
            self.top = saved_top;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}
