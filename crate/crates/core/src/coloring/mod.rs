//! Offline edge-coloring engines and the [`Coloring`] type shared by the
//! oracle, the online algorithms, and the verifiers.

mod exact;
mod konig;
mod vizing;

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use crate::graph::{degeneracy, EdgeStream, Graph, VertexId};

pub use exact::{ExactColorer, DEFAULT_NODE_BUDGET, MAX_SEARCH_COLORS};
pub use konig::konig_color;
pub use vizing::vizing_plus_one;

/// Colors are consecutive positive integers.
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("exact search exhausted its budget of {budget} nodes")]
    ResourceLimit { budget: u64 },
    #[error("exact search supports at most {max} colors, asked for {k}")]
    PaletteTooWide { k: usize, max: usize },
    #[error("malformed coloring file, line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Partial or total map from edge (by arrival index) to color.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn empty(m: usize) -> Self {
        Coloring { colors: vec![None; m] }
    }

    pub fn from_colors(colors: Vec<Color>) -> Self {
        assert!(colors.iter().all(|&c| c >= 1), "colors are positive");
        Coloring { colors: colors.into_iter().map(Some).collect() }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: usize) -> Option<Color> {
        self.colors.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: usize, c: Color) {
        assert!(c >= 1, "colors are positive");
        self.colors[e] = Some(c);
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn palette(&self) -> BTreeSet<Color> {
        self.colors.iter().flatten().copied().collect()
    }

    pub fn colors_used(&self) -> usize {
        self.palette().len()
    }

    pub fn iter(&self) -> impl Iterator<Item = Option<Color>> + '_ {
        self.colors.iter().copied()
    }

    /// Total colorings as a plain vector.
    pub fn to_vec(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    /// Relabels colors to 1..=k in order of first appearance by edge index.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                c.map(|c| {
                    let next = map.len() as Color + 1;
                    *map.entry(c).or_insert(next)
                })
            })
            .collect();
        Coloring { colors }
    }
}

/// No vertex sees two incident colored edges of equal color. Uncolored edges
/// are ignored.
pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.m() {
        return false;
    }
    (0..g.n()).all(|v| {
        let mut seen = BTreeSet::new();
        g.incident(v).iter().filter_map(|&(_, e)| c.get(e)).all(|col| seen.insert(col))
    })
}

pub fn colors_used(c: &Coloring) -> usize {
    c.colors_used()
}

/// Δ for bipartite graphs; otherwise Δ or Δ+1 decided by exact search.
pub fn chromatic_index(g: &Graph, colorer: &ExactColorer) -> Result<usize, ColoringError> {
    let delta = g.max_degree();
    if g.m() == 0 || g.is_bipartite() {
        return Ok(delta);
    }
    Ok(match colorer.color(g, delta)? {
        Some(_) => delta,
        None => delta + 1,
    })
}

/// A coloring with χ′(g) colors.
pub fn optimal_coloring(g: &Graph, colorer: &ExactColorer) -> Result<Coloring, ColoringError> {
    if g.is_bipartite() {
        return konig_color(g);
    }
    match colorer.color(g, g.max_degree())? {
        Some(c) => Ok(c),
        None => Ok(vizing_plus_one(g)),
    }
}

/// Δ-coloring of a d-degenerate graph with Δ ≥ 2d, which always exists.
pub fn color_degenerate(g: &Graph, d: usize, colorer: &ExactColorer) -> Result<Coloring, ColoringError> {
    let delta = g.max_degree();
    if delta < 2 * d {
        return Err(ColoringError::PreconditionViolated(format!("max degree {delta} is below 2d = {}", 2 * d)));
    }
    let (actual, _) = degeneracy(g);
    if actual > d {
        return Err(ColoringError::PreconditionViolated(format!("degeneracy {actual} exceeds d = {d}")));
    }
    colorer.color(g, delta)?.ok_or_else(|| {
        ColoringError::PreconditionViolated(format!(
            "no {delta}-coloring of a {d}-degenerate graph with max degree {delta}; engine fault"
        ))
    })
}

/// One `u v c` line per edge, in stream order.
pub fn serialize_coloring(stream: &EdgeStream, c: &Coloring) -> String {
    let mut out = String::new();
    for e in stream {
        match c.get(e.arrival) {
            Some(col) => writeln!(out, "{} {} {}", e.u, e.v, col).unwrap(),
            None => writeln!(out, "{} {} -", e.u, e.v).unwrap(),
        }
    }
    out
}

/// Parses `u v c` lines; the endpoint pairs must match `stream` line by line.
pub fn parse_coloring(text: &str, stream: &EdgeStream) -> Result<Coloring, ColoringError> {
    let mut coloring = Coloring::empty(stream.len());
    let mut next = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |message: String| ColoringError::Parse { line, message };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(err(format!("expected `u v c`, got {body:?}")));
        }
        let label = |t: &str| t.parse::<u64>().map(VertexId).map_err(|_| err(format!("bad vertex {t:?}")));
        let (u, v) = (label(tokens[0])?, label(tokens[1])?);
        let edge = stream.edges().get(next).ok_or_else(|| err("more lines than stream edges".into()))?;
        if !((edge.u == u && edge.v == v) || (edge.u == v && edge.v == u)) {
            return Err(err(format!("edge {u} {v} does not match stream edge {} {}", edge.u, edge.v)));
        }
        if tokens[2] != "-" {
            let col: Color = tokens[2].parse().map_err(|_| err(format!("bad color {:?}", tokens[2])))?;
            if col == 0 {
                return Err(err("colors are positive".into()));
            }
            coloring.set(next, col);
        }
        next += 1;
    }
    if next != stream.len() {
        return Err(ColoringError::Parse { line: 0, message: format!("{} edges colored, stream has {}", next, stream.len()) });
    }
    Ok(coloring)
}
