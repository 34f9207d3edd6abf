//! Arrival-aware partition of a d-degenerate graph with Δ = a·2d into `a`
//! subgraphs of maximum degree 2d, plus a 2d-coloring of each.
//!
//! Vertices are processed in degeneracy order; the front-edges of a vertex
//! are processed by arrival. Each edge goes to the lowest subset that still
//! has room at its front endpoint. Its rank counts the subsets below that
//! one which looked open when only earlier arrivals at the front endpoint are
//! considered; that is all the online side can see, and it can never exceed
//! d because only the (at most d) back-edges of the vertex arrive "late".

use crate::coloring::{Color, ExactColorer};
use crate::graph::{DegeneracyOrder, Graph};

use super::AdviceError;

/// Disjoint edge sets E₁…E_a (stored 0-based: `subsets[j - 1]` is E_j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub subsets: Vec<Vec<usize>>,
}

impl Partition {
    pub fn a(&self) -> usize {
        self.subsets.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTrace {
    pub d: usize,
    pub partition: Partition,
    /// Per edge: 1-based subset index j′.
    pub subset: Vec<usize>,
    /// Per edge: |{j ∈ J(e) : j < j′}|.
    pub rank: Vec<usize>,
    /// Per edge: color in the 2d-coloring of its subset, 1..=2d.
    pub color: Vec<Color>,
    /// Per edge: dense index of the front endpoint.
    pub front: Vec<usize>,
}

pub fn procedure1(g: &Graph, d: usize, ord: &DegeneracyOrder, colorer: &ExactColorer) -> Result<PartitionTrace, AdviceError> {
    let width = 2 * d;
    let delta = g.max_degree();
    if d == 0 || delta == 0 || !delta.is_multiple_of(width) {
        return Err(AdviceError::PreconditionViolated(format!("max degree {delta} is not a positive multiple of 2d = {width}")));
    }
    if ord.order().len() != g.n() {
        return Err(AdviceError::PreconditionViolated("ordering does not cover the graph".into()));
    }
    if ord.d() > d {
        return Err(AdviceError::PreconditionViolated(format!("ordering has back-degree {} > d = {d}", ord.d())));
    }
    let a = delta / width;
    const UNASSIGNED: usize = 0;
    let mut subset = vec![UNASSIGNED; g.m()];
    let mut rank = vec![0; g.m()];
    let mut front = vec![usize::MAX; g.m()];
    // load[v][j]: edges at v currently in E_j (index 0 unused).
    let mut load = vec![vec![0usize; a + 1]; g.n()];

    for &v in ord.order() {
        let fronts = g.incident(v).iter().filter(|&&(w, _)| ord.rank(w) > ord.rank(v)).map(|&(_, e)| e);
        for e in fronts {
            let mut prev = vec![0usize; a + 1];
            for &(_, f) in g.incident(v).iter().take_while(|&&(_, f)| f < e) {
                if subset[f] == UNASSIGNED {
                    return Err(AdviceError::InvariantViolated(format!("edge {f} arrived before {e} but is unassigned")));
                }
                prev[subset[f]] += 1;
            }
            let chosen = (1..=a).find(|&j| load[v][j] < width).ok_or_else(|| {
                AdviceError::InvariantViolated(format!("no subset has room for edge {e} at its front endpoint"))
            })?;
            let (x, y) = g.ends(e);
            let w = if x == v { y } else { x };
            if load[w][chosen] >= width {
                return Err(AdviceError::InvariantViolated(format!("edge {e} would overload E_{chosen} at its back endpoint")));
            }
            let r = (1..chosen).filter(|&j| prev[j] < width).count();
            if r > d {
                return Err(AdviceError::InvariantViolated(format!("edge {e} has rank {r} > d = {d}")));
            }
            subset[e] = chosen;
            rank[e] = r;
            front[e] = v;
            load[v][chosen] += 1;
            load[w][chosen] += 1;
        }
    }

    let mut subsets = vec![Vec::new(); a];
    for (e, &j) in subset.iter().enumerate() {
        subsets[j - 1].push(e);
    }
    let mut color = vec![0; g.m()];
    for (j, edges) in subsets.iter().enumerate() {
        let sub = g.edge_subgraph(edges);
        let c = colorer.color(&sub, width)?.ok_or_else(|| {
            AdviceError::InvariantViolated(format!("subgraph E_{} has no {width}-coloring", j + 1))
        })?;
        for (i, &e) in edges.iter().enumerate() {
            color[e] = c.get(i).expect("total coloring");
        }
    }
    Ok(PartitionTrace { d, partition: Partition { subsets }, subset, rank, color, front })
}
