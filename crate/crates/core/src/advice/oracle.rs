//! General-case oracle.
//!
//! With Δ < 2d an optimal coloring fits the color field directly. Otherwise
//! write Δ = a·2d + b: take a Δ-coloring, send the edges of colors 1..=b
//! directly (mode bit 0), and partition the rest, whose maximum degree is
//! exactly a·2d, with [`procedure1`] (mode bit 1).

use crate::coloring::{color_degenerate, optimal_coloring, Color, ExactColorer};
use crate::graph::{degeneracy, EdgeStream, Graph, VertexId};

use super::{pad_d, procedure1, AdviceError, AdviceMode, AdviceRecord, PartitionTrace, RecordFields};

#[derive(Clone, Debug, Default)]
pub struct OracleConfig {
    pub mode: AdviceMode,
    /// Degeneracy bound shared with the algorithm. `None` pads the actual
    /// degeneracy to the largest d with the same record length.
    pub d: Option<usize>,
    pub colorer: ExactColorer,
}

/// What the oracle decided for one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeAdvice {
    Direct { color: Color },
    Partitioned { subset: usize, rank: usize, color: Color, front: VertexId },
}

#[derive(Clone, Debug)]
pub struct OracleTrace {
    pub d: usize,
    pub delta: usize,
    /// Δ = a·2d + b when Δ ≥ 2d; a = 0 and b = Δ otherwise.
    pub a: usize,
    pub b: usize,
    /// Arrivals sent with mode bit 0.
    pub direct: Vec<usize>,
    /// Arrivals of the partitioned subgraph, in arrival order.
    pub partitioned: Vec<usize>,
    /// Partition of the partitioned subgraph; its edge indices are positions
    /// in `partitioned`.
    pub partition: Option<PartitionTrace>,
    pub per_edge: Vec<EdgeAdvice>,
    /// Number of colors in the oracle's optimal coloring.
    pub optimal_colors: usize,
}

#[derive(Clone, Debug)]
pub struct OracleOutput {
    pub records: Vec<AdviceRecord>,
    pub trace: OracleTrace,
    /// The input stream; in strict mode re-oriented so that every partitioned
    /// edge lists its front endpoint first.
    pub stream: EdgeStream,
    pub d: usize,
    pub mode: AdviceMode,
}

pub fn oracle_general(stream: &EdgeStream, config: &OracleConfig) -> Result<OracleOutput, AdviceError> {
    let g = Graph::from_stream(stream);
    let (actual, _) = degeneracy(&g);
    let d = match config.d {
        Some(0) => return Err(AdviceError::PreconditionViolated("d must be positive".into())),
        Some(d) => d,
        None => pad_d(actual.max(1)),
    };
    if actual > d {
        return Err(AdviceError::PreconditionViolated(format!("graph has degeneracy {actual} > d = {d}")));
    }
    let delta = g.max_degree();
    let width = 2 * d;
    let m = g.m();
    let mut per_edge = Vec::with_capacity(m);
    let mut direct = Vec::new();
    let mut partitioned = Vec::new();
    let mut partition = None;
    let (a, b, optimal_colors);

    if delta < width {
        let c = optimal_coloring(&g, &config.colorer)?;
        optimal_colors = c.colors_used();
        a = 0;
        b = delta;
        for e in 0..m {
            let color = c.get(e).expect("total coloring");
            debug_assert!(color as usize <= width);
            per_edge.push(EdgeAdvice::Direct { color });
            direct.push(e);
        }
    } else {
        let c = color_degenerate(&g, d, &config.colorer)?;
        optimal_colors = c.colors_used();
        a = delta / width;
        b = delta % width;
        for e in 0..m {
            if c.get(e).expect("total coloring") as usize <= b {
                direct.push(e);
            } else {
                partitioned.push(e);
            }
        }
        let sub_stream = stream.substream(&partitioned);
        let sub = Graph::from_stream(&sub_stream);
        if sub.max_degree() != a * width {
            return Err(AdviceError::InvariantViolated(format!(
                "partitioned subgraph has max degree {} instead of {}",
                sub.max_degree(),
                a * width
            )));
        }
        let (_, sub_ord) = degeneracy(&sub);
        let trace = procedure1(&sub, d, &sub_ord, &config.colorer)?;
        let mut pos = 0;
        for e in 0..m {
            if partitioned.get(pos) == Some(&e) {
                per_edge.push(EdgeAdvice::Partitioned {
                    subset: trace.subset[pos],
                    rank: trace.rank[pos],
                    color: trace.color[pos],
                    front: sub.label(trace.front[pos]),
                });
                pos += 1;
            } else {
                per_edge.push(EdgeAdvice::Direct { color: c.get(e).unwrap() });
            }
        }
        partition = Some(trace);
    }

    let mut flip = vec![false; m];
    let records = per_edge
        .iter()
        .zip(stream.iter())
        .map(|(advice, edge)| {
            let fields = match *advice {
                EdgeAdvice::Direct { color } => RecordFields { partitioned: false, front_flag: false, color, rank: 0 },
                EdgeAdvice::Partitioned { rank, color, front, .. } => {
                    let back = edge.other(front);
                    flip[edge.arrival] = edge.u != front;
                    RecordFields { partitioned: true, front_flag: front > back, color, rank }
                }
            };
            AdviceRecord::encode(&fields, d, config.mode)
        })
        .collect();
    let stream = match config.mode {
        AdviceMode::Strict => stream.reoriented(&flip),
        AdviceMode::Robust => stream.clone(),
    };
    let trace = OracleTrace { d, delta, a, b, direct, partitioned, partition, per_edge, optimal_colors };
    Ok(OracleOutput { records, trace, stream, d, mode: config.mode })
}
