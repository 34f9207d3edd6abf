use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::advice::BitString;
use crate::coloring::{Color, Coloring};
use crate::graph::{Edge, EdgeStream, Graph, VertexId};

use super::{AdviceAccess, AdviceSource, BitAccess, NoAdvice, OnlineAlgorithm, OnlineError};

/// Outcome of one online run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    #[serde(skip)]
    pub coloring: Coloring,
    pub colors_used: usize,
    /// Filled in by callers that computed χ′ offline.
    pub chromatic_index: Option<usize>,
    pub optimal: Option<bool>,
    pub advice_bits_read: usize,
    /// Bits read while serving each edge (tape header included in edge 0).
    pub per_edge_bits: Vec<usize>,
}

impl RunReport {
    /// Records the offline optimum and whether this run matched it.
    pub fn with_chromatic_index(mut self, chi: usize) -> Self {
        self.chromatic_index = Some(chi);
        self.optimal = Some(self.colors_used == chi);
        self
    }
}

/// Incremental form of [`simulate`] for adversaries that choose the next
/// edges after seeing earlier colors.
pub struct Simulation {
    source: AdviceSource,
    at: HashMap<VertexId, HashSet<Color>>,
    colors: Vec<Color>,
    per_edge_bits: Vec<usize>,
    tape_cursor: usize,
}

impl Simulation {
    pub fn new(source: AdviceSource) -> Self {
        Simulation { source, at: HashMap::new(), colors: Vec::new(), per_edge_bits: Vec::new(), tape_cursor: 0 }
    }

    /// Colors committed so far, by arrival.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<HashSet<_>>().len()
    }

    /// Reveals `edge`, whose arrival must be the next index, and returns the
    /// color `alg` committed to.
    pub fn feed(&mut self, alg: &mut dyn OnlineAlgorithm, edge: &Edge) -> Result<Color, OnlineError> {
        let arrival = edge.arrival;
        assert_eq!(arrival, self.colors.len(), "edges must be fed in arrival order");
        let empty = BitString::new();
        let (color, read) = match &self.source {
            AdviceSource::None => {
                let mut access = NoAdvice { arrival };
                (alg.step(edge, &mut access)?, access.bits_read())
            }
            AdviceSource::PerRequest(records) => {
                let bits = records.get(arrival).map_or(&empty, |r| &r.bits);
                let mut access = BitAccess::request(bits, arrival);
                (alg.step(edge, &mut access)?, access.bits_read())
            }
            AdviceSource::Tape(tape) => {
                let mut access = BitAccess::tape(&tape.bits, self.tape_cursor, arrival);
                let c = alg.step(edge, &mut access)?;
                let read = access.cursor() - self.tape_cursor;
                self.tape_cursor = access.cursor();
                (c, read)
            }
        };
        if color == 0 {
            return Err(OnlineError::InvalidColor { arrival });
        }
        if !alg.revisions().is_empty() {
            return Err(OnlineError::RecoloringAttempt { arrival });
        }
        for w in [edge.u, edge.v] {
            if self.at.get(&w).is_some_and(|s| s.contains(&color)) {
                return Err(OnlineError::ImproperColoring { arrival, u: edge.u, v: edge.v, color });
            }
        }
        self.at.entry(edge.u).or_default().insert(color);
        self.at.entry(edge.v).or_default().insert(color);
        self.colors.push(color);
        self.per_edge_bits.push(read);
        Ok(color)
    }

    /// Report for the edges fed so far, which must be exactly `stream`.
    pub fn finish(self, alg: &dyn OnlineAlgorithm, stream: &EdgeStream) -> RunReport {
        assert_eq!(stream.len(), self.colors.len());
        let g = Graph::from_stream(stream);
        let coloring = Coloring::from_colors(self.colors);
        RunReport {
            algorithm: alg.name(),
            n: g.n(),
            m: g.m(),
            delta: g.max_degree(),
            colors_used: coloring.colors_used(),
            coloring,
            chromatic_index: None,
            optimal: None,
            advice_bits_read: self.per_edge_bits.iter().sum(),
            per_edge_bits: self.per_edge_bits,
        }
    }
}

/// Reveals `stream` edge by edge to `alg`, feeding advice from `source`, and
/// checks after every step that the committed colors stay proper.
pub fn simulate(
    stream: &EdgeStream,
    alg: &mut dyn OnlineAlgorithm,
    source: &AdviceSource,
) -> Result<RunReport, OnlineError> {
    let mut sim = Simulation::new(source.clone());
    for edge in stream {
        sim.feed(alg, edge)?;
    }
    Ok(sim.finish(alg, stream))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::online::Greedy;

    struct Constant;

    impl OnlineAlgorithm for Constant {
        fn name(&self) -> String {
            "constant".into()
        }

        fn step(&mut self, _edge: &Edge, _advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError> {
            Ok(1)
        }
    }

    struct Regretful;

    impl OnlineAlgorithm for Regretful {
        fn name(&self) -> String {
            "regretful".into()
        }

        fn step(&mut self, edge: &Edge, _advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError> {
            Ok(edge.arrival as Color + 1)
        }

        fn revisions(&mut self) -> Vec<(usize, Color)> {
            vec![(0, 7)]
        }
    }

    #[test]
    fn improper_color_is_caught_at_the_offending_edge() {
        let s = EdgeStream::from_pairs([(0, 1), (2, 3), (1, 2)]).unwrap();
        let err = simulate(&s, &mut Constant, &AdviceSource::None).unwrap_err();
        assert!(matches!(err, OnlineError::ImproperColoring { arrival: 2, color: 1, .. }));
    }

    #[test]
    fn recoloring_is_rejected() {
        let s = EdgeStream::from_pairs([(0, 1)]).unwrap();
        let err = simulate(&s, &mut Regretful, &AdviceSource::None).unwrap_err();
        assert_eq!(err, OnlineError::RecoloringAttempt { arrival: 0 });
    }

    #[test]
    fn greedy_report() {
        let s = EdgeStream::from_pairs([(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = simulate(&s, &mut Greedy::new(), &AdviceSource::None).unwrap().with_chromatic_index(3);
        assert_eq!((r.n, r.m, r.delta, r.colors_used), (3, 3, 2, 3));
        assert_eq!(r.optimal, Some(true));
        assert_eq!(r.advice_bits_read, 0);
    }
}
