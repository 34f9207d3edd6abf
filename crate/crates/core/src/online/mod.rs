//! Online execution: algorithms see one edge at a time, commit a color
//! immediately, and may read advice only through [`AdviceAccess`].

mod advice_alg;
mod greedy;
mod pipeline;
mod simulate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::advice::{AdviceError, AdviceRecord, AdviceTape, BitString};
use crate::coloring::Color;
use crate::graph::{Edge, VertexId};

pub use advice_alg::{AdviceAlgorithm, MAX_D};
pub use greedy::{BitGuidedGreedy, Greedy, PreferenceGreedy, WithFixedAdvice};
pub use pipeline::{advice_source, run_advice_pipeline, AdviceModel, PipelineRun};
pub use simulate::{simulate, RunReport, Simulation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OnlineError {
    #[error("advice exhausted at edge {arrival}")]
    AdviceExhausted { arrival: usize },
    #[error("malformed advice at edge {arrival}: {message}")]
    MalformedAdvice { arrival: usize, message: String },
    #[error("improper coloring: edge {arrival} ({u}, {v}) got color {color} already present at an endpoint")]
    ImproperColoring { arrival: usize, u: VertexId, v: VertexId, color: Color },
    #[error("algorithm tried to recolor edge {arrival}")]
    RecoloringAttempt { arrival: usize },
    #[error("algorithm returned invalid color 0 for edge {arrival}")]
    InvalidColor { arrival: usize },
    #[error(transparent)]
    Oracle(#[from] AdviceError),
}

/// Advice available while serving one request.
pub trait AdviceAccess {
    /// Length of the string attached to this request (advice-with-request),
    /// or None on a tape or without advice.
    fn request_len(&self) -> Option<usize>;

    /// Reads the next `n` bits. Fails without consuming if fewer remain.
    fn read(&mut self, n: usize) -> Result<BitString, OnlineError>;

    /// Total bits read through this access so far.
    fn bits_read(&self) -> usize;
}

/// Deterministic online edge-coloring algorithm.
pub trait OnlineAlgorithm {
    fn name(&self) -> String;

    /// Colors `edge`, which has just been revealed. The algorithm may rely
    /// only on edges revealed so far, its own earlier choices, and advice.
    fn step(&mut self, edge: &Edge, advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError>;

    /// Changes the algorithm wants to make to earlier edges. Online rules
    /// forbid any, so the simulator rejects a non-empty answer.
    fn revisions(&mut self) -> Vec<(usize, Color)> {
        Vec::new()
    }
}

/// Where the advice for a run comes from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum AdviceSource {
    #[default]
    None,
    PerRequest(Vec<AdviceRecord>),
    Tape(AdviceTape),
}

/// No advice at all; any read fails.
pub struct NoAdvice {
    pub arrival: usize,
}

impl AdviceAccess for NoAdvice {
    fn request_len(&self) -> Option<usize> {
        None
    }

    fn read(&mut self, _n: usize) -> Result<BitString, OnlineError> {
        Err(OnlineError::AdviceExhausted { arrival: self.arrival })
    }

    fn bits_read(&self) -> usize {
        0
    }
}

/// Sequential reader over a fixed bit string (a tape, or one request's
/// record).
pub struct BitAccess<'a> {
    bits: &'a BitString,
    cursor: usize,
    arrival: usize,
    request: bool,
}

impl<'a> BitAccess<'a> {
    pub fn tape(bits: &'a BitString, cursor: usize, arrival: usize) -> Self {
        BitAccess { bits, cursor, arrival, request: false }
    }

    pub fn request(bits: &'a BitString, arrival: usize) -> Self {
        BitAccess { bits, cursor: 0, arrival, request: true }
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }
}

impl AdviceAccess for BitAccess<'_> {
    fn request_len(&self) -> Option<usize> {
        self.request.then(|| self.bits.len())
    }

    fn read(&mut self, n: usize) -> Result<BitString, OnlineError> {
        if self.cursor + n > self.bits.len() {
            return Err(OnlineError::AdviceExhausted { arrival: self.arrival });
        }
        let out = self.bits.as_slice()[self.cursor..self.cursor + n].to_vec();
        self.cursor += n;
        Ok(out.into())
    }

    fn bits_read(&self) -> usize {
        self.cursor
    }
}
