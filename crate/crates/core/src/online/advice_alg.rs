//! The advice-consuming optimal algorithm.
//!
//! Mode-0 edges take the color in their record. Mode-1 edges replay the
//! oracle's partition: the algorithm keeps, per vertex and subset, how many
//! of its revealed mode-1 edges sit in that subset, so the open subsets at
//! the front endpoint are exactly the oracle's J(e). The (rank+1)-th open
//! subset is j′, and the color inside it comes from the record. Provisional
//! colors (mode, c) are renamed to 1, 2, … in order of first use.

use std::collections::HashMap;

use crate::advice::{bits_per_edge, d_from_record_len, decode_fields, encode_header, AdviceMode, BitString};
use crate::coloring::Color;
use crate::graph::{Edge, VertexId};

use super::{AdviceAccess, OnlineAlgorithm, OnlineError};

/// Largest degeneracy bound the decoder accepts; anything beyond is treated
/// as corrupt advice rather than risking overflow in the field widths.
pub const MAX_D: usize = 1 << 24;

#[derive(Clone, Debug)]
pub struct AdviceAlgorithm {
    mode: AdviceMode,
    /// Hard-wired degeneracy bound for the request model; otherwise read
    /// from the record length or the tape header.
    known_d: Option<usize>,
    d: Option<usize>,
    header_bits: usize,
    load: HashMap<VertexId, Vec<usize>>,
    rename: HashMap<(bool, Color), Color>,
    decoded: Vec<Option<usize>>,
}

impl AdviceAlgorithm {
    pub fn new(mode: AdviceMode) -> Self {
        AdviceAlgorithm {
            mode,
            known_d: None,
            d: None,
            header_bits: 0,
            load: HashMap::new(),
            rename: HashMap::new(),
            decoded: Vec::new(),
        }
    }

    pub fn with_known_d(mode: AdviceMode, d: usize) -> Self {
        AdviceAlgorithm { known_d: Some(d), ..Self::new(mode) }
    }

    /// The degeneracy bound in use, once the first edge has been served.
    pub fn d(&self) -> Option<usize> {
        self.d
    }

    /// Bits spent on the tape header (0 in the request model).
    pub fn header_bits(&self) -> usize {
        self.header_bits
    }

    /// Per served edge: the reconstructed subset index j′ for mode-1 edges.
    pub fn decoded_subsets(&self) -> &[Option<usize>] {
        &self.decoded
    }

    fn malformed(arrival: usize, message: impl Into<String>) -> OnlineError {
        OnlineError::MalformedAdvice { arrival, message: message.into() }
    }

    fn resolve_d(&mut self, arrival: usize, advice: &mut dyn AdviceAccess) -> Result<usize, OnlineError> {
        if let Some(d) = self.d {
            return Ok(d);
        }
        let d = match advice.request_len() {
            Some(len) => match self.known_d {
                Some(d) => d,
                None => d_from_record_len(len, self.mode)
                    .ok_or_else(|| Self::malformed(arrival, format!("no degeneracy bound has {len}-bit records")))?,
            },
            None => {
                let mut width = 0;
                while advice.read(1)?.get(0).unwrap() {
                    width += 1;
                    if width > 63 {
                        return Err(Self::malformed(arrival, "tape header length field too long"));
                    }
                }
                let d = if width == 0 { 1 } else { advice.read(width)?.uint_at(0, width).unwrap() as usize };
                if d == 0 || encode_header(d).len() != 1 + 2 * width {
                    return Err(Self::malformed(arrival, format!("non-canonical tape header for d = {d}")));
                }
                self.header_bits = 1 + 2 * width;
                d
            }
        };
        if d == 0 || d > MAX_D {
            return Err(Self::malformed(arrival, format!("degeneracy bound {d} outside 1..={MAX_D}")));
        }
        self.d = Some(d);
        Ok(d)
    }

    fn provisional(&mut self, key: (bool, Color)) -> Color {
        let next = self.rename.len() as Color + 1;
        *self.rename.entry(key).or_insert(next)
    }
}

impl OnlineAlgorithm for AdviceAlgorithm {
    fn name(&self) -> String {
        format!("advice-{}", self.mode)
    }

    fn step(&mut self, edge: &Edge, advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError> {
        let arrival = edge.arrival;
        let d = self.resolve_d(arrival, advice)?;
        let need = bits_per_edge(d, self.mode);
        if let Some(len) = advice.request_len() {
            if len != need {
                return Err(Self::malformed(arrival, format!("record has {len} bits, expected {need}")));
            }
        }
        let bits: BitString = advice.read(need)?;
        let fields = decode_fields(&bits, 0, d, self.mode).map_err(|e| Self::malformed(arrival, e.to_string()))?;
        let width = 2 * d;
        let color = if !fields.partitioned {
            self.decoded.push(None);
            self.provisional((false, fields.color))
        } else {
            let front = match self.mode {
                AdviceMode::Strict => edge.u,
                AdviceMode::Robust => {
                    let (lo, hi) = if edge.u < edge.v { (edge.u, edge.v) } else { (edge.v, edge.u) };
                    if fields.front_flag {
                        hi
                    } else {
                        lo
                    }
                }
            };
            let back = edge.other(front);
            let loads = self.load.entry(front).or_default();
            let mut open_seen = 0;
            let mut j = 1;
            let chosen = loop {
                let load = loads.get(j - 1).copied().unwrap_or(0);
                if load < width {
                    if open_seen == fields.rank {
                        break j;
                    }
                    open_seen += 1;
                }
                j += 1;
            };
            for w in [front, back] {
                let loads = self.load.entry(w).or_default();
                if loads.len() < chosen {
                    loads.resize(chosen, 0);
                }
                loads[chosen - 1] += 1;
            }
            self.decoded.push(Some(chosen));
            let within = (chosen - 1) * width + fields.color as usize;
            self.provisional((true, within as Color))
        };
        Ok(color)
    }
}
