//! The oracle side: partitioning, per-edge advice records, and the tape.
//!
//! Record layout, most significant field first:
//!
//! ```text
//! mode (1) | front (1, robust only) | color (⌈log 2d⌉) | rank (⌈log(d+1)⌉)
//! ```
//!
//! Fields are big-endian; the color is stored zero-based, the rank as is.
//! Unused fields are zero.

mod bits;
mod oracle;
mod procedure;
mod tape;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, ColoringError};

pub use bits::{ceil_log2, BitString, InvalidBitChar};
pub use oracle::{oracle_general, EdgeAdvice, OracleConfig, OracleOutput, OracleTrace};
pub use procedure::{procedure1, Partition, PartitionTrace};
pub use tape::{encode_header, encode_tape, read_tape_header, AdviceTape, TapeReader};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdviceError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("malformed tape: {0}")]
    MalformedTape(String),
    #[error("malformed advice: {0}")]
    MalformedAdvice(String),
    #[error("oracle invariant violated: {0}")]
    InvariantViolated(String),
}

/// How the online algorithm learns which endpoint of an edge is its front
/// endpoint.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdviceMode {
    /// Each stream line lists the front endpoint first.
    Strict,
    /// One extra bit per record; 0 means the numerically smaller label is
    /// the front endpoint.
    #[default]
    Robust,
}

impl fmt::Display for AdviceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdviceMode::Strict => "strict",
            AdviceMode::Robust => "robust",
        })
    }
}

impl FromStr for AdviceMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(AdviceMode::Strict),
            "robust" => Ok(AdviceMode::Robust),
            other => Err(format!("unknown advice mode {other:?} (expected strict or robust)")),
        }
    }
}

pub fn color_width(d: usize) -> usize {
    ceil_log2(2 * d)
}

pub fn rank_width(d: usize) -> usize {
    ceil_log2(d + 1)
}

/// 1 + ⌈log 2d⌉ + ⌈log(d+1)⌉, plus the front bit in robust mode.
pub fn bits_per_edge(d: usize, mode: AdviceMode) -> usize {
    assert!(d >= 1, "d must be positive");
    let strict = 1 + color_width(d) + rank_width(d);
    match mode {
        AdviceMode::Strict => strict,
        AdviceMode::Robust => strict + 1,
    }
}

fn bit_length(x: usize) -> usize {
    (usize::BITS - x.leading_zeros()) as usize
}

/// Largest d whose records are as long as those for `actual`.
///
/// The strict length is 2 + bitlen(d−1) + bitlen(d): 2k+3 at d = 2^k and
/// 2k+4 on 2^k < d < 2^(k+1), so every class ends just below a power of two
/// or is a single power of two.
pub fn pad_d(actual: usize) -> usize {
    assert!(actual >= 1, "degeneracy bound must be positive");
    if actual.is_power_of_two() {
        actual
    } else {
        usize::MAX >> (usize::BITS as usize - bit_length(actual))
    }
}

/// The padded d whose records have length `len`, if any.
pub fn d_from_record_len(len: usize, mode: AdviceMode) -> Option<usize> {
    let strict = match mode {
        AdviceMode::Strict => len,
        AdviceMode::Robust => len.checked_sub(1)?,
    };
    let d = match strict {
        3 => 1,
        l if l >= 5 && l % 2 == 1 => 1usize.checked_shl(((l - 3) / 2) as u32)?,
        l if l >= 6 && l % 2 == 0 => {
            let k = (l - 4) / 2;
            if k + 1 >= usize::BITS as usize {
                return None;
            }
            (1usize << (k + 1)) - 1
        }
        _ => return None,
    };
    (bits_per_edge(d, mode) == len).then_some(d)
}

/// Decoded content of one record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecordFields {
    /// Mode bit: false for directly colored edges, true for partitioned ones.
    pub partitioned: bool,
    /// Robust mode only: true iff the larger label is the front endpoint.
    pub front_flag: bool,
    /// 1-based color within the record's palette of 2d colors.
    pub color: Color,
    pub rank: usize,
}

/// Per-edge advice string of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdviceRecord {
    pub bits: BitString,
}

impl AdviceRecord {
    pub fn encode(fields: &RecordFields, d: usize, mode: AdviceMode) -> AdviceRecord {
        assert!(fields.color >= 1 && fields.color as usize <= 2 * d, "color out of range");
        assert!(fields.rank <= d, "rank out of range");
        let mut bits = BitString::new();
        bits.push(fields.partitioned);
        if mode == AdviceMode::Robust {
            bits.push(fields.front_flag);
        }
        bits.push_uint(fields.color as u64 - 1, color_width(d));
        bits.push_uint(fields.rank as u64, rank_width(d));
        AdviceRecord { bits }
    }

    pub fn decode(&self, d: usize, mode: AdviceMode) -> Result<RecordFields, AdviceError> {
        decode_fields(&self.bits, 0, d, mode)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// Decodes one record starting at bit `start` of `bits`.
pub(crate) fn decode_fields(bits: &BitString, start: usize, d: usize, mode: AdviceMode) -> Result<RecordFields, AdviceError> {
    let need = bits_per_edge(d, mode);
    if bits.len() < start + need {
        return Err(AdviceError::MalformedAdvice(format!("record needs {need} bits, {} available", bits.len() - start)));
    }
    let mut pos = start;
    let partitioned = bits.get(pos).unwrap();
    pos += 1;
    let front_flag = if mode == AdviceMode::Robust {
        pos += 1;
        bits.get(pos - 1).unwrap()
    } else {
        false
    };
    let color = bits.uint_at(pos, color_width(d)).unwrap() as usize + 1;
    pos += color_width(d);
    let rank = bits.uint_at(pos, rank_width(d)).unwrap() as usize;
    if color > 2 * d {
        return Err(AdviceError::MalformedAdvice(format!("color {color} exceeds 2d = {}", 2 * d)));
    }
    if rank > d {
        return Err(AdviceError::MalformedAdvice(format!("rank {rank} exceeds d = {d}")));
    }
    Ok(RecordFields { partitioned, front_flag, color: color as Color, rank })
}

/// One line of `0`/`1` characters per record.
pub fn serialize_records(records: &[AdviceRecord]) -> String {
    records.iter().map(|r| format!("{}\n", r.bits)).collect()
}

pub fn parse_records(text: &str) -> Result<Vec<AdviceRecord>, AdviceError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| {
            l.parse::<BitString>()
                .map(|bits| AdviceRecord { bits })
                .map_err(|e| AdviceError::MalformedAdvice(format!("record {}: {e}", i + 1)))
        })
        .collect()
}
