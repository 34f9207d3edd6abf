//! Advice-on-tape encoding: a self-delimiting header carrying d, then every
//! record in arrival order.
//!
//! Header: L ones, a zero, then d in L binary digits, where L is the bit
//! length of d for d ≥ 2 and L = 0 stands for d = 1. For d ≥ 2 that is
//! ⌈log d⌉ bits except at powers of two, which need one more.

use serde::{Deserialize, Serialize};

use super::{AdviceError, AdviceRecord, BitString};

fn header_width(d: usize) -> usize {
    if d == 1 {
        0
    } else {
        (usize::BITS - d.leading_zeros()) as usize
    }
}

pub fn encode_header(d: usize) -> BitString {
    assert!(d >= 1, "d must be positive");
    let width = header_width(d);
    let mut bits = BitString::new();
    for _ in 0..width {
        bits.push(true);
    }
    bits.push(false);
    if width > 0 {
        bits.push_uint(d as u64, width);
    }
    bits
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdviceTape {
    pub bits: BitString,
}

impl AdviceTape {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn reader(&self) -> TapeReader<'_> {
        TapeReader { tape: &self.bits, cursor: 0 }
    }
}

pub fn encode_tape(records: &[AdviceRecord], d: usize) -> AdviceTape {
    let mut bits = encode_header(d);
    for r in records {
        bits.extend_from(&r.bits);
    }
    AdviceTape { bits }
}

/// Reads the header of a tape from its start.
pub fn read_tape_header(tape: &AdviceTape) -> Result<usize, AdviceError> {
    tape.reader().read_header()
}

/// Cursor over a tape; never reads past its end.
#[derive(Clone, Debug)]
pub struct TapeReader<'t> {
    tape: &'t BitString,
    cursor: usize,
}

impl<'t> TapeReader<'t> {
    pub fn new(tape: &'t BitString) -> Self {
        TapeReader { tape, cursor: 0 }
    }

    pub fn bits_read(&self) -> usize {
        self.cursor
    }

    pub fn remaining(&self) -> usize {
        self.tape.len() - self.cursor
    }

    pub fn read_bit(&mut self) -> Option<bool> {
        let b = self.tape.get(self.cursor)?;
        self.cursor += 1;
        Some(b)
    }

    /// The next `n` bits, or None (without consuming) if fewer remain.
    pub fn read_bits(&mut self, n: usize) -> Option<BitString> {
        if self.remaining() < n {
            return None;
        }
        let bits = self.tape.as_slice()[self.cursor..self.cursor + n].to_vec();
        self.cursor += n;
        Some(bits.into())
    }

    pub fn read_header(&mut self) -> Result<usize, AdviceError> {
        let truncated = || AdviceError::MalformedTape("truncated header".into());
        let mut width = 0;
        while self.read_bit().ok_or_else(truncated)? {
            width += 1;
            if width > 63 {
                return Err(AdviceError::MalformedTape("header length field too long".into()));
            }
        }
        if width == 0 {
            return Ok(1);
        }
        let value = self.read_bits(width).ok_or_else(truncated)?.uint_at(0, width).unwrap() as usize;
        if value < 2 || header_width(value) != width {
            return Err(AdviceError::MalformedTape(format!("non-canonical degeneracy {value} in {width}-bit field")));
        }
        Ok(value)
    }
}
