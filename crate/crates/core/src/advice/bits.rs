use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// ⌈log₂ x⌉ for x ≥ 1.
pub fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Append-only bit sequence, rendered as `0`/`1` characters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    /// Appends `value` big-endian in exactly `width` bits.
    pub fn push_uint(&mut self, value: u64, width: usize) {
        assert!(width == 64 || value < (1u64 << width), "{value} does not fit in {width} bits");
        for i in (0..width).rev() {
            self.0.push((value >> i) & 1 == 1);
        }
    }

    pub fn extend_from(&mut self, other: &BitString) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    /// Big-endian value of `width` bits starting at `start`.
    pub fn uint_at(&self, start: usize, width: usize) -> Option<u64> {
        let bits = self.0.get(start..start + width)?;
        Some(bits.iter().fold(0, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }
}

impl From<Vec<bool>> for BitString {
    fn from(bits: Vec<bool>) -> Self {
        BitString(bits)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidBitChar(pub char);

impl fmt::Display for InvalidBitChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid bit character {:?}", self.0)
    }
}

impl std::error::Error for InvalidBitChar {}

impl FromStr for BitString {
    type Err = InvalidBitChar;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(InvalidBitChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitString)
    }
}
