//! Executable lower-bound constructions.
//!
//! * [`theorem4_game`]: rows of small stars, then fresh vertices joined to
//!   identically colored stars, eliminating a finite family of deterministic
//!   algorithms a β-fraction at a time.
//! * [`theorem5_game`]: two big stars, then rigidity gadgets joining them
//!   along a permutation the algorithm has to guess.
//! * [`lemma2_check`]: exhaustive confirmation that the gadget transmits
//!   colors in every tight coloring.

mod lemma2;
mod theorem4;
mod theorem5;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::coloring::{Color, ColoringError};
use crate::online::{BitGuidedGreedy, Greedy, OnlineAlgorithm, OnlineError, PreferenceGreedy, WithFixedAdvice};

pub use lemma2::{lemma2_check, Lemma2Report};
pub use theorem4::{theorem4_game, MemberOutcome, RoundRecord, Theorem4Transcript};
pub use theorem5::{
    build_theorem5_instance, theorem5_family_game, theorem5_game, Theorem5FamilyOutcome, Theorem5Instance,
    Theorem5Outcome,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdversaryError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no {delta} stars share a color set")]
    NoMonochromeFamily { delta: usize },
    #[error(transparent)]
    Online(#[from] OnlineError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// A finite set of deterministic online algorithms.
pub type AlgorithmFamily = Vec<Box<dyn OnlineAlgorithm>>;

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// α = (Δ−1)·C(2Δ−2, Δ−1) + 1 stars per row guarantee Δ identically colored
/// ones; β = C(α, Δ) bounds the number of distinct Δ-subsets of a row.
pub fn alpha_beta(delta: usize) -> (BigUint, BigUint) {
    assert!(delta >= 2, "delta must be at least 2");
    let d = delta as u64;
    let alpha = BigUint::from(d - 1) * binomial(2 * d - 2, d - 1) + 1u32;
    let beta = match u64::try_from(&alpha) {
        Ok(a) => binomial(a, d),
        Err(_) => unreachable!("alpha fits in u64 for any usize delta of interest"),
    };
    (alpha, beta)
}

/// The lexicographically first Δ-subset of stars whose color sets coincide.
/// `star_colors[s]` is the set of colors on star `s`, in any order.
pub fn fact1_select(star_colors: &[Vec<Color>], delta: usize) -> Result<Vec<usize>, AdversaryError> {
    let mut groups: BTreeMap<Vec<Color>, Vec<usize>> = BTreeMap::new();
    for (s, colors) in star_colors.iter().enumerate() {
        let mut key = colors.clone();
        key.sort_unstable();
        let members = groups.entry(key).or_default();
        if members.len() < delta {
            members.push(s);
        }
    }
    groups
        .into_values()
        .filter(|m| m.len() == delta)
        .min()
        .ok_or(AdversaryError::NoMonochromeFamily { delta })
}

/// `k` first-fit variants with rotated preference lists over a palette of
/// `max(k, 2Δ−1)` colors.
pub fn greedy_variants(delta: usize, k: usize) -> AlgorithmFamily {
    let palette = k.max(2 * delta - 1);
    (0..k).map(|i| Box::new(PreferenceGreedy::new(palette, i)) as Box<dyn OnlineAlgorithm>).collect()
}

/// One bit-guided greedy frozen with each of the 2^b advice strings of
/// length `b`.
pub fn advice_family(b: usize) -> AlgorithmFamily {
    assert!(b < 32, "2^b members must be enumerable");
    (0..1u64 << b)
        .map(|s| Box::new(WithFixedAdvice::indexed(BitGuidedGreedy::new(b), s, b)) as Box<dyn OnlineAlgorithm>)
        .collect()
}

pub fn greedy_family() -> AlgorithmFamily {
    vec![Box::new(Greedy::new())]
}
