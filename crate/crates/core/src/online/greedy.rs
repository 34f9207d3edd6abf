use std::collections::{HashMap, HashSet};

use crate::advice::BitString;
use crate::coloring::Color;
use crate::graph::{Edge, VertexId};

use super::{AdviceAccess, BitAccess, OnlineAlgorithm, OnlineError};

/// Colors seen at each vertex so far.
#[derive(Clone, Debug, Default)]
struct Seen(HashMap<VertexId, HashSet<Color>>);

impl Seen {
    fn free_at_both(&self, e: &Edge, c: Color) -> bool {
        [e.u, e.v].iter().all(|w| self.0.get(w).is_none_or(|s| !s.contains(&c)))
    }

    /// The `skip`-th (0-based) smallest color free at both endpoints.
    fn nth_free(&self, e: &Edge, skip: usize) -> Color {
        (1..).filter(|&c| self.free_at_both(e, c)).nth(skip).unwrap()
    }

    fn record(&mut self, e: &Edge, c: Color) {
        self.0.entry(e.u).or_default().insert(c);
        self.0.entry(e.v).or_default().insert(c);
    }
}

/// First-fit: the smallest color absent at both endpoints. Never opens a new
/// color unless forced, hence at most 2Δ−1 colors.
#[derive(Clone, Debug, Default)]
pub struct Greedy {
    seen: Seen,
}

impl Greedy {
    pub fn new() -> Self {
        Self::default()
    }
}

impl OnlineAlgorithm for Greedy {
    fn name(&self) -> String {
        "greedy".into()
    }

    fn step(&mut self, edge: &Edge, _advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError> {
        let c = self.seen.nth_free(edge, 0);
        self.seen.record(edge, c);
        Ok(c)
    }
}

/// First-fit over a rotated preference list: colors `1..=palette` starting
/// at `offset + 1`, then anything larger in increasing order.
#[derive(Clone, Debug)]
pub struct PreferenceGreedy {
    order: Vec<Color>,
    seen: Seen,
}

impl PreferenceGreedy {
    pub fn new(palette: usize, offset: usize) -> Self {
        let p = palette.max(1);
        let order = (0..p).map(|i| ((offset + i) % p + 1) as Color).collect();
        PreferenceGreedy { order, seen: Seen::default() }
    }
}

impl OnlineAlgorithm for PreferenceGreedy {
    fn name(&self) -> String {
        format!("greedy-pref{:?}", self.order)
    }

    fn step(&mut self, edge: &Edge, _advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError> {
        let c = match self.order.iter().copied().find(|&c| self.seen.free_at_both(edge, c)) {
            Some(c) => c,
            None => (self.order.len() as Color + 1..).find(|&c| self.seen.free_at_both(edge, c)).unwrap(),
        };
        self.seen.record(edge, c);
        Ok(c)
    }
}

/// Reads one advice bit for each of its first `budget` edges and takes the
/// second-smallest free color on a 1 bit, the smallest on a 0 bit; plain
/// first-fit afterwards.
#[derive(Clone, Debug)]
pub struct BitGuidedGreedy {
    budget: usize,
    used: usize,
    seen: Seen,
}

impl BitGuidedGreedy {
    pub fn new(budget: usize) -> Self {
        BitGuidedGreedy { budget, used: 0, seen: Seen::default() }
    }
}

impl OnlineAlgorithm for BitGuidedGreedy {
    fn name(&self) -> String {
        format!("bit-guided-greedy({})", self.budget)
    }

    fn step(&mut self, edge: &Edge, advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError> {
        let skip = if self.used < self.budget {
            self.used += 1;
            advice.read(1)?.get(0).unwrap() as usize
        } else {
            0
        };
        let c = self.seen.nth_free(edge, skip);
        self.seen.record(edge, c);
        Ok(c)
    }
}

/// An advice-reading algorithm frozen with one fixed advice string, i.e. one
/// of the 2^b deterministic algorithms it splits into.
pub struct WithFixedAdvice<A> {
    inner: A,
    tape: BitString,
    cursor: usize,
}

impl<A: OnlineAlgorithm> WithFixedAdvice<A> {
    pub fn new(inner: A, tape: BitString) -> Self {
        WithFixedAdvice { inner, tape, cursor: 0 }
    }

    /// The advice string `index` written in `bits` big-endian bits.
    pub fn indexed(inner: A, index: u64, bits: usize) -> Self {
        let mut tape = BitString::new();
        tape.push_uint(index, bits);
        Self::new(inner, tape)
    }

    pub fn advice(&self) -> &BitString {
        &self.tape
    }
}

impl<A: OnlineAlgorithm> OnlineAlgorithm for WithFixedAdvice<A> {
    fn name(&self) -> String {
        format!("{}[{}]", self.inner.name(), self.tape)
    }

    fn step(&mut self, edge: &Edge, _advice: &mut dyn AdviceAccess) -> Result<Color, OnlineError> {
        let mut access = BitAccess::tape(&self.tape, self.cursor, edge.arrival);
        let c = self.inner.step(edge, &mut access)?;
        self.cursor = access.cursor();
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::online::NoAdvice;

    fn run(alg: &mut dyn OnlineAlgorithm, pairs: &[(u64, u64)]) -> Vec<Color> {
        pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let e = Edge { u: VertexId(u), v: VertexId(v), arrival: i };
                alg.step(&e, &mut NoAdvice { arrival: i }).unwrap()
            })
            .collect()
    }

    #[test]
    fn greedy_first_fit() {
        assert_eq!(run(&mut Greedy::new(), &[(0, 1), (1, 2)]), vec![1, 2]);
        // Two disjoint edges then one joining them: 1, 1, then 2.
        assert_eq!(run(&mut Greedy::new(), &[(0, 1), (2, 3), (1, 2)]), vec![1, 1, 2]);
    }

    #[test]
    fn preference_rotation() {
        assert_eq!(run(&mut PreferenceGreedy::new(3, 1), &[(0, 1), (0, 2), (0, 3), (0, 4)]), vec![2, 3, 1, 4]);
    }

    #[test]
    fn fixed_advice_drives_choices() {
        let mut alg = WithFixedAdvice::indexed(BitGuidedGreedy::new(2), 0b10, 2);
        assert_eq!(run(&mut alg, &[(0, 1), (2, 3), (4, 5)]), vec![2, 1, 1]);
    }
}
