use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::coloring::Color;
use crate::graph::{EdgeStream, LabelAllocator, VertexId};
use crate::online::{AdviceSource, Simulation};

use super::{alpha_beta, fact1_select, AdversaryError, AlgorithmFamily};

#[derive(Clone, Debug, Serialize)]
pub struct RoundRecord {
    pub round: usize,
    pub alive_before: usize,
    pub alive_after: usize,
    /// Indices of the chosen stars within this round's row.
    pub selected_stars: Vec<usize>,
    pub new_vertex: VertexId,
    /// Whether alive_after ≤ alive_before − ⌈alive_before/β⌉.
    pub decay_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MemberOutcome {
    pub name: String,
    pub colors_used: usize,
    pub alive: bool,
    /// 0 if already dead when the rounds began.
    pub died_in_round: Option<usize>,
    pub colors_at_death: Option<usize>,
    /// Set if the member broke the online rules (it then counts as dead).
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem4Transcript {
    pub delta: usize,
    pub alpha: usize,
    pub beta: String,
    pub rows: usize,
    pub rounds: Vec<RoundRecord>,
    pub members: Vec<MemberOutcome>,
    pub m: usize,
    #[serde(skip)]
    pub final_stream: EdgeStream,
}

impl Theorem4Transcript {
    pub fn all_dead(&self) -> bool {
        self.members.iter().all(|m| !m.alive)
    }
}

struct Player {
    sim: Simulation,
    alive: bool,
    outcome: MemberOutcome,
}

fn feed_all(players: &mut [Player], family: &mut AlgorithmFamily, stream: &EdgeStream, from: usize) {
    for (p, alg) in players.iter_mut().zip(family.iter_mut()) {
        if p.outcome.error.is_some() {
            continue;
        }
        for e in &stream.edges()[from..] {
            if let Err(err) = p.sim.feed(alg.as_mut(), e) {
                p.outcome.error = Some(err.to_string());
                break;
            }
        }
    }
}

/// Plays the star-row elimination game for `rounds` rounds against every
/// member of `family` at once; all members see the same edges.
///
/// Stars are K_{1,Δ−1}, revealed center edge by center edge, row by row.
/// Round i picks Δ identically colored stars in row i that the largest
/// number of alive members share, and joins a fresh vertex to their centers,
/// which forces those members to 2Δ−1 colors.
pub fn theorem4_game(
    delta: usize,
    family: &mut AlgorithmFamily,
    rounds: usize,
) -> Result<Theorem4Transcript, AdversaryError> {
    if delta < 2 || rounds == 0 || family.is_empty() {
        return Err(AdversaryError::PreconditionViolated(
            "need delta >= 2, at least one round and a non-empty family".into(),
        ));
    }
    let (alpha_big, beta_big) = alpha_beta(delta);
    let alpha = usize::try_from(&alpha_big)
        .map_err(|_| AdversaryError::PreconditionViolated(format!("alpha = {alpha_big} stars per row is too many")))?;
    let limit = 2 * delta - 2;

    let mut labels = LabelAllocator::default();
    let mut stream = EdgeStream::new();
    // centers[row][star], star_edges[row][star] = arrivals of its edges.
    let mut centers = vec![Vec::with_capacity(alpha); rounds];
    let mut star_edges = vec![Vec::with_capacity(alpha); rounds];
    for row in 0..rounds {
        for _ in 0..alpha {
            let c = labels.fresh();
            let mut arrivals = Vec::with_capacity(delta - 1);
            for _ in 0..delta - 1 {
                let leaf = labels.fresh();
                arrivals.push(stream.push(c, leaf).expect("fresh leaf").arrival);
            }
            centers[row].push(c);
            star_edges[row].push(arrivals);
        }
    }

    let mut players: Vec<Player> = family
        .iter()
        .map(|alg| Player {
            sim: Simulation::new(AdviceSource::None),
            alive: true,
            outcome: MemberOutcome {
                name: alg.name(),
                colors_used: 0,
                alive: true,
                died_in_round: None,
                colors_at_death: None,
                error: None,
            },
        })
        .collect();
    feed_all(&mut players, family, &stream, 0);
    let bury = |players: &mut [Player], round: usize| {
        for p in players.iter_mut().filter(|p| p.alive) {
            let used = p.sim.colors_used();
            if p.outcome.error.is_some() || used > limit {
                p.alive = false;
                p.outcome.died_in_round = Some(round);
                p.outcome.colors_at_death = Some(used);
            }
        }
    };
    bury(&mut players, 0);

    let mut records = Vec::with_capacity(rounds);
    for row in 0..rounds {
        let alive_before = players.iter().filter(|p| p.alive).count();
        let mut votes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for p in players.iter().filter(|p| p.alive) {
            let colors = p.sim.colors();
            let sets: Vec<Vec<Color>> =
                star_edges[row].iter().map(|arr: &Vec<usize>| arr.iter().map(|&a| colors[a]).collect()).collect();
            *votes.entry(fact1_select(&sets, delta)?).or_default() += 1;
        }
        // Most votes; BTreeMap order breaks ties lexicographically.
        let selected = votes
            .iter()
            .fold(None::<(&Vec<usize>, usize)>, |best, (s, &n)| match best {
                Some((_, bn)) if bn >= n => best,
                _ => Some((s, n)),
            })
            .map(|(s, _)| s.clone())
            .unwrap_or_else(|| (0..delta).collect());

        let w = labels.fresh();
        let from = stream.len();
        for &s in &selected {
            stream.push(w, centers[row][s]).expect("fresh vertex");
        }
        feed_all(&mut players, family, &stream, from);
        bury(&mut players, row + 1);
        let alive_after = players.iter().filter(|p| p.alive).count();
        let must_kill = (BigUint::from(alive_before) + &beta_big - 1u32) / &beta_big;
        let decay_ok = BigUint::from(alive_after) + must_kill <= BigUint::from(alive_before);
        records.push(RoundRecord { round: row + 1, alive_before, alive_after, selected_stars: selected, new_vertex: w, decay_ok });
    }

    let members = players
        .into_iter()
        .map(|p| MemberOutcome { colors_used: p.sim.colors_used(), alive: p.alive, ..p.outcome })
        .collect();
    Ok(Theorem4Transcript {
        delta,
        alpha,
        beta: beta_big.to_string(),
        rows: rounds,
        rounds: records,
        members,
        m: stream.len(),
        final_stream: stream,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::{advice_family, greedy_family, greedy_variants};
    use crate::graph::Graph;

    fn check_shape(t: &Theorem4Transcript) {
        let g = Graph::from_stream(&t.final_stream);
        assert!(g.is_forest());
        assert_eq!(g.max_degree(), t.delta);
        assert_eq!(t.m, (t.alpha * (t.delta - 1) + t.delta) * t.rows);
        assert!(t.rounds.iter().all(|r| r.decay_ok));
    }

    #[test]
    fn greedy_dies_in_the_first_round() {
        for delta in [2, 3] {
            let mut fam = greedy_family();
            let t = theorem4_game(delta, &mut fam, 1).unwrap();
            check_shape(&t);
            let g = &t.members[0];
            assert_eq!((g.alive, g.died_in_round, g.colors_used), (false, Some(1), 2 * delta - 1));
        }
    }

    #[test]
    fn advice_family_eliminated() {
        let mut fam = advice_family(4);
        let t = theorem4_game(2, &mut fam, 8).unwrap();
        check_shape(&t);
        assert!(t.all_dead());
        assert!(t.members.iter().all(|m| m.colors_at_death == Some(3)));
    }

    #[test]
    fn variants_eliminated() {
        let mut fam = greedy_variants(2, 8);
        let t = theorem4_game(2, &mut fam, 14).unwrap();
        check_shape(&t);
        assert!(t.all_dead());
    }
}
