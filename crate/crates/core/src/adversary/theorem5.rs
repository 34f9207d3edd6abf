use serde::Serialize;

use crate::coloring::Color;
use crate::graph::{build_h_between, EdgeStream, LabelAllocator, VertexId};
use crate::online::{AdviceSource, OnlineAlgorithm, RunReport, Simulation};

use super::{AdversaryError, AlgorithmFamily};

#[derive(Clone, Debug)]
pub struct Theorem5Instance {
    pub stream: EdgeStream,
    /// 0-based: gadget i joins x_i to y_{pi[i]}.
    pub pi: Vec<usize>,
    pub x: VertexId,
    pub y: VertexId,
    pub xs: Vec<VertexId>,
    pub ys: Vec<VertexId>,
}

/// Two stars K_{1,Δ} centered at x and y (edges (x, x_i) then (y, y_i)),
/// then for each i an H_{Δ−1} with leftmost vertex x_i and rightmost vertex
/// y_{π(i)}. The result is bipartite and Δ-regular with Δ³ + Δ edges.
pub fn build_theorem5_instance(delta: usize, pi: &[usize]) -> Result<Theorem5Instance, AdversaryError> {
    if delta < 2 {
        return Err(AdversaryError::PreconditionViolated("delta must be at least 2".into()));
    }
    let mut sorted = pi.to_vec();
    sorted.sort_unstable();
    if sorted != (0..delta).collect::<Vec<_>>() {
        return Err(AdversaryError::PreconditionViolated(format!("{pi:?} is not a permutation of 0..{delta}")));
    }
    let mut labels = LabelAllocator::default();
    let x = labels.fresh();
    let y = labels.fresh();
    let xs = labels.fresh_many(delta);
    let ys = labels.fresh_many(delta);
    let mut stream = EdgeStream::new();
    for &xi in &xs {
        stream.push(x, xi).expect("star edge");
    }
    for &yi in &ys {
        stream.push(y, yi).expect("star edge");
    }
    for (i, &xi) in xs.iter().enumerate() {
        let h = build_h_between(delta - 1, xi, ys[pi[i]], &mut labels);
        for (a, b) in h.edges {
            stream.push(a, b).expect("gadget edge");
        }
    }
    Ok(Theorem5Instance { stream, pi: pi.to_vec(), x, y, xs, ys })
}

/// All permutations of 0..n in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Star colors at x and y after the first 2Δ edges.
fn star_colors(colors: &[Color], delta: usize) -> (Vec<Color>, Vec<Color>) {
    (colors[..delta].to_vec(), colors[delta..2 * delta].to_vec())
}

/// π is a losing choice for an algorithm whose stars got `cx`, `cy` iff some
/// gadget joins differently colored star edges: the gadget then needs Δ+1
/// colors.
fn defeats(pi: &[usize], cx: &[Color], cy: &[Color]) -> bool {
    pi.iter().enumerate().any(|(i, &j)| cx[i] != cy[j])
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem5Outcome {
    pub delta: usize,
    pub pi: Vec<usize>,
    pub x_colors: Vec<Color>,
    pub y_colors: Vec<Color>,
    pub colors_used: usize,
    pub forced: bool,
    pub report: RunReport,
}

/// Reveals the two stars to `alg`, picks the lexicographically first π that
/// joins two differently colored star edges, then reveals the gadgets.
pub fn theorem5_game(
    delta: usize,
    alg: &mut dyn OnlineAlgorithm,
    source: AdviceSource,
) -> Result<Theorem5Outcome, AdversaryError> {
    let stars = build_theorem5_instance(delta, &(0..delta).collect::<Vec<_>>())?;
    let mut sim = Simulation::new(source);
    for e in &stars.stream.edges()[..2 * delta] {
        sim.feed(alg, e)?;
    }
    let (cx, cy) = star_colors(sim.colors(), delta);
    let perms = permutations(delta);
    let pi = perms.iter().find(|p| defeats(p, &cx, &cy)).unwrap_or(&perms[0]).clone();
    let inst = build_theorem5_instance(delta, &pi)?;
    // The star prefix does not depend on π.
    debug_assert_eq!(inst.stream.edges()[..2 * delta], stars.stream.edges()[..2 * delta]);
    for e in &inst.stream.edges()[2 * delta..] {
        sim.feed(alg, e)?;
    }
    let report = sim.finish(alg, &inst.stream);
    Ok(Theorem5Outcome {
        delta,
        pi,
        x_colors: cx,
        y_colors: cy,
        colors_used: report.colors_used,
        forced: report.colors_used > delta,
        report,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem5FamilyOutcome {
    pub delta: usize,
    /// A π defeating every member, if one exists.
    pub pi: Option<Vec<usize>>,
    pub members: Vec<(String, usize)>,
    pub all_forced: bool,
}

/// Same game against a family on one shared input: after the stars, look
/// for a π that no member's star coloring matches. With fewer than Δ!
/// distinct star colorings such a π always exists.
pub fn theorem5_family_game(delta: usize, family: &mut AlgorithmFamily) -> Result<Theorem5FamilyOutcome, AdversaryError> {
    let stars = build_theorem5_instance(delta, &(0..delta).collect::<Vec<_>>())?;
    let mut sims: Vec<Simulation> = Vec::with_capacity(family.len());
    for alg in family.iter_mut() {
        let mut sim = Simulation::new(AdviceSource::None);
        for e in &stars.stream.edges()[..2 * delta] {
            sim.feed(alg.as_mut(), e)?;
        }
        sims.push(sim);
    }
    let colorings: Vec<_> = sims.iter().map(|s| star_colors(s.colors(), delta)).collect();
    let Some(pi) = permutations(delta).into_iter().find(|p| colorings.iter().all(|(cx, cy)| defeats(p, cx, cy))) else {
        return Ok(Theorem5FamilyOutcome { delta, pi: None, members: Vec::new(), all_forced: false });
    };
    let inst = build_theorem5_instance(delta, &pi)?;
    let mut members = Vec::with_capacity(family.len());
    for (alg, mut sim) in family.iter_mut().zip(sims) {
        for e in &inst.stream.edges()[2 * delta..] {
            sim.feed(alg.as_mut(), e)?;
        }
        members.push((alg.name(), sim.colors_used()));
    }
    let all_forced = members.iter().all(|&(_, c)| c > delta);
    Ok(Theorem5FamilyOutcome { delta, pi: Some(pi), members, all_forced })
}
