use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Result};
use clap::Subcommand;
use edgecolor_advice::adversary::{
    advice_family, greedy_family, greedy_variants, theorem4_game, theorem5_family_game, theorem5_game,
    AlgorithmFamily,
};
use edgecolor_advice::coloring::ExactColorer;
use edgecolor_advice::graph::{serialize_stream, Graph};
use edgecolor_advice::online::{AdviceSource, Greedy};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::output::{json_line, stream_hash, write_out};
use crate::PropertyViolation;

/// `greedy`, `greedy-variants:K`, or `advice:B` (one bit-guided greedy per
/// B-bit advice string).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Greedy,
    GreedyVariants(usize),
    Advice(usize),
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |v: &str| v.parse::<usize>().map_err(|_| format!("bad count in {s:?}"));
        match s.split_once(':') {
            None if s == "greedy" => Ok(FamilySpec::Greedy),
            Some(("greedy-variants", k)) => num(k).and_then(|k| {
                if k == 0 {
                    Err("greedy-variants needs at least one member".into())
                } else {
                    Ok(FamilySpec::GreedyVariants(k))
                }
            }),
            Some(("advice", b)) => num(b).and_then(|b| {
                if b > 16 {
                    Err("advice families are limited to 16 bits".into())
                } else {
                    Ok(FamilySpec::Advice(b))
                }
            }),
            _ => Err(format!("unknown family {s:?} (expected greedy, greedy-variants:K or advice:B)")),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Greedy => f.write_str("greedy"),
            FamilySpec::GreedyVariants(k) => write!(f, "greedy-variants:{k}"),
            FamilySpec::Advice(b) => write!(f, "advice:{b}"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FamilySpec {
    fn build(self, delta: usize) -> AlgorithmFamily {
        match self {
            FamilySpec::Greedy => greedy_family(),
            FamilySpec::GreedyVariants(k) => greedy_variants(delta, k),
            FamilySpec::Advice(b) => advice_family(b),
        }
    }
}

#[derive(Subcommand, Debug, Serialize)]
pub enum AdversaryCommand {
    /// Star-row elimination game against a family of algorithms.
    Theorem4 {
        #[arg(long, default_value_t = 2)]
        delta: usize,
        #[arg(long, default_value = "greedy")]
        family: FamilySpec,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        /// JSON-lines transcript; stdout if absent.
        #[arg(long)]
        transcript: Option<PathBuf>,
        #[arg(long)]
        stream_out: Option<PathBuf>,
    },
    /// Permutation-gadget game against one algorithm or a family.
    Theorem5 {
        #[arg(long, default_value_t = 2)]
        delta: usize,
        #[arg(long, default_value = "greedy")]
        alg: FamilySpec,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

pub fn cmd_adversary(cmd: &AdversaryCommand, _colorer: &ExactColorer, config: &Value) -> Result<()> {
    match cmd {
        AdversaryCommand::Theorem4 { delta, family, rounds, transcript, stream_out } => {
            if *delta < 2 || *delta > 4 {
                bail!("theorem4 games are supported for delta in 2..=4");
            }
            if *rounds == 0 {
                bail!("--rounds must be positive");
            }
            let mut fam = family.build(*delta);
            let t = theorem4_game(*delta, &mut fam, *rounds)?;
            let g = Graph::from_stream(&t.final_stream);
            let forest = g.is_forest() && g.max_degree() == *delta;
            let decay = t.rounds.iter().all(|r| r.decay_ok);
            let mut text = String::new();
            for r in &t.rounds {
                text.push_str(&json_line(r));
            }
            text.push_str(&json_line(&json!({
                "summary": true,
                "config": config,
                "delta": t.delta,
                "alpha": t.alpha,
                "beta": t.beta,
                "rows": t.rows,
                "m": t.m,
                "stream_sha256": stream_hash(&t.final_stream),
                "forest_of_max_degree_delta": forest,
                "decay_ok": decay,
                "all_dead": t.all_dead(),
                "members": t.members,
            })));
            write_out(transcript.as_deref(), &text)?;
            if let Some(path) = stream_out {
                write_out(Some(path), &serialize_stream(&t.final_stream))?;
            }
            let alive = t.members.iter().filter(|m| m.alive).count();
            eprintln!("{} members, {alive} alive after {} rounds, {} edges", t.members.len(), t.rows, t.m);
            if !forest || !decay {
                return Err(PropertyViolation("transcript broke the forest or decay invariant".into()).into());
            }
            Ok(())
        }
        AdversaryCommand::Theorem5 { delta, alg, report } => {
            if *delta < 2 || *delta > 6 {
                bail!("theorem5 games are supported for delta in 2..=6");
            }
            let value = match alg {
                FamilySpec::Greedy => {
                    let out = theorem5_game(*delta, &mut Greedy::new(), AdviceSource::None)?;
                    eprintln!("pi = {:?}: greedy used {} colors (forced: {})", out.pi, out.colors_used, out.forced);
                    json!({"command": "adversary theorem5", "config": config, "outcome": out})
                }
                family => {
                    let mut fam = family.build(*delta);
                    let out = theorem5_family_game(*delta, &mut fam)?;
                    match &out.pi {
                        Some(pi) => eprintln!("pi = {pi:?}: all {} members forced: {}", out.members.len(), out.all_forced),
                        None => eprintln!("every permutation is matched by some member"),
                    }
                    json!({"command": "adversary theorem5", "config": config, "outcome": out})
                }
            };
            write_out(report.as_deref(), &json_line(&value))
        }
    }
}
