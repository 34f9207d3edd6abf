use std::path::PathBuf;

use anyhow::Result;
use clap::{Subcommand, ValueEnum};
use edgecolor_advice::adversary::lemma2_check;
use edgecolor_advice::advice::{AdviceError, AdviceMode, OracleConfig};
use edgecolor_advice::coloring::{chromatic_index, is_proper, ColoringError, ExactColorer};
use edgecolor_advice::graph::{gen_d_degenerate, gen_forest, EdgeStream, Graph};
use edgecolor_advice::online::{run_advice_pipeline, simulate, AdviceModel, AdviceSource, Greedy, OnlineError};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{json_line, stream_hash, write_out};
use crate::run::Mode;
use crate::PropertyViolation;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Forest,
    D2,
    D3,
    D5,
    All,
}

#[derive(Subcommand, Debug, Serialize)]
pub enum CheckCommand {
    /// Exhaustive gadget-rigidity check on G_n.
    Lemma2 {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Generated batch: optimality, partition/rank invariants, decoder
    /// agreement, greedy bound.
    Invariants {
        #[arg(long, value_enum, default_value = "all")]
        class: Class,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "robust")]
        mode: Mode,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn instances(class: Class, count: usize, seed: u64) -> Vec<(&'static str, usize, EdgeStream)> {
    let classes: &[Class] = match class {
        Class::All => &[Class::Forest, Class::D2, Class::D3, Class::D5],
        _ => std::slice::from_ref(&class),
    };
    let mut out = Vec::new();
    for &c in classes {
        let mut s = seed;
        let mut made = 0;
        while made < count {
            let size = |lo: usize, span: usize| lo + (s as usize * 7) % span;
            let (name, d, st) = match c {
                Class::Forest => ("forest", 1, gen_forest(size(2, 99), s)),
                Class::D2 => ("2-degenerate", 2, gen_d_degenerate(size(3, 58), 2, s)),
                Class::D3 => ("3-degenerate", 3, gen_d_degenerate(size(4, 57), 3, s)),
                Class::D5 => ("5-degenerate", 5, gen_d_degenerate(size(6, 35), 5, s)),
                Class::All => unreachable!(),
            };
            s += 1;
            if d == 5 && Graph::from_stream(&st).max_degree() > 12 {
                continue;
            }
            out.push((name, d, st));
            made += 1;
        }
    }
    out
}

#[derive(Serialize)]
struct InstanceResult {
    class: &'static str,
    index: usize,
    stream_sha256: String,
    m: usize,
    delta: usize,
    chromatic_index: Option<usize>,
    advice_colors: Option<usize>,
    greedy_colors: usize,
    failures: Vec<String>,
    resource_limit: bool,
}

fn check_instance(
    class: &'static str,
    index: usize,
    d: usize,
    st: &EdgeStream,
    mode: AdviceMode,
    colorer: &ExactColorer,
) -> InstanceResult {
    let g = Graph::from_stream(st);
    let mut failures = Vec::new();
    let mut resource_limit = false;
    let mut note = |e: String, limit: bool, failures: &mut Vec<String>| {
        resource_limit |= limit;
        failures.push(e);
    };
    let chi = match chromatic_index(&g, colorer) {
        Ok(c) => Some(c),
        Err(e) => {
            note(e.to_string(), matches!(e, ColoringError::ResourceLimit { .. }), &mut failures);
            None
        }
    };
    let mut advice_colors = None;
    for model in [AdviceModel::Request, AdviceModel::Tape] {
        let cfg = OracleConfig { mode, d: Some(d), colorer: colorer.clone() };
        match run_advice_pipeline(st, &cfg, model) {
            Ok(run) => {
                let served = Graph::from_stream(&run.oracle.stream);
                if !is_proper(&served, &run.report.coloring) {
                    failures.push(format!("{model}: improper coloring"));
                }
                if chi.is_some_and(|c| c != run.report.colors_used) {
                    failures.push(format!("{model}: {} colors", run.report.colors_used));
                }
                if let Some(pt) = &run.oracle.trace.partition {
                    if pt.rank.iter().any(|&r| r > d) {
                        failures.push(format!("{model}: rank above d"));
                    }
                    let sub = Graph::from_stream(&run.oracle.stream.substream(&run.oracle.trace.partitioned));
                    if pt.partition.subsets.iter().any(|set| sub.edge_subgraph(set).max_degree() > 2 * d) {
                        failures.push(format!("{model}: subset above degree 2d"));
                    }
                }
                advice_colors = Some(run.report.colors_used);
            }
            Err(e) => {
                let limit = matches!(
                    e,
                    OnlineError::Oracle(AdviceError::Coloring(ColoringError::ResourceLimit { .. }))
                );
                note(format!("{model}: {e}"), limit, &mut failures);
            }
        }
    }
    let greedy_colors = match simulate(st, &mut Greedy::new(), &AdviceSource::None) {
        Ok(r) => r.colors_used,
        Err(e) => {
            failures.push(format!("greedy: {e}"));
            0
        }
    };
    if greedy_colors + 1 > 2 * g.max_degree().max(1) {
        failures.push(format!("greedy used {greedy_colors} colors"));
    }
    InstanceResult {
        class,
        index,
        stream_sha256: stream_hash(st),
        m: g.m(),
        delta: g.max_degree(),
        chromatic_index: chi,
        advice_colors,
        greedy_colors,
        failures,
        resource_limit,
    }
}

pub fn cmd_check(cmd: &CheckCommand, colorer: &ExactColorer, config: &Value) -> Result<()> {
    match cmd {
        CheckCommand::Lemma2 { n, report } => {
            if *n == 0 || *n > 4 {
                anyhow::bail!("lemma2 check supports n in 1..=4");
            }
            let r = lemma2_check(*n, colorer)?;
            eprintln!(
                "G_{n}: {} edges, {} tight colorings, all agree: {}, separable with {} colors: {} => {}",
                r.m,
                r.tight_colorings,
                r.tight_colorings_agree,
                n + 2,
                r.separable_with_n_plus_2,
                if r.holds { "pass" } else { "FAIL" }
            );
            write_out(report.as_deref(), &json_line(&json!({"command": "check lemma2", "config": config, "result": r})))?;
            if !r.holds {
                return Err(PropertyViolation(format!("rigidity fails for G_{n}")).into());
            }
            Ok(())
        }
        CheckCommand::Invariants { class, count, seed, mode, report } => {
            let mode = AdviceMode::from(*mode);
            let batch = instances(*class, *count, *seed);
            let results: Vec<InstanceResult> = batch
                .par_iter()
                .enumerate()
                .map(|(i, (name, d, st))| check_instance(name, i, *d, st, mode, colorer))
                .collect();
            let failed = results.iter().filter(|r| !r.failures.is_empty()).count();
            let limited = results.iter().any(|r| r.resource_limit);
            let mut text: String = results.iter().map(json_line).collect();
            text.push_str(&json_line(&json!({
                "summary": true,
                "config": config,
                "instances": results.len(),
                "failed": failed,
            })));
            write_out(report.as_deref(), &text)?;
            eprintln!("{} instances, {failed} failed", results.len());
            if limited {
                return Err(ColoringError::ResourceLimit { budget: colorer.node_budget }.into());
            }
            if failed > 0 {
                return Err(PropertyViolation(format!("{failed} instances broke an invariant")).into());
            }
            Ok(())
        }
    }
}
