use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use edgecolor_advice::advice::{
    bits_per_edge, parse_records, serialize_records, AdviceMode, AdviceTape, BitString, OracleConfig,
};
use edgecolor_advice::coloring::{chromatic_index, is_proper, parse_coloring, serialize_coloring, ExactColorer};
use edgecolor_advice::graph::{serialize_stream, Graph};
use edgecolor_advice::online::{
    run_advice_pipeline, simulate, AdviceAlgorithm, AdviceModel, AdviceSource, Greedy, RunReport,
};
use serde::Serialize;
use serde_json::Value;

use crate::output::{json_line, load_stream, write_out};
use crate::PropertyViolation;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Alg {
    Advice,
    Greedy,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Request,
    Tape,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Robust,
}

impl From<Mode> for AdviceMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strict => AdviceMode::Strict,
            Mode::Robust => AdviceMode::Robust,
        }
    }
}

#[derive(Args, Debug, Serialize)]
pub struct RunArgs {
    stream: PathBuf,
    #[arg(long, value_enum, default_value = "advice")]
    alg: Alg,
    /// Defaults to request for the advice algorithm and none for greedy.
    #[arg(long, value_enum)]
    model: Option<Model>,
    #[arg(long, value_enum, default_value = "robust")]
    mode: Mode,
    /// Degeneracy bound shared by oracle and algorithm; padded actual
    /// degeneracy if absent.
    #[arg(long)]
    d: Option<usize>,
    /// Use this advice (records, or one tape line) instead of running the oracle.
    #[arg(long)]
    advice_in: Option<PathBuf>,
    #[arg(long)]
    advice_out: Option<PathBuf>,
    /// Where to write the stream as served (re-oriented in strict mode).
    #[arg(long)]
    stream_out: Option<PathBuf>,
    #[arg(long)]
    coloring_out: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Serialize)]
struct OracleSummary {
    d: usize,
    delta: usize,
    a: usize,
    b: usize,
    direct_edges: usize,
    partitioned_edges: usize,
    bits_per_edge: usize,
    header_bits: usize,
}

#[derive(Serialize)]
struct RunOutput<'a> {
    command: &'static str,
    config: &'a Value,
    stream_sha256: String,
    proper: bool,
    oracle: Option<OracleSummary>,
    report: RunReport,
}

pub fn cmd_run(args: &RunArgs, colorer: &ExactColorer, config: &Value) -> Result<()> {
    let loaded = load_stream(&args.stream)?;
    let mode = AdviceMode::from(args.mode);
    let model = args.model.unwrap_or(match args.alg {
        Alg::Advice => Model::Request,
        Alg::Greedy => Model::None,
    });
    if args.d == Some(0) {
        bail!("--d must be positive");
    }

    let (report, served, oracle) = match (args.alg, model) {
        (Alg::Greedy, Model::None) => {
            let r = simulate(&loaded.stream, &mut Greedy::new(), &AdviceSource::None)?;
            (r, loaded.stream.clone(), None)
        }
        (Alg::Greedy, _) => bail!("greedy reads no advice; use --model none"),
        (Alg::Advice, Model::None) => bail!("the advice algorithm needs --model request or tape"),
        (Alg::Advice, m) => {
            let adv_model = if m == Model::Tape { AdviceModel::Tape } else { AdviceModel::Request };
            match &args.advice_in {
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    let source = match adv_model {
                        AdviceModel::Request => AdviceSource::PerRequest(parse_records(&text)?),
                        AdviceModel::Tape => {
                            let line = text.split_whitespace().collect::<String>();
                            let bits: BitString = line.parse().context("tape file must hold 0/1 characters")?;
                            AdviceSource::Tape(AdviceTape { bits })
                        }
                    };
                    let mut alg = match (adv_model, args.d) {
                        (AdviceModel::Request, Some(d)) => AdviceAlgorithm::with_known_d(mode, d),
                        _ => AdviceAlgorithm::new(mode),
                    };
                    let r = simulate(&loaded.stream, &mut alg, &source)?;
                    let chi = chromatic_index(&Graph::from_stream(&loaded.stream), colorer)?;
                    (r.with_chromatic_index(chi), loaded.stream.clone(), None)
                }
                None => {
                    let cfg = OracleConfig { mode, d: args.d, colorer: colorer.clone() };
                    let run = run_advice_pipeline(&loaded.stream, &cfg, adv_model)?;
                    if let Some(path) = &args.advice_out {
                        let text = match &run.source {
                            AdviceSource::Tape(t) => format!("{}\n", t.bits),
                            _ => serialize_records(&run.oracle.records),
                        };
                        write_out(Some(path), &text)?;
                    }
                    let t = &run.oracle.trace;
                    let summary = OracleSummary {
                        d: run.oracle.d,
                        delta: t.delta,
                        a: t.a,
                        b: t.b,
                        direct_edges: t.direct.len(),
                        partitioned_edges: t.partitioned.len(),
                        bits_per_edge: bits_per_edge(run.oracle.d, mode),
                        header_bits: run.header_bits,
                    };
                    (run.report, run.oracle.stream, Some(summary))
                }
            }
        }
    };

    if let Some(path) = &args.stream_out {
        write_out(Some(path), &serialize_stream(&served))?;
    }
    if let Some(path) = &args.coloring_out {
        write_out(Some(path), &serialize_coloring(&served, &report.coloring))?;
    }
    let proper = is_proper(&Graph::from_stream(&served), &report.coloring);
    eprintln!(
        "{}: {} edges, {} colors{}, {} advice bits",
        report.algorithm,
        report.m,
        report.colors_used,
        report.chromatic_index.map(|c| format!(" (chromatic index {c})")).unwrap_or_default(),
        report.advice_bits_read
    );
    let suboptimal = args.alg == Alg::Advice && report.optimal != Some(true);
    let out = RunOutput { command: "run", config, stream_sha256: loaded.sha256, proper, oracle, report };
    write_out(args.report.as_deref(), &json_line(&out))?;
    if !proper {
        return Err(PropertyViolation("coloring is not proper".into()).into());
    }
    if suboptimal {
        return Err(PropertyViolation("advice algorithm was not optimal".into()).into());
    }
    Ok(())
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    stream: PathBuf,
    coloring: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    command: &'static str,
    config: &'a Value,
    stream_sha256: String,
    total: bool,
    proper: bool,
    colors_used: usize,
    chromatic_index: usize,
    optimal: bool,
}

pub fn cmd_verify(args: &VerifyArgs, colorer: &ExactColorer, config: &Value) -> Result<()> {
    let loaded = load_stream(&args.stream)?;
    let text = fs::read_to_string(&args.coloring).with_context(|| format!("reading {}", args.coloring.display()))?;
    let coloring = parse_coloring(&text, &loaded.stream)?;
    let g = Graph::from_stream(&loaded.stream);
    let chi = chromatic_index(&g, colorer)?;
    let total = coloring.is_total();
    let proper = total && is_proper(&g, &coloring);
    let colors_used = coloring.colors_used();
    eprintln!("total = {total}, proper = {proper}, {colors_used} colors, chromatic index {chi}");
    let out = VerifyOutput {
        command: "verify",
        config,
        stream_sha256: loaded.sha256,
        total,
        proper,
        colors_used,
        chromatic_index: chi,
        optimal: proper && colors_used == chi,
    };
    write_out(args.report.as_deref(), &json_line(&out))?;
    if !proper {
        return Err(PropertyViolation("coloring is not a proper total coloring".into()).into());
    }
    Ok(())
}
