use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use edgecolor_advice::adversary::build_theorem5_instance;
use edgecolor_advice::graph::{
    build_g, degeneracy, gen_bipartite, gen_d_degenerate, gen_forest, gen_star, serialize_stream, Graph,
};
use serde::Serialize;

use crate::output::write_out;

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    DDegenerate,
    Forest,
    Bipartite,
    Star,
    #[value(name = "gadget-g")]
    GadgetG,
    Theorem5,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Vertices (d-degenerate, forest) or gadget size (gadget-g).
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum degree (star, theorem5).
    #[arg(long, default_value_t = 3)]
    delta: usize,
    /// Side sizes and edge probability (bipartite).
    #[arg(long, default_value_t = 5)]
    left: usize,
    #[arg(long, default_value_t = 5)]
    right: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Permutation for theorem5, 0-based and comma-separated; identity if absent.
    #[arg(long, value_delimiter = ',')]
    pi: Option<Vec<usize>>,
    /// Output file; stdout if absent.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

pub fn cmd_gen(args: &GenArgs) -> Result<()> {
    let mut header = String::new();
    let text = match args.kind {
        Kind::DDegenerate => {
            if args.n == 0 || args.d == 0 {
                bail!("--n and --d must be positive");
            }
            serialize_stream(&gen_d_degenerate(args.n, args.d, args.seed))
        }
        Kind::Forest => {
            if args.n == 0 {
                bail!("--n must be positive");
            }
            serialize_stream(&gen_forest(args.n, args.seed))
        }
        Kind::Bipartite => {
            if !(0.0..=1.0).contains(&args.p) {
                bail!("--p must lie in [0, 1]");
            }
            serialize_stream(&gen_bipartite(args.left, args.right, args.p, args.seed))
        }
        Kind::Star => serialize_stream(&gen_star(args.delta)),
        Kind::GadgetG => {
            if args.n == 0 {
                bail!("--n must be positive");
            }
            let g = build_g(args.n);
            writeln!(header, "# G_{} gadget", args.n)?;
            let mut body = String::new();
            for e in &g.stream {
                write!(body, "{} {}", e.u, e.v)?;
                if e.arrival == g.e_left {
                    body.push_str("  # e_l");
                } else if e.arrival == g.e_right {
                    body.push_str("  # e_r");
                }
                body.push('\n');
            }
            body
        }
        Kind::Theorem5 => {
            let pi = args.pi.clone().unwrap_or_else(|| (0..args.delta).collect());
            let inst = build_theorem5_instance(args.delta, &pi)?;
            writeln!(header, "# theorem-5 instance, delta {}, pi {:?}", args.delta, pi)?;
            serialize_stream(&inst.stream)
        }
    };
    let stream = edgecolor_advice::graph::parse_stream(&text)?;
    let g = Graph::from_stream(&stream);
    let (d, _) = degeneracy(&g);
    eprintln!("n = {}, m = {}, max degree = {}, degeneracy = {d}", g.n(), g.m(), g.max_degree());
    write_out(args.out.as_deref(), &(header + &text))
}
