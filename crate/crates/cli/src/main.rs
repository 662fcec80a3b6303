use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use spanner_core::fault::{eft_greedy_exact_with_budget, eft_modified_greedy, eft_union_spanner, BlockingRecord};
use spanner_core::format::{embed_subgraph, emit_graph, read_graph, subgraph, FormatError};
use spanner_core::greedy::greedy_matchings;
use spanner_core::verify::{
    size_report, verify_alpha_beta_with_budget, verify_eft_with_budget, verify_weighted_bound, VerificationReport,
    DEFAULT_VERIFY_BUDGET,
};
use spanner_core::{
    build_weighted_spanner, gen_big_clique, gen_eft_lower_bound, gen_hypercube, gen_random, gen_weighted_lower_bound,
    girth, greedy_dr_spanner, parallel_greedy_spanner, sqrt_k_spanner, union_hybrid_spanner, BaseGraph, Multigraph,
    SpannerError, SpannerResult, SubgraphView, WeightedSpannerResult,
};

const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

/// Build, stress and verify graph spanners.
#[derive(Parser)]
#[command(name = "spanner", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance graph.
    Gen(GenArgs),
    /// Build a spanner of a graph.
    Span(SpanArgs),
    /// Check a spanner against a contract; exit 2 on a counterexample, 3 when over budget.
    Verify(VerifyArgs),
    /// Edge count, size ratio and girth of a spanner.
    Stats(StatsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    BigClique,
    Hypercube,
    WeightedLb,
    EftLb,
    Gnp,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    /// Clique size for big-clique.
    #[arg(short = 't', default_value_t = 4)]
    t: usize,
    /// Dimension for hypercube; stretch parameter for weighted-lb.
    #[arg(short = 'k', default_value_t = 2)]
    k: usize,
    /// Base graph: cycle:N, path:N, k2, petersen, heawood.
    #[arg(long, default_value = "cycle:5")]
    base: String,
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    /// Parallel copies per base edge for eft-lb.
    #[arg(short = 'f', default_value_t = 1)]
    f: usize,
    #[arg(short = 'n', default_value_t = 50)]
    n: usize,
    #[arg(short = 'p', default_value_t = 0.1)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    weighted: bool,
    #[arg(short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    GreedyDr,
    Parallel,
    SqrtK,
    Union,
    Weighted,
    EftExact,
    EftFast,
    EftUnion,
}

#[derive(Args)]
struct SpanArgs {
    algo: Algo,
    #[arg(short = 'k', default_value_t = 2)]
    k: usize,
    /// Pair distance; defaults to 1 for greedy-dr and 2 for eft-exact.
    #[arg(short = 'd')]
    d: Option<usize>,
    /// Allowed spanner distance; defaults to 2k−1 for d = 1 and 2k otherwise.
    #[arg(short = 'r')]
    r: Option<usize>,
    #[arg(short = 'f', default_value_t = 0)]
    f: usize,
    /// eft-union: use the polynomial-time 2 → 2k part.
    #[arg(long)]
    fast: bool,
    #[arg(short = 'i')]
    input: PathBuf,
    #[arg(short = 'o')]
    output: Option<PathBuf>,
    /// Write construction provenance as JSON lines.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Cap on fault-search BFS calls per path (eft-exact).
    #[arg(long, default_value_t = spanner_core::fault::DEFAULT_FAULT_BUDGET)]
    search_budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Contract {
    Dr,
    Eft,
    AlphaBeta,
    Weighted,
}

#[derive(Args)]
struct VerifyArgs {
    contract: Contract,
    #[arg(short = 'i')]
    input: PathBuf,
    #[arg(short = 's')]
    spanner: PathBuf,
    #[arg(short = 'd', default_value_t = 1)]
    d: usize,
    #[arg(short = 'r')]
    r: Option<usize>,
    #[arg(short = 'f', default_value_t = 0)]
    f: usize,
    #[arg(short = 'k', default_value_t = 2)]
    k: usize,
    #[arg(long)]
    alpha: Option<usize>,
    #[arg(long)]
    beta: Option<usize>,
    #[arg(long, default_value_t = 6)]
    max_hops: usize,
    #[arg(long, default_value_t = 500)]
    sample: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Overrides SPANNER_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(short = 's')]
    spanner: PathBuf,
    #[arg(short = 'k')]
    k: Option<u32>,
}

enum Failure {
    Usage(String),
    Data(String),
    Io(String),
    Budget(String),
}

impl From<SpannerError> for Failure {
    fn from(e: SpannerError) -> Self {
        match e {
            SpannerError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            SpannerError::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Io { .. } => Failure::Io(e.to_string()),
            FormatError::Parse { .. } => Failure::Data(e.to_string()),
        }
    }
}

fn io_failure(path: Option<&Path>, e: io::Error) -> Failure {
    match path {
        Some(p) => Failure::Io(format!("{}: {e}", p.display())),
        None => Failure::Io(e.to_string()),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_failure(Some(p), e)),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| io_failure(None, e)),
    }
}

fn run_gen(a: &GenArgs) -> Result<u8, Failure> {
    let base = || a.base.parse::<BaseGraph>().map(BaseGraph::build);
    let bundle = match a.family {
        Family::BigClique => gen_big_clique(a.t)?,
        Family::Hypercube => gen_hypercube(a.k)?,
        Family::WeightedLb => gen_weighted_lower_bound(&base()?, a.eps, a.k)?,
        Family::EftLb => gen_eft_lower_bound(&base()?, a.f)?,
        Family::Gnp => gen_random(a.n, a.p, a.seed, a.weighted)?,
    };
    write_output(a.output.as_deref(), &emit_graph(&bundle.graph))?;
    Ok(0)
}

struct Trace {
    out: Option<BufWriter<File>>,
    path: Option<PathBuf>,
}

impl Trace {
    fn open(path: Option<&Path>) -> Result<Self, Failure> {
        let out = match path {
            Some(p) => Some(BufWriter::new(File::create(p).map_err(|e| io_failure(Some(p), e))?)),
            None => None,
        };
        Ok(Self {
            out,
            path: path.map(Path::to_path_buf),
        })
    }

    fn record(&mut self, value: serde_json::Value) -> Result<(), Failure> {
        if let Some(out) = &mut self.out {
            writeln!(out, "{value}").map_err(|e| io_failure(self.path.as_deref(), e))?;
        }
        Ok(())
    }

    fn finish(self) -> Result<(), Failure> {
        if let Some(mut out) = self.out {
            out.flush().map_err(|e| io_failure(self.path.as_deref(), e))?;
        }
        Ok(())
    }
}

fn trace_unweighted(trace: &mut Trace, res: &SpannerResult, rec: Option<&BlockingRecord>) -> Result<(), Failure> {
    trace.record(json!({
        "algorithm": res.algorithm,
        "params": res.params,
        "edges": res.edges.len(),
        "paths": res.added_paths.len(),
    }))?;
    for (i, p) in res.added_paths.iter().enumerate() {
        let mut line = json!({"index": i, "vertices": p.vertices(), "edges": p.edges()});
        if let Some(rec) = rec {
            line["witness"] = json!(rec.witnesses[i].edges);
        }
        trace.record(line)?;
    }
    for b in &res.boosts {
        trace.record(json!({"boost": b}))?;
    }
    Ok(())
}

fn trace_weighted(trace: &mut Trace, res: &WeightedSpannerResult) -> Result<(), Failure> {
    trace.record(json!({"algorithm": "weighted", "k": res.k, "n": res.n, "edges": res.edge_count()}))?;
    for phase in spanner_core::weighted::Phase::ALL {
        trace.record(json!({"phase": phase, "edges": res.phase(phase)}))?;
    }
    let sat: Vec<usize> = (0..res.saturation.saturated.len())
        .filter(|&e| res.saturation.saturated[e])
        .collect();
    trace.record(json!({"saturated": sat, "first_clustered": res.saturation.first_clustered}))?;
    for entry in &res.lateral {
        trace.record(json!({"lateral": entry}))?;
    }
    for entry in &res.reduction {
        trace.record(json!({"reduction": entry}))?;
    }
    for entry in &res.repairs {
        trace.record(json!({"repair": entry}))?;
    }
    Ok(())
}

fn run_span(a: &SpanArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.input)?;
    let k = a.k;
    if k == 0 {
        return Err(Failure::Usage("-k must be at least 1".into()));
    }
    let mut trace = Trace::open(a.trace.as_deref())?;
    let edges = match a.algo {
        Algo::Weighted => {
            let res = build_weighted_spanner(&g, k)?;
            trace_weighted(&mut trace, &res)?;
            res.edges()
        }
        algo => {
            let (res, rec) = match algo {
                Algo::GreedyDr => {
                    let d = a.d.unwrap_or(1);
                    let r = a.r.unwrap_or(if d == 1 { 2 * k - 1 } else { 2 * k });
                    (greedy_dr_spanner(&g, d, r)?, None)
                }
                Algo::Parallel => (parallel_greedy_spanner(&g, k, &greedy_matchings(&g))?, None),
                Algo::SqrtK => (sqrt_k_spanner(&g, k)?, None),
                Algo::Union => (union_hybrid_spanner(&g, k)?, None),
                Algo::EftExact => {
                    let d = a.d.unwrap_or(2);
                    let r = a.r.unwrap_or(if d == 1 { 2 * k - 1 } else { 2 * k });
                    let (res, rec) = eft_greedy_exact_with_budget(&g, d, r, a.f, a.search_budget)?;
                    (res, Some(rec))
                }
                Algo::EftFast => {
                    let (res, rec) = eft_modified_greedy(&g, k, a.f)?;
                    (res, Some(rec))
                }
                Algo::EftUnion => (eft_union_spanner(&g, k, a.f, a.fast)?, None),
                Algo::Weighted => unreachable!(),
            };
            trace_unweighted(&mut trace, &res, rec.as_ref())?;
            res.edges
        }
    };
    trace.finish()?;
    write_output(a.output.as_deref(), &emit_graph(&subgraph(&g, &edges)))?;
    Ok(0)
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("SPANNER_BUDGET") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("SPANNER_BUDGET must be an integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_VERIFY_BUDGET),
    }
}

fn report_unweighted(report: &VerificationReport) -> u8 {
    println!("{}", serde_json::to_string(report).expect("report serialises"));
    match &report.counterexample {
        None => {
            println!("PASS");
            0
        }
        Some(c) => {
            let h = c.h_dist.map_or("inf".to_string(), |d| d.to_string());
            println!(
                "counterexample: F={:?} x={} y={} dist_G={} dist_H={} bound={}",
                c.faults, c.x, c.y, c.g_dist, h, c.bound
            );
            EXIT_COUNTEREXAMPLE
        }
    }
}

fn run_verify(a: &VerifyArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.input)?;
    let h_graph = read_graph(&a.spanner)?;
    let h = embed_subgraph(&g, &h_graph).map_err(|i| {
        Failure::Data(format!(
            "{}: edge line {} has no matching edge in {}",
            a.spanner.display(),
            i,
            a.input.display()
        ))
    })?;
    let budget = budget(a.budget)?;
    match a.contract {
        Contract::Dr | Contract::Eft => {
            let f = if matches!(a.contract, Contract::Dr) { 0 } else { a.f };
            let r = a.r.ok_or_else(|| Failure::Usage("-r is required".into()))?;
            Ok(report_unweighted(&verify_eft_with_budget(&g, &h, a.d, r, f, budget)?))
        }
        Contract::AlphaBeta => {
            let alpha = a.alpha.unwrap_or(a.k);
            let beta = a.beta.unwrap_or(a.k.saturating_sub(1));
            Ok(report_unweighted(&verify_alpha_beta_with_budget(&g, &h, alpha, beta, a.f, budget)?))
        }
        Contract::Weighted => {
            let report = verify_weighted_bound(&g, &h, a.k, a.max_hops, a.sample, a.seed)?;
            println!("{}", serde_json::to_string(&report).expect("report serialises"));
            if report.pass {
                println!("PASS");
                Ok(0)
            } else {
                println!(
                    "counterexample: path={:?} ratio={}",
                    report.worst_path.as_deref().unwrap_or(&[]),
                    report.worst_ratio
                );
                Ok(EXIT_COUNTEREXAMPLE)
            }
        }
    }
}

fn run_stats(a: &StatsArgs) -> Result<u8, Failure> {
    let h: Multigraph = read_graph(&a.spanner)?;
    let size = size_report(h.edge_count(), h.n(), a.k);
    let g = girth(&SubgraphView::full(&h)).map_or("inf".to_string(), |g| g.to_string());
    println!("n={}", h.n());
    println!("edges={}", h.edge_count());
    match a.k {
        Some(k) => println!("ratio(n^(1+1/{k}))={:.6}", size.ratio),
        None => println!("ratio(n)={:.6}", size.ratio),
    }
    println!("girth={g}");
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Gen(a) => run_gen(a),
        Command::Span(a) => run_span(a),
        Command::Verify(a) => run_verify(a),
        Command::Stats(a) => run_stats(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Data(m) => (EXIT_DATA, m),
                Failure::Io(m) => (EXIT_IO, m),
                Failure::Budget(m) => (EXIT_BUDGET, m),
            };
            eprintln!("spanner: {msg}");
            ExitCode::from(code)
        }
    }
}
