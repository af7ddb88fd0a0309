//! The `slimtw` command line. Every subcommand emits a JSON artifact tagged with `kind`;
//! `verify` re-checks any artifact against its graph.
//!
//! Exit codes: 0 success, 1 property refuted (the artifact is the witness), 2 usage or input
//! error, 3 budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::barriers::{
    barrier_separates, caterpillar_certificate, mineable_to_barrier, verify_barrier, verify_mineable, Barrier,
    BarrierError, MineCertificate,
};
use crate::bounds::{bound_r_sequence, closed_form_check, psi, BoundParams, ClosedFormCheck};
use crate::decomposition::{exact_treewidth, heuristic_td, verify_td, StarForest, TreeDecomposition, HARD_EXACT_CAP};
use crate::graph::{
    delete_vertices, generate, is_balanced_separator, is_separator, Graph, GraphKind, VertexSet, WeightFunction,
};
use crate::minors::{
    class_membership, find_induced_minor, max_clique, verify_model, Membership, MinorModel, MinorSearch,
};
use crate::pipeline::{contraction_provider, treewidth_bound_pipeline, PipelineError, PipelineLevel};
use crate::separator::{basket, MineOutcome, SepError, SlimEngine, SlimParams};
use crate::slimness::{check_path_family, check_tq_slim, is_slim_pair, max_anticomplete_paths, PathFamily, SlimCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const DEFAULT_BUDGET: u64 = 2_000_000;
pub const BUDGET_ENV: &str = "SLIMTW_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "slimtw", version, about = "Slim-pair separators and treewidth certificates")]
pub struct Cli {
    /// JSON file with any of the numeric parameters, plus `seed` and `budget`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Search budget (node expansions); falls back to the config, then SLIMTW_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Where to write the artifact (atomically). Without it JSON goes to stdout.
    #[arg(short, long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Default, Clone)]
pub struct ParamArgs {
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub x: Option<usize>,
    #[arg(long)]
    pub phi: Option<f64>,
    #[arg(long)]
    pub d1: Option<usize>,
    #[arg(long)]
    pub d2: Option<f64>,
    #[arg(long)]
    pub d3: Option<f64>,
    #[arg(long)]
    pub c0: Option<f64>,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Complete,
    Bipartite,
    Path,
    Cycle,
    Hex,
    Random,
    Caterpillar,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph in edge-list format.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Look for a K_{t,t} or W_{t×t} induced minor, or for `--pattern`.
    CheckMinor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Maximum clique, refuting when it has at least t vertices.
    Clique {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Slimness of a pair (with --a/--b) or (t, s)-slimness of the whole graph.
    Slim {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Fewer than q bags meeting every a–b path.
    Basket {
        #[command(flatten)]
        pair: PairArgs,
        /// PACE decomposition; a heuristic one is used otherwise.
        #[arg(long)]
        td: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Mine a separator or a certificate out of decompositions.
    Mine {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        forest: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Turn a mineable certificate into a barrier.
    Barrier {
        #[command(flatten)]
        pair: PairArgs,
        /// Certificate JSON; with `--caterpillar` the fixture certificate is used.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        caterpillar: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Separate a slim pair.
    Separate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        forest: Option<PathBuf>,
        /// Write the recursion trace as JSON lines.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// (w, 1/2)-balanced separator; uniform weights unless `--weights` (JSON array).
    BalancedSep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long)]
        forest: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run the treewidth pipeline.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        /// Also write the decomposition in PACE format.
        #[arg(long)]
        pace: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Exact treewidth.
    TwExact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 20)]
        cap: usize,
        #[arg(long)]
        pace: Option<PathBuf>,
    },
    /// Bound arithmetic at a given n.
    Bound {
        #[arg(long)]
        n: f64,
        #[arg(long, default_value_t = 10)]
        max_i: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Re-check an artifact (JSON or PACE) against its graph.
    Verify {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        artifact: PathBuf,
    },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Config {
    #[serde(flatten)]
    pub params: BoundParams,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Artifact {
    MinorModel {
        model: MinorModel,
    },
    MinorFree {
        t: Option<usize>,
        pattern: Option<Vec<(usize, usize)>>,
        pattern_n: Option<usize>,
    },
    Clique {
        t: usize,
        clique: VertexSet,
        below: bool,
    },
    PathFamily {
        s: usize,
        family: PathFamily,
        slim: bool,
    },
    SlimCheck {
        t: usize,
        s: usize,
        result: SlimCheck,
    },
    Basket {
        a: usize,
        b: usize,
        q: usize,
        td: TreeDecomposition,
        nodes: Vec<usize>,
    },
    Mine {
        a: usize,
        b: usize,
        outcome: MineOutcome,
    },
    Barrier {
        a: usize,
        b: usize,
        barrier: Barrier,
        m: VertexSet,
    },
    Separator {
        a: usize,
        b: usize,
        separator: VertexSet,
    },
    BalancedSeparator {
        weights: Vec<f64>,
        c: f64,
        separator: VertexSet,
    },
    Decomposition {
        width: usize,
        dimension: usize,
        log2_theoretical_bound: f64,
        membership: String,
        td: TreeDecomposition,
        trace: Vec<PipelineLevel>,
    },
    Treewidth {
        width: usize,
        td: TreeDecomposition,
    },
    Bound {
        params: BoundParams,
        n: f64,
        psi: f64,
        r: usize,
        r0: f64,
        c0: f64,
        log2_r: Vec<f64>,
        closed_form: Vec<ClosedFormCheck>,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Budget(String),
    Refuted(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Budget(_) => EXIT_BUDGET,
            Failure::Refuted(_) => EXIT_REFUTED,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

impl From<SepError> for Failure {
    fn from(e: SepError) -> Self {
        match &e {
            SepError::Hypothesis(_) | SepError::Falsification(_) => Failure::Refuted(e.to_string()),
            SepError::DepthGuard(_) => Failure::Budget(e.to_string()),
            SepError::Barrier(b) => barrier_failure(b),
            _ => usage(e),
        }
    }
}

fn barrier_failure(e: &BarrierError) -> Failure {
    match e {
        BarrierError::PathBudget(_) | BarrierError::StateBudget(_) => Failure::Budget(e.to_string()),
        BarrierError::Graph(_) | BarrierError::Overlap(..) | BarrierError::EndpointInBarrier(_) => usage(e),
        _ => Failure::Refuted(e.to_string()),
    }
}

/// Outcome of a subcommand before it is written out.
struct Outcome {
    artifact: Option<Artifact>,
    raw: Option<String>,
    summary: String,
    code: i32,
}

impl Outcome {
    fn ok(artifact: Artifact, summary: String) -> Self {
        Self { artifact: Some(artifact), raw: None, summary, code: EXIT_OK }
    }
    fn refuted(artifact: Artifact, summary: String) -> Self {
        Self { artifact: Some(artifact), raw: None, summary, code: EXIT_REFUTED }
    }
}

/// Parses `argv` (including the program name), runs and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(out) => match emit(&cli, &out) {
            Ok(()) => out.code,
            Err(f) => {
                eprintln!("error: {}", describe(&f));
                f.code()
            }
        },
        Err(f) => {
            eprintln!("error: {}", describe(&f));
            f.code()
        }
    }
}

fn describe(f: &Failure) -> &str {
    match f {
        Failure::Usage(m) | Failure::Budget(m) | Failure::Refuted(m) => m,
    }
}

fn emit(cli: &Cli, out: &Outcome) -> Result<(), Failure> {
    let body = match (&out.raw, &out.artifact) {
        (Some(raw), _) => raw.clone(),
        (None, Some(a)) => serde_json::to_string_pretty(a).map_err(usage)? + "\n",
        (None, None) => String::new(),
    };
    match &cli.out {
        Some(path) => write_atomic(path, &body).map_err(usage)?,
        None if cli.format == Format::Json || out.raw.is_some() => print!("{body}"),
        None => {}
    }
    if cli.format == Format::Text && !out.summary.is_empty() && !(cli.out.is_none() && out.raw.is_some()) {
        println!("{}", out.summary);
    }
    Ok(())
}

/// Writes next to the destination, then renames over it.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn load_config(cli: &Cli) -> Result<Config, Failure> {
    match &cli.config {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| usage(format!("config: {e}")))
        }
        None => Ok(Config::default()),
    }
}

/// Flags override the config, which overrides the defaults.
fn merged(cfg: &Config, a: &ParamArgs) -> Result<BoundParams, Failure> {
    let mut p = cfg.params.clone();
    p.t = a.t.unwrap_or(p.t);
    p.p = a.p.unwrap_or(p.p);
    p.q = a.q.unwrap_or(p.q);
    p.r = a.r.or(p.r);
    p.x = a.x.unwrap_or(p.x);
    p.phi = a.phi.unwrap_or(p.phi);
    p.d1 = a.d1.unwrap_or(p.d1);
    p.d2 = a.d2.unwrap_or(p.d2);
    p.d3 = a.d3.unwrap_or(p.d3);
    p.c0 = a.c0.or(p.c0);
    p.validate().map_err(usage)?;
    Ok(p)
}

fn budget(cli: &Cli, cfg: &Config) -> Result<u64, Failure> {
    if let Some(b) = cli.budget.or(cfg.budget) {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{BUDGET_ENV} must be an integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn read_graph(p: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
    Graph::parse_edge_list(&text).map_err(usage)
}

fn read_json<T: for<'de> Deserialize<'de>>(p: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", p.display())))
}

fn read_forest(g: &Graph, p: &Option<PathBuf>) -> Result<StarForest, Failure> {
    match p {
        Some(p) => {
            let f: StarForest = read_json(p)?;
            f.validate(g).map_err(usage)?;
            Ok(f)
        }
        None => Ok(StarForest::empty()),
    }
}

fn slim_params(p: &BoundParams) -> SlimParams {
    SlimParams::from(p)
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let cfg = load_config(cli)?;
    let budget = budget(cli, &cfg)?;
    match &cli.command {
        Command::Gen { kind, n, s, t, m, x, seed } => {
            let need = |v: Option<usize>, name: &str| v.ok_or_else(|| usage(format!("--{name} is required")));
            let gk = match kind {
                Kind::Complete => GraphKind::Complete { n: need(*n, "n")? },
                Kind::Bipartite => GraphKind::CompleteBipartite { s: need(*s, "s")?, t: need(*t, "t")? },
                Kind::Path => GraphKind::Path { n: need(*n, "n")? },
                Kind::Cycle => GraphKind::Cycle { n: need(*n, "n")? },
                Kind::Hex => GraphKind::HexGrid { t: need(*t, "t")? },
                Kind::Caterpillar => GraphKind::Caterpillar { x: need(*x, "x")? },
                Kind::Random => GraphKind::Random {
                    n: need(*n, "n")?,
                    m: need(*m, "m")?,
                    seed: seed.or(cfg.seed).ok_or_else(|| usage("random graphs need --seed"))?,
                },
            };
            let g = generate(&gk).map_err(usage)?;
            Ok(Outcome {
                artifact: None,
                summary: format!("n={} m={}", g.n(), g.m()),
                raw: Some(g.to_edge_list()),
                code: EXIT_OK,
            })
        }
        Command::CheckMinor { graph, pattern, params } => {
            let g = read_graph(graph)?;
            let p = merged(&cfg, params)?;
            if let Some(pp) = pattern {
                let h = read_graph(pp)?;
                return match find_induced_minor(&g, &h, budget).map_err(usage)? {
                    MinorSearch::Found(model) => {
                        Ok(Outcome::refuted(Artifact::MinorModel { model }, "pattern found as an induced minor".into()))
                    }
                    MinorSearch::NotFound => Ok(Outcome::ok(
                        Artifact::MinorFree { t: None, pattern: Some(h.edges()), pattern_n: Some(h.n()) },
                        "pattern is not an induced minor".into(),
                    )),
                    MinorSearch::BudgetExhausted => Err(Failure::Budget("minor search budget exhausted".into())),
                };
            }
            match class_membership(&g, p.t, budget).map_err(usage)? {
                Membership::NotInClass(model) => {
                    Ok(Outcome::refuted(Artifact::MinorModel { model }, format!("not in the class for t={}", p.t)))
                }
                Membership::InClass => Ok(Outcome::ok(
                    Artifact::MinorFree { t: Some(p.t), pattern: None, pattern_n: None },
                    format!("no K_{{t,t}} or W_{{t×t}} induced minor for t={}", p.t),
                )),
                Membership::Unknown => Err(Failure::Budget("membership undecided within budget".into())),
            }
        }
        Command::Clique { graph, params } => {
            let g = read_graph(graph)?;
            let p = merged(&cfg, params)?;
            let clique = max_clique(&g);
            let below = clique.len() < p.t;
            let summary = format!("clique number {}", clique.len());
            let a = Artifact::Clique { t: p.t, clique, below };
            Ok(if below { Outcome::ok(a, summary) } else { Outcome::refuted(a, summary) })
        }
        Command::Slim { graph, a, b, s, params } => {
            let g = read_graph(graph)?;
            match (a, b) {
                (Some(a), Some(b)) => {
                    let family = max_anticomplete_paths(&g, *a, *b, *s).map_err(usage)?;
                    let slim = family.len() < *s;
                    let summary =
                        format!("{} anticomplete paths; {}-{}", family.len(), s, if slim { "slim" } else { "wide" });
                    let art = Artifact::PathFamily { s: *s, family, slim };
                    Ok(if slim { Outcome::ok(art, summary) } else { Outcome::refuted(art, summary) })
                }
                (None, None) => {
                    let t = merged(&cfg, params)?.t;
                    let result = check_tq_slim(&g, t, *s).map_err(usage)?;
                    let ok = result == SlimCheck::Ok;
                    let art = Artifact::SlimCheck { t, s: *s, result };
                    let summary = format!("({t}, {s})-slim: {ok}");
                    Ok(if ok { Outcome::ok(art, summary) } else { Outcome::refuted(art, summary) })
                }
                _ => Err(usage("give both --a and --b, or neither")),
            }
        }
        Command::Basket { pair, td, params } => {
            let g = read_graph(&pair.graph)?;
            let p = merged(&cfg, params)?;
            let td = match td {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(usage)?;
                    TreeDecomposition::from_pace(&text).map_err(usage)?.0
                }
                None => heuristic_td(&g, 12),
            };
            let nodes = basket(&g, &td, pair.a, pair.b, p.q)?;
            let summary = format!("basket of {} node(s): {:?}", nodes.len(), nodes);
            Ok(Outcome::ok(Artifact::Basket { a: pair.a, b: pair.b, q: p.q, td, nodes }, summary))
        }
        Command::Mine { pair, forest, params } => {
            let g = read_graph(&pair.graph)?;
            let f = read_forest(&g, forest)?;
            let mut sp = slim_params(&merged(&cfg, params)?);
            sp.enforce_psi = false;
            let outcome = SlimEngine::new(sp, contraction_provider).mineslim(&g, &f, pair.a, pair.b)?;
            let summary = match &outcome {
                MineOutcome::Separator { d, iterations } => {
                    format!("separator of size {} after {iterations} step(s)", d.len())
                }
                MineOutcome::Mineable { d, cert } => {
                    format!("certificate with {} step(s), |D|={}", cert.x_sets.len(), d.len())
                }
            };
            Ok(Outcome::ok(Artifact::Mine { a: pair.a, b: pair.b, outcome }, summary))
        }
        Command::Barrier { pair, cert, caterpillar, params } => {
            let g = read_graph(&pair.graph)?;
            let p = merged(&cfg, params)?;
            let cert: MineCertificate = match (cert, caterpillar) {
                (Some(path), None) => read_json(path)?,
                (None, Some(x)) => caterpillar_certificate(*x),
                _ => return Err(usage("give exactly one of --cert and --caterpillar")),
            };
            let mb = mineable_to_barrier(&g, pair.a, pair.b, &cert, p.t, p.phi).map_err(|e| barrier_failure(&e))?;
            let summary = format!(
                "barrier |X|={} |Y|={} |Z|={} |C|={} with |M|={}",
                mb.barrier.x.len(),
                mb.barrier.y.len(),
                mb.barrier.z.len(),
                mb.barrier.c.len(),
                mb.m.len()
            );
            Ok(Outcome::ok(Artifact::Barrier { a: pair.a, b: pair.b, barrier: mb.barrier, m: mb.m }, summary))
        }
        Command::Separate { pair, forest, trace, params } => {
            let g = read_graph(&pair.graph)?;
            let f = read_forest(&g, forest)?;
            let mut eng = SlimEngine::new(slim_params(&merged(&cfg, params)?), contraction_provider);
            let result = eng.separate_slim_pair(&g, &f, pair.a, pair.b);
            if let Some(tp) = trace {
                write_atomic(tp, &eng.trace_jsonl()).map_err(usage)?;
            }
            let separator = result?;
            let summary = format!("separator {:?}", separator.to_vec());
            Ok(Outcome::ok(Artifact::Separator { a: pair.a, b: pair.b, separator }, summary))
        }
        Command::BalancedSep { graph, weights, forest, params } => {
            let g = read_graph(graph)?;
            let f = read_forest(&g, forest)?;
            let w = match weights {
                Some(p) => WeightFunction::new(read_json(p)?).map_err(usage)?,
                None => WeightFunction::uniform(g.n()),
            };
            let mut eng = SlimEngine::new(slim_params(&merged(&cfg, params)?), contraction_provider);
            let out = eng.balanced_separator(&g, &w, &f)?;
            let summary = format!("balanced separator {:?}", out.separator.to_vec());
            Ok(Outcome::ok(
                Artifact::BalancedSeparator { weights: w.as_slice().to_vec(), c: 0.5, separator: out.separator },
                summary,
            ))
        }
        Command::Decompose { graph, pace, params } => {
            let g = read_graph(graph)?;
            let p = merged(&cfg, params)?;
            match treewidth_bound_pipeline(&g, &p, budget) {
                Ok(r) => {
                    if let Some(pp) = pace {
                        write_atomic(pp, &r.td.to_pace(g.n())).map_err(usage)?;
                    }
                    let summary = format!(
                        "width {} (dimension {}, log2 bound {:.1}, membership {})",
                        r.reported_width, r.dimension, r.log2_theoretical_bound, r.membership
                    );
                    Ok(Outcome::ok(
                        Artifact::Decomposition {
                            width: r.reported_width,
                            dimension: r.dimension,
                            log2_theoretical_bound: r.log2_theoretical_bound,
                            membership: r.membership,
                            td: r.td,
                            trace: r.trace,
                        },
                        summary,
                    ))
                }
                Err(PipelineError::Refuted(model)) => {
                    Ok(Outcome::refuted(Artifact::MinorModel { model }, "input is not in the class".into()))
                }
                Err(e) => Err(usage(e)),
            }
        }
        Command::TwExact { graph, cap, pace } => {
            let g = read_graph(graph)?;
            let ex = exact_treewidth(&g, *cap).map_err(|e| Failure::Budget(e.to_string()))?;
            if let Some(pp) = pace {
                write_atomic(pp, &ex.td.to_pace(g.n())).map_err(usage)?;
            }
            Ok(Outcome::ok(Artifact::Treewidth { width: ex.width, td: ex.td }, ex.width.to_string()))
        }
        Command::Bound { n, max_i, params } => {
            let p = merged(&cfg, params)?;
            let art = bound_artifact(&p, *n, *max_i).map_err(usage)?;
            let Artifact::Bound { closed_form, log2_r, .. } = &art else { unreachable!() };
            let pass = closed_form.iter().all(|c| c.pass);
            let summary = format!("log2 r_i = {:?}; closed form holds: {pass}", log2_r);
            Ok(if pass { Outcome::ok(art, summary) } else { Outcome::refuted(art, summary) })
        }
        Command::Verify { graph, artifact } => {
            let text = fs::read_to_string(artifact).map_err(|e| usage(format!("{}: {e}", artifact.display())))?;
            let g = graph.as_deref().map(read_graph).transpose()?;
            match verify_text(g.as_ref(), &text, budget)? {
                Ok(msg) => Ok(Outcome { artifact: None, raw: None, summary: format!("ok: {msg}"), code: EXIT_OK }),
                Err(msg) => Err(Failure::Refuted(format!("artifact fails: {msg}"))),
            }
        }
    }
}

pub fn bound_artifact(p: &BoundParams, n: f64, max_i: usize) -> Result<Artifact, crate::bounds::BoundError> {
    let seq = bound_r_sequence(n, p)?;
    let closed_form = (0..=max_i).map(|i| closed_form_check(n, i, p)).collect::<Result<Vec<_>, _>>()?;
    Ok(Artifact::Bound {
        params: p.clone(),
        n,
        psi: psi(p.t, p.q, p.phi),
        r: p.r(),
        r0: p.r0(),
        c0: p.c0(),
        log2_r: seq.log2,
        closed_form,
    })
}

/// Outer `Err` for unusable input, inner `Err` when the artifact is wrong.
pub fn verify_text(g: Option<&Graph>, text: &str, budget: u64) -> Result<Result<String, String>, Failure> {
    if text.trim_start().starts_with('s') || text.trim_start().starts_with('c') {
        let g = g.ok_or_else(|| usage("verifying a decomposition needs --graph"))?;
        let (td, n) = TreeDecomposition::from_pace(text).map_err(usage)?;
        if n != g.n() {
            return Ok(Err(format!("decomposition is for {n} vertices, graph has {}", g.n())));
        }
        let rep = verify_td(g, &td);
        return Ok(if rep.valid {
            Ok(format!("tree decomposition of width {}", rep.width))
        } else {
            Err(format!("{:?}", rep.violation))
        });
    }
    let art: Artifact = serde_json::from_str(text).map_err(|e| usage(format!("artifact: {e}")))?;
    if let Artifact::Bound { params, n, closed_form, .. } = &art {
        let max_i = closed_form.len().saturating_sub(1);
        let again = bound_artifact(params, *n, max_i).map_err(usage)?;
        return Ok(if again == art {
            Ok("bound arithmetic reproduces".into())
        } else {
            Err("bound values differ".into())
        });
    }
    let g = g.ok_or_else(|| usage("this artifact needs --graph"))?;
    verify_artifact(g, &art, budget)
}

pub fn verify_artifact(g: &Graph, art: &Artifact, budget: u64) -> Result<Result<String, String>, Failure> {
    let check = |ok: bool, yes: &str, no: String| if ok { Ok(yes.to_string()) } else { Err(no) };
    Ok(match art {
        Artifact::MinorModel { model } => {
            let rep = verify_model(g, model).map_err(usage)?;
            check(rep.valid, "minor model verifies", format!("{:?}", rep.violations))
        }
        Artifact::MinorFree { t, pattern, pattern_n } => {
            let found = match (t, pattern, pattern_n) {
                (Some(t), None, None) => match class_membership(g, *t, budget).map_err(usage)? {
                    Membership::InClass => false,
                    Membership::NotInClass(_) => true,
                    Membership::Unknown => return Err(Failure::Budget("membership undecided within budget".into())),
                },
                (None, Some(edges), Some(hn)) => {
                    let h = Graph::from_edges(*hn, edges).map_err(usage)?;
                    match find_induced_minor(g, &h, budget).map_err(usage)? {
                        MinorSearch::Found(_) => true,
                        MinorSearch::NotFound => false,
                        MinorSearch::BudgetExhausted => {
                            return Err(Failure::Budget("minor search budget exhausted".into()))
                        }
                    }
                }
                _ => return Err(usage("minor_free needs t or a pattern")),
            };
            check(!found, "no induced minor, confirmed", "an induced minor exists".into())
        }
        Artifact::Clique { t, clique, below } => {
            g.check_set(clique).map_err(usage)?;
            let best = max_clique(g).len();
            check(
                g.is_clique(clique) && clique.len() == best && *below == (best < *t),
                "maximum clique confirmed",
                format!("claimed clique of size {} but the maximum is {best}", clique.len()),
            )
        }
        Artifact::PathFamily { s, family, slim } => {
            if let Err(e) = check_path_family(g, family) {
                return Ok(Err(e));
            }
            let really = is_slim_pair(g, family.a, family.b, *s).map_err(usage)?;
            check(
                really == *slim && (*slim || family.len() >= *s),
                "path family verifies",
                format!("slimness claim {slim} but recomputed {really}"),
            )
        }
        Artifact::SlimCheck { t, s, result } => {
            if let SlimCheck::Counterexample { stable_set, families } = result {
                let set: VertexSet = stable_set.clone().into();
                if set.len() != *t || !g.is_stable(&set) {
                    return Ok(Err("counterexample is not a stable set of size t".into()));
                }
                for fam in families {
                    if let Err(e) = check_path_family(g, fam) {
                        return Ok(Err(e));
                    }
                    if fam.len() < *s {
                        return Ok(Err(format!("pair ({}, {}) is not shown wide", fam.a, fam.b)));
                    }
                }
                if families.len() != t * (t - 1) / 2 {
                    return Ok(Err("one family per pair is required".into()));
                }
                Ok("counterexample verifies".into())
            } else {
                let again = check_tq_slim(g, *t, *s).map_err(usage)?;
                check(again == SlimCheck::Ok, "slimness confirmed", "a counterexample exists".into())
            }
        }
        Artifact::Basket { a, b, q, td, nodes } => {
            let rep = verify_td(g, td);
            if !rep.valid {
                return Ok(Err(format!("{:?}", rep.violation)));
            }
            if nodes.len() >= *q || nodes.iter().any(|&i| i >= td.len()) {
                return Ok(Err("too many or unknown nodes".into()));
            }
            let mut u = VertexSet::new();
            for &i in nodes {
                u.extend_from(&td.bags[i]);
            }
            u.remove(*a);
            u.remove(*b);
            check(
                is_separator(g, &u, *a, *b).map_err(usage)?,
                "basket meets every path",
                "a path avoids the basket".into(),
            )
        }
        Artifact::Mine { a, b, outcome } => match outcome {
            MineOutcome::Separator { d, .. } => {
                g.check_set(d).map_err(usage)?;
                check(is_separator(g, d, *a, *b).map_err(usage)?, "mined separator separates", "not a separator".into())
            }
            MineOutcome::Mineable { d, cert } => {
                let sub = delete_vertices(g, d).map_err(usage)?;
                let (Some(la), Some(lb)) = (sub.local(*a), sub.local(*b)) else {
                    return Ok(Err("an endpoint was deleted".into()));
                };
                let local = cert.map_sets(|s| sub.localize(s));
                let rep = verify_mineable(&sub.graph, la, lb, &local).map_err(|e| barrier_failure(&e))?;
                check(rep.valid, "certificate verifies in G \\ D", format!("{:?}", rep.violation))
            }
        },
        Artifact::Barrier { a, b, barrier, m } => {
            let sub = delete_vertices(g, m).map_err(usage)?;
            let (Some(la), Some(lb)) = (sub.local(*a), sub.local(*b)) else {
                return Ok(Err("an endpoint lies in M".into()));
            };
            let local = barrier.localize(&sub);
            let rep = verify_barrier(&sub.graph, &local).map_err(|e| barrier_failure(&e))?;
            if !rep.valid {
                return Ok(Err(format!("{:?}", rep.violation)));
            }
            check(
                barrier_separates(&sub.graph, &local, la, lb).map_err(|e| barrier_failure(&e))?,
                "barrier verifies and separates in G \\ M",
                "barrier does not separate".into(),
            )
        }
        Artifact::Separator { a, b, separator } => {
            g.check_set(separator).map_err(usage)?;
            check(is_separator(g, separator, *a, *b).map_err(usage)?, "separator verifies", "not a separator".into())
        }
        Artifact::BalancedSeparator { weights, c, separator } => {
            let w = WeightFunction::new(weights.clone()).map_err(usage)?;
            if w.len() != g.n() {
                return Ok(Err("weight vector length differs from n".into()));
            }
            g.check_set(separator).map_err(usage)?;
            check(is_balanced_separator(g, &w, separator, *c), "balanced separator verifies", "unbalanced".into())
        }
        Artifact::Decomposition { width, td, .. } => {
            let rep = verify_td(g, td);
            check(
                rep.valid && rep.width == *width,
                "decomposition verifies",
                format!("{:?}, width {}", rep.violation, rep.width),
            )
        }
        Artifact::Treewidth { width, td } => {
            let rep = verify_td(g, td);
            if !rep.valid || rep.width != *width {
                return Ok(Err(format!("{:?}, width {}", rep.violation, rep.width)));
            }
            match exact_treewidth(g, HARD_EXACT_CAP) {
                Ok(ex) => {
                    check(ex.width == *width, "treewidth confirmed exactly", format!("exact treewidth is {}", ex.width))
                }
                Err(_) => Ok("decomposition verifies (graph too large to recheck optimality)".into()),
            }
        }
        Artifact::Bound { .. } => unreachable!("handled without a graph"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors() {
        assert_eq!(run(["slimtw", "no-such-command"]), EXIT_USAGE);
        assert_eq!(run(["slimtw", "gen", "--kind", "random", "--n", "5", "--m", "3"]), EXIT_USAGE);
        assert_eq!(run(["slimtw", "--help"]), EXIT_OK);
    }

    #[test]
    fn flags_override_config() {
        let cfg = Config { params: BoundParams { t: 5, q: 4, ..Default::default() }, ..Default::default() };
        let p = merged(&cfg, &ParamArgs { q: Some(3), ..Default::default() }).unwrap();
        assert_eq!((p.t, p.q), (5, 3));
    }

    #[test]
    fn config_json_is_partial() {
        let c: Config = serde_json::from_str(r#"{"t": 4, "seed": 9}"#).unwrap();
        assert_eq!((c.params.t, c.params.q, c.seed), (4, 2, Some(9)));
    }
}
