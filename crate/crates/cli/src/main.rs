//! Command-line front end: JSON in, JSON (or DOT) out.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::SmallRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use elimtree::constructions::{
    bit_reversal, build_gk, build_tk, build_tk_prime, centroid_tree, log_height_bound, transform,
    transform_length_bound,
};
use elimtree::projection::{project_sequence, project_tree};
use elimtree::rotation::{apply_sequence, rotate};
use elimtree::rotation_graph::{
    build_rotation_graph, count_search_trees, distance_report, enumerate_search_trees, DotLabels,
    Limits,
};
use elimtree::search_tree::{to_ranking, to_tubing, validate};
use elimtree::verify::run_all;
use elimtree::{Graph, RotationSequence, SearchTree, VertexSet};

#[derive(Parser)]
#[command(
    name = "elimtree",
    version,
    about = "Search trees on graphs and their rotations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Search budget shared by the exhaustive commands.
#[derive(Args)]
struct LimitArgs {
    /// Give up after visiting this many search trees.
    #[arg(long, env = "EF_MAX_NODES", default_value_t = 10_000_000)]
    max_nodes: u128,
    /// Give up after this many seconds.
    #[arg(long)]
    max_seconds: Option<f64>,
}

impl LimitArgs {
    fn limits(&self) -> anyhow::Result<Limits> {
        let mut limits = Limits::with_max_nodes(self.max_nodes);
        if let Some(secs) = self.max_seconds {
            limits.max_duration =
                Some(Duration::try_from_secs_f64(secs).context("--max-seconds must be >= 0")?);
        }
        Ok(limits)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Gk,
    Tk,
    TkPrime,
    Sigma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Labels {
    Index,
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Emit G_k, T_k, T'_k or the bit-reversal permutation.
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        what: Construction,
    },
    /// Check a search tree against a graph and report its tubing and ranking.
    Validate {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        tree: String,
    },
    /// Rotate the edge between parent U and child V.
    Rotate {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        tree: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Apply a rotation sequence.
    Apply {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        tree: String,
        #[arg(long)]
        seq: String,
    },
    /// Project a search tree or a rotation sequence onto a connected subset.
    Project {
        #[arg(long)]
        graph: String,
        #[arg(long, required_unless_present = "seq", conflicts_with = "seq")]
        tree: Option<String>,
        #[arg(long)]
        seq: Option<String>,
        /// JSON array of vertices.
        #[arg(long)]
        subset: String,
        /// Number the subset 0.. in increasing order instead of keeping ids.
        #[arg(long)]
        relabel: bool,
    },
    /// List every search tree of a graph, or count them.
    Enumerate {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Exact rotation distance between two search trees.
    Distance {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Diameter of the rotation graph, or the whole graph in DOT.
    Diameter {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "index")]
        labels: Labels,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Rotation sequence between two search trees of a tree graph, through
    /// its centroid tree.
    Transform {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Run the built-in property checks.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        quick: bool,
    },
}

/// Reads a JSON argument: inline if it starts with `{` or `[`, standard
/// input for `-`, a file path otherwise.
fn load(arg: &str) -> anyhow::Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        return Ok(text);
    }
    fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

fn load_graph(arg: &str) -> anyhow::Result<Graph> {
    Graph::from_json(&load(arg)?).with_context(|| format!("parsing graph {arg}"))
}

fn load_tree(arg: &str) -> anyhow::Result<SearchTree> {
    SearchTree::from_json(&load(arg)?).with_context(|| format!("parsing search tree {arg}"))
}

fn load_seq(arg: &str) -> anyhow::Result<RotationSequence> {
    RotationSequence::from_json(&load(arg)?)
        .with_context(|| format!("parsing rotation sequence {arg}"))
}

fn load_subset(arg: &str) -> anyhow::Result<VertexSet> {
    serde_json::from_str(&load(arg)?).with_context(|| format!("parsing vertex set {arg}"))
}

fn require_valid(g: &Graph, t: &SearchTree, what: &str) -> anyhow::Result<()> {
    if !validate(g, t)? {
        bail!("{what} is not a search tree of the graph");
    }
    Ok(())
}

enum Output {
    Json(Value),
    Text(String),
}

fn run(command: Command) -> anyhow::Result<Output> {
    let value = match command {
        Command::Construct { k, what } => match what {
            Construction::Sigma => json!(bit_reversal(k)?),
            Construction::Gk => serde_json::to_value(build_gk(k)?)?,
            Construction::Tk => tree_value(&build_tk(&build_gk(k)?)),
            Construction::TkPrime => tree_value(&build_tk_prime(&build_gk(k)?)),
        },
        Command::Validate { graph, tree } => {
            let g = load_graph(&graph)?;
            let t = load_tree(&tree)?;
            if validate(&g, &t)? {
                json!({
                    "valid": true,
                    "height": t.height(),
                    "tubing": to_tubing(&g, &t)?,
                    "ranking": to_ranking(&g, &t)?,
                })
            } else {
                json!({ "valid": false })
            }
        }
        Command::Rotate { graph, tree, u, v } => {
            let g = load_graph(&graph)?;
            let t = load_tree(&tree)?;
            require_valid(&g, &t, "--tree")?;
            tree_value(&rotate(&g, &t, u, v)?)
        }
        Command::Apply { graph, tree, seq } => {
            let g = load_graph(&graph)?;
            let t = load_tree(&tree)?;
            require_valid(&g, &t, "--tree")?;
            tree_value(&apply_sequence(&g, &t, &load_seq(&seq)?)?)
        }
        Command::Project {
            graph,
            tree,
            seq,
            subset,
            relabel,
        } => {
            let g = load_graph(&graph)?;
            let s = load_subset(&subset)?;
            match (tree, seq) {
                (Some(tree), _) => {
                    let t = load_tree(&tree)?;
                    let p = project_tree(&g, &t, &s)?;
                    if relabel {
                        json!({ "tree": tree_value(&p.tree), "labels": p.subgraph.labels() })
                    } else {
                        p.host_json()
                    }
                }
                (None, Some(seq)) => {
                    if s.is_empty() {
                        return Err(elimtree::Error::EmptySet.into());
                    }
                    let sub = g.induced(&s)?;
                    if !sub.graph().is_graph_connected() {
                        return Err(elimtree::Error::DisconnectedSubset.into());
                    }
                    let projected = project_sequence(&load_seq(&seq)?, &s);
                    if relabel {
                        let local: RotationSequence = projected
                            .iter()
                            .map(|r| {
                                let map = |v| sub.to_local(v).expect("filtered to the subset");
                                elimtree::Rotation::new(map(r.parent), map(r.child))
                            })
                            .collect();
                        json!({ "sequence": local, "labels": sub.labels() })
                    } else {
                        json!(projected)
                    }
                }
                (None, None) => unreachable!("clap requires --tree or --seq"),
            }
        }
        Command::Enumerate {
            graph,
            count,
            limits,
        } => {
            let g = load_graph(&graph)?;
            let limits = limits.limits()?;
            if count {
                // Counts can exceed 64 bits; emit them as strings past that.
                let c = count_search_trees(&g, &limits)?;
                match u64::try_from(c) {
                    Ok(small) => json!({ "count": small }),
                    Err(_) => json!({ "count": c.to_string() }),
                }
            } else {
                let trees = enumerate_search_trees(&g, &limits)?;
                Value::Array(trees.iter().map(tree_value).collect())
            }
        }
        Command::Distance {
            graph,
            from,
            to,
            limits,
        } => {
            let g = load_graph(&graph)?;
            let (t1, t2) = (load_tree(&from)?, load_tree(&to)?);
            require_valid(&g, &t1, "--from")?;
            require_valid(&g, &t2, "--to")?;
            let report = distance_report(&g, &t1, &t2, &limits.limits()?)?;
            json!({ "distance": report.distance, "explored": report.explored.to_string() })
        }
        Command::Diameter {
            graph,
            format,
            labels,
            limits,
        } => {
            let g = load_graph(&graph)?;
            let limits = limits.limits()?;
            let rg = build_rotation_graph(&g, &limits)?;
            match format {
                Format::Dot => {
                    let labels = match labels {
                        Labels::Index => DotLabels::Index,
                        Labels::Tree => DotLabels::Tree,
                    };
                    return Ok(Output::Text(rg.to_dot(labels)));
                }
                Format::Json => json!({
                    "nodes": rg.node_count(),
                    "edges": rg.edges().len(),
                    "diameter": rg.diameter_until(limits.deadline())?,
                }),
            }
        }
        Command::Transform { graph, from, to } => {
            let g = load_graph(&graph)?;
            let (t1, t2) = (load_tree(&from)?, load_tree(&to)?);
            require_valid(&g, &t1, "--from")?;
            require_valid(&g, &t2, "--to")?;
            let seq = transform(&g, &t1, &t2)?;
            json!({
                "sequence": seq,
                "length": seq.len(),
                "bound": transform_length_bound(g.n()),
                "centroid_tree": tree_value(&centroid_tree(&g)?),
                "centroid_height_bound": log_height_bound(g.n()),
            })
        }
        Command::Check { seed, quick } => {
            let mut rng = SmallRng::seed_from_u64(seed);
            let reports = run_all(&mut rng, quick)?;
            let passed = reports.iter().all(|r| r.passed());
            for r in &reports {
                eprintln!(
                    "{} {}: {} cases, {} violations",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.cases,
                    r.violations
                );
            }
            let value = json!({ "passed": passed, "reports": reports });
            if !passed {
                print_json(&value)?;
                bail!("some checks failed");
            }
            value
        }
    };
    Ok(Output::Json(value))
}

fn tree_value(t: &SearchTree) -> Value {
    serde_json::to_value(t).expect("search tree serialization is infallible")
}

fn print_json(value: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|output| {
        match output {
            Output::Json(value) => print_json(&value)?,
            Output::Text(text) => io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
