//! `grhopf`: products, coproducts, antipodes and verification runs from the
//! command line.
//!
//! Exit status is 0 on success, 1 when a verification run or an antipode
//! agreement check fails, and 2 on usage or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use grhopf::antipode::{antipode, closed_form_status, ClosedFormStatus};
use grhopf::hopf::{basis, basis_change, coproduct_component, product};
use grhopf::verify::{corpus, graphs_on, run_suite, SuiteOptions, DEFAULT_CAP, DEFAULT_SAMPLE, DEFAULT_SEED};
use grhopf::{
    BasisKey, Element, Graph, KeyJson, Method, MonoidId, MorphismId, OrderedBipartition, VertexSet,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "grhopf", version, about = "Exact (q,t)-Hopf monoids on graphical species")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A graph is either a file in the `v`/`e` line format or an inline compact
/// form such as `a,b,c|a-b,b-c`.
#[derive(clap::Args, Debug)]
struct GraphArg {
    #[arg(long, short)]
    graph: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lists the basis of a monoid on a graph.
    Enumerate {
        #[arg(long, short)]
        monoid: String,
        #[command(flatten)]
        graph: GraphArg,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The product of two basis keys along a split `S|T`.
    Product {
        #[arg(long, short)]
        monoid: String,
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        split: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// One component of the coproduct of a basis key.
    Coproduct {
        #[arg(long, short)]
        monoid: String,
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        split: String,
        #[arg(long, short)]
        key: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The antipode of a basis key.
    Antipode {
        #[arg(long, short)]
        monoid: String,
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, short)]
        key: String,
        /// takeuchi, milnor-moore-left, milnor-moore-right, closed or all.
        #[arg(long, default_value = "takeuchi")]
        method: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Rewrites a basis key in the other basis of the same species.
    BasisChange {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, short)]
        key: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Applies a named morphism to a basis key.
    Morphism {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, short)]
        key: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Runs a verification suite over the small-graph corpus.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        /// A monoid id, a comma-separated list, or `all`.
        #[arg(long, default_value = "all")]
        monoid: String,
        /// Restricts the morphism suite to these comma-separated names.
        #[arg(long)]
        morphism: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLE)]
        sample: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, env = "GRHOPF_JOBS")]
        jobs: Option<usize>,
        /// Also list passing checks.
        #[arg(long, short)]
        verbose: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Graph counts and basis sizes over the corpus.
    CorpusStats {
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<grhopf::Error> for Failure {
    fn from(e: grhopf::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(arg: &GraphArg) -> Result<Arc<Graph>, Failure> {
    let path = Path::new(&arg.graph);
    let g = if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        Graph::parse(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))?
    } else if arg.graph.contains('|') {
        Graph::parse_compact(&arg.graph).map_err(|e| Failure::Usage(format!("--graph:{e}")))?
    } else {
        return Err(Failure::Usage(format!("{}: no such graph file", arg.graph)));
    };
    Ok(Arc::new(g))
}

fn parse_monoid(s: &str) -> Result<MonoidId, Failure> {
    s.parse().map_err(|e: grhopf::Error| {
        let names: Vec<_> = MonoidId::ALL.iter().map(|m| m.name()).collect();
        Failure::Usage(format!("{e} (expected one of {})", names.join(", ")))
    })
}

fn parse_key(m: MonoidId, g: &Graph, flag: &str, lit: &str) -> Result<BasisKey, Failure> {
    BasisKey::parse(m.key_kind(), g, lit).map_err(|e| Failure::Usage(format!("{flag}:{e}")))
}

fn parse_split(g: &Graph, s: &str) -> Result<OrderedBipartition, Failure> {
    let (a, b) = s
        .split_once('|')
        .ok_or_else(|| Failure::Usage(format!("--split: expected `S|T`, found `{s}`")))?;
    let side = |part: &str| -> Result<VertexSet, Failure> {
        let labels: Vec<&str> = part.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
        Ok(g.set_of(&labels)?)
    };
    Ok(OrderedBipartition::new(side(a)?, side(b)?, g.vertices())?)
}

fn emit(json_path: Option<&Path>, value: serde_json::Value) -> CliResult {
    if let Some(p) = json_path {
        let text = serde_json::to_string_pretty(&value).expect("json values serialize");
        fs::write(p, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Enumerate { monoid, graph, count_only, json } => {
            let m = parse_monoid(&monoid)?;
            let g = load_graph(&graph)?;
            let keys = basis(m, &g);
            println!("{} basis keys of {m} on {}", keys.len(), g.compact());
            if !count_only {
                for k in &keys {
                    println!("  [{}]", k.to_literal(&g));
                }
            }
            let listing: Vec<KeyJson> = keys.iter().map(|k| KeyJson::new(k, &g)).collect();
            emit(
                json.as_deref(),
                json!({"monoid": m.name(), "graph": g.compact(), "count": keys.len(), "keys": listing}),
            )
        }
        Command::Product { monoid, graph, split, left, right, json } => {
            let m = parse_monoid(&monoid)?;
            let g = load_graph(&graph)?;
            let sp = parse_split(&g, &split)?;
            let x = parse_key(m, &g, "--left", &left)?;
            let y = parse_key(m, &g, "--right", &right)?;
            let z = product(m, &g, sp, &x, &y)?;
            println!("{z}");
            emit(json.as_deref(), serde_json::to_value(z.to_json()).expect("element serializes"))
        }
        Command::Coproduct { monoid, graph, split, key, json } => {
            let m = parse_monoid(&monoid)?;
            let g = load_graph(&graph)?;
            let sp = parse_split(&g, &split)?;
            let k = parse_key(m, &g, "--key", &key)?;
            let t = coproduct_component(m, &g, sp, &k)?;
            println!("{t}");
            emit(json.as_deref(), t.to_json())
        }
        Command::Antipode { monoid, graph, key, method, json } => {
            let m = parse_monoid(&monoid)?;
            let g = load_graph(&graph)?;
            let k = parse_key(m, &g, "--key", &key)?;
            let x = Element::basis_element(m, g, k);
            if method == "all" {
                let mut results = Vec::new();
                for meth in Method::ALL {
                    let s = antipode(&x, meth)?;
                    println!("{meth}: {s}");
                    results.push((meth, s));
                }
                if closed_form_status(m) == ClosedFormStatus::Demoted {
                    println!("note: the {m} closed form is demoted; `closed` falls back to takeuchi");
                }
                let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
                println!("{}", if agree { "AGREE" } else { "DISAGREE" });
                let by_method: serde_json::Map<String, serde_json::Value> = results
                    .iter()
                    .map(|(meth, s)| (meth.name().to_string(), serde_json::to_value(s.to_json()).unwrap()))
                    .collect();
                emit(json.as_deref(), json!({"results": by_method, "agree": agree}))?;
                if agree {
                    Ok(())
                } else {
                    Err(Failure::Check)
                }
            } else {
                let meth: Method = method.parse()?;
                let s = antipode(&x, meth)?;
                println!("{s}");
                emit(json.as_deref(), serde_json::to_value(s.to_json()).expect("element serializes"))
            }
        }
        Command::BasisChange { from, to, graph, key, json } => {
            let (f, t) = (parse_monoid(&from)?, parse_monoid(&to)?);
            let g = load_graph(&graph)?;
            let k = parse_key(f, &g, "--key", &key)?;
            let y = basis_change(f, t, &Element::basis_element(f, g, k))?;
            println!("{y}");
            emit(json.as_deref(), serde_json::to_value(y.to_json()).expect("element serializes"))
        }
        Command::Morphism { name, graph, key, json } => {
            let f: MorphismId = name.parse()?;
            let g = load_graph(&graph)?;
            let k = parse_key(f.domain(), &g, "--key", &key)?;
            let y = f.apply(&Element::basis_element(f.domain(), g, k))?;
            println!("{y}");
            emit(json.as_deref(), serde_json::to_value(y.to_json()).expect("element serializes"))
        }
        Command::Verify { suite, nmax, monoid, morphism, seed, sample, cap, jobs, verbose, json } => {
            let suite = suite.parse()?;
            let monoids = if monoid == "all" {
                MonoidId::ALL.to_vec()
            } else {
                monoid.split(',').map(|s| parse_monoid(s.trim())).collect::<Result<_, _>>()?
            };
            let morphisms = match morphism {
                None => None,
                Some(list) => Some(
                    list.split(',')
                        .map(|s| s.trim().parse::<MorphismId>())
                        .collect::<grhopf::Result<Vec<_>>>()?,
                ),
            };
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build_global()
                    .map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let opts = SuiteOptions { seed, sample, cap, morphisms };
            let report = run_suite(suite, nmax, &monoids, &opts)?;
            print!("{}", report.to_text(verbose));
            emit(json.as_deref(), serde_json::to_value(&report).expect("report serializes"))?;
            if report.ok() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::CorpusStats { nmax, json } => {
            if nmax > DEFAULT_CAP {
                return Err(Failure::Usage(format!("--nmax {nmax} exceeds the cap of {DEFAULT_CAP}")));
            }
            let mut rows = Vec::new();
            for n in 0..=nmax {
                let graphs = graphs_on(n);
                let sizes: serde_json::Map<String, serde_json::Value> = MonoidId::ALL
                    .iter()
                    .map(|&m| {
                        let total: usize = graphs.iter().map(|g| basis(m, g).len()).sum();
                        (m.name().to_string(), total.into())
                    })
                    .collect();
                let line: Vec<String> = sizes.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!("n={n}: {} graphs; basis keys {}", graphs.len(), line.join(" "));
                rows.push(json!({"n": n, "graphs": graphs.len(), "basis_keys": sizes}));
            }
            println!("total: {} graphs", corpus(nmax).len());
            emit(json.as_deref(), json!({"rows": rows}))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn split_parsing() {
        let g = Graph::parse_compact("a,b,c|a-b").unwrap();
        let sp = parse_split(&g, "a,c|b").ok().unwrap();
        assert_eq!(sp.first.len(), 2);
        assert!(parse_split(&g, "a|b").is_err());
        assert!(parse_split(&g, "a,b,c").is_err());
    }
}
