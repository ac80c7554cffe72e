//! Exhaustive verification of the algebraic claims over graph corpora.
//!
//! Each check runs on one `(subject, graph)` pair, where the subject is a
//! monoid, a morphism, a diagram or a basis pair, and yields one record per
//! check id. A failing record carries the first counterexample found, phrased
//! so it can be replayed through the CLI.

mod checks;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monoid::MonoidId;
use crate::morphism::MorphismId;

pub use checks::{
    check_antipode, check_basis_change, check_bimonoid, check_commutativity, check_diagram, check_functors,
    check_morphism, check_stanley,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest corpus size accepted by [`run_suite`] by default.
pub const DEFAULT_CAP: usize = 5;

/// Seed used when sampling graphs unless overridden.
pub const DEFAULT_SEED: u64 = 0x5eed_2017;

/// Number of sampled graphs at the largest size for the expensive suites.
pub const DEFAULT_SAMPLE: usize = 24;

/// Number of extra random graphs, one vertex past the corpus, for the
/// orientation count check.
pub const STANLEY_EXTRA: usize = 100;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Monoid, morphism, diagram or basis pair under test.
    pub subject: String,
    pub graph: String,
    pub check: String,
    /// Informational records never affect the exit status.
    pub required: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CorpusInfo {
    pub n_max: usize,
    pub graphs: usize,
    /// Number of graphs of the largest size that were sampled rather than
    /// enumerated, if any.
    pub sampled: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub required_failed: usize,
}

/// Closed-form agreement with the oracle, aggregated over the corpus.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GateVerdict {
    pub monoid: String,
    pub status: String,
    pub agreeing_graphs: usize,
    pub disagreeing_graphs: usize,
    pub consistent: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub corpus: CorpusInfo,
    pub records: Vec<CheckRecord>,
    pub gates: Vec<GateVerdict>,
    pub totals: Totals,
    pub wall_time_ms: u64,
}

impl Report {
    /// True when every required check passed.
    pub fn ok(&self) -> bool {
        self.totals.required_failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// Plain-text summary without timing, so identical runs print
    /// identical text.
    pub fn to_text(&self, verbose: bool) -> String {
        use fmt::Write;
        let mut s = String::new();
        let sampled = self.corpus.sampled.map(|k| format!(", {k} sampled with seed {}", self.corpus.seed)).unwrap_or_default();
        let _ = writeln!(
            s,
            "suite {}: {} graphs up to {} vertices{sampled}",
            self.suite, self.corpus.graphs, self.corpus.n_max
        );
        for r in &self.records {
            if !verbose && r.pass {
                continue;
            }
            let status = match (r.pass, r.required) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "info",
            };
            let _ = writeln!(s, "{status} {} {} [{}]", r.subject, r.check, r.graph);
            if let Some(c) = &r.counterexample {
                let _ = writeln!(s, "    inputs: {}\n    lhs: {}\n    rhs: {}", c.inputs, c.lhs, c.rhs);
            }
        }
        for gv in &self.gates {
            let _ = writeln!(
                s,
                "closed form {}: {} (agrees on {} graphs, disagrees on {}){}",
                gv.monoid,
                gv.status,
                gv.agreeing_graphs,
                gv.disagreeing_graphs,
                if gv.consistent { "" } else { " INCONSISTENT" }
            );
        }
        let t = &self.totals;
        let _ = writeln!(
            s,
            "{} checks, {} passed, {} failed ({} required)",
            t.checks, t.passed, t.failed, t.required_failed
        );
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Suite {
    Bimonoid,
    Antipode,
    Commutativity,
    Morphisms,
    Functors,
    BasisChange,
    Stanley,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Bimonoid,
        Suite::Antipode,
        Suite::Commutativity,
        Suite::Morphisms,
        Suite::Functors,
        Suite::BasisChange,
        Suite::Stanley,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bimonoid => "bimonoid",
            Suite::Antipode => "antipode",
            Suite::Commutativity => "commutativity",
            Suite::Morphisms => "morphisms",
            Suite::Functors => "functors",
            Suite::BasisChange => "basis-change",
            Suite::Stanley => "stanley",
            Suite::All => "all",
        }
    }

    /// Suites whose cost grows fast enough to sample the largest size.
    fn samples(self) -> bool {
        !matches!(self, Suite::Functors | Suite::Stanley)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Graphs sampled at `n_max` once `n_max` exceeds 4.
    pub sample: usize,
    pub cap: usize,
    /// Restricts the morphism suite; `None` runs every morphism and diagram.
    pub morphisms: Option<Vec<MorphismId>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            sample: DEFAULT_SAMPLE,
            cap: DEFAULT_CAP,
            morphisms: None,
        }
    }
}

/// Every labeled simple graph on `v1..vn` for `n ≤ n_max`, by size and then
/// by edge bitmask over the pairs in lexicographic order.
pub fn corpus(n_max: usize) -> Vec<Graph> {
    (0..=n_max).flat_map(graphs_on).collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::from_indices(Graph::numbered_labels(n), edges)
}

/// All `2^{C(n,2)}` labeled graphs on `v1..vn`.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    let m = pairs(n).len();
    assert!(m < 32, "too many graphs to enumerate");
    (0..1u64 << m).map(|mask| graph_from_mask(n, mask)).collect()
}

/// `count` graphs on `v1..vn`, each edge present independently with
/// probability 1/2, drawn from a seeded ChaCha stream.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = pairs(n).len();
    (0..count)
        .map(|_| {
            let mask = if m == 0 { 0 } else { rng.gen::<u64>() & ((1u64 << m) - 1) };
            graph_from_mask(n, mask)
        })
        .collect()
}

/// The graphs a suite runs on, and how many were sampled.
fn suite_corpus(suite: Suite, n_max: usize, opts: &SuiteOptions) -> (Vec<Graph>, Option<usize>) {
    if n_max <= 4 || !suite.samples() {
        return (corpus(n_max), None);
    }
    let mut graphs = corpus(4);
    for n in 5..=n_max {
        graphs.extend(random_graphs(n, opts.sample, opts.seed.wrapping_add(n as u64)));
    }
    (graphs, Some(opts.sample))
}

type Task<'a> = Box<dyn Fn() -> Vec<CheckRecord> + Send + Sync + 'a>;

fn tasks_for<'a>(suite: Suite, graphs: &'a [Graph], monoids: &'a [MonoidId], opts: &'a SuiteOptions) -> Vec<Task<'a>> {
    let mut tasks: Vec<Task<'a>> = Vec::new();
    let per_monoid = |tasks: &mut Vec<Task<'a>>, f: fn(MonoidId, &Graph) -> Vec<CheckRecord>| {
        for &m in monoids {
            for g in graphs {
                tasks.push(Box::new(move || f(m, g)));
            }
        }
    };
    match suite {
        Suite::Bimonoid => per_monoid(&mut tasks, check_bimonoid),
        Suite::Antipode => per_monoid(&mut tasks, check_antipode),
        Suite::Commutativity => per_monoid(&mut tasks, check_commutativity),
        Suite::Morphisms => {
            let selected: Vec<MorphismId> = match &opts.morphisms {
                Some(list) => list.clone(),
                None => MorphismId::ALL
                    .into_iter()
                    .filter(|f| monoids.contains(&f.domain()) || monoids.contains(&f.codomain()))
                    .collect(),
            };
            for f in selected {
                for g in graphs {
                    tasks.push(Box::new(move || check_morphism(f, g)));
                }
            }
            if opts.morphisms.is_none() {
                for d in crate::morphism::diagrams() {
                    if !monoids.contains(&d.domain()) {
                        continue;
                    }
                    for g in graphs {
                        let d = d.clone();
                        tasks.push(Box::new(move || check_diagram(&d, g)));
                    }
                }
            }
        }
        Suite::Functors => {
            for g in graphs {
                tasks.push(Box::new(move || check_functors(g, monoids)));
            }
        }
        Suite::BasisChange => {
            for pair in checks::BASIS_PAIRS {
                if !monoids.contains(&pair.0) && !monoids.contains(&pair.1) {
                    continue;
                }
                for g in graphs {
                    tasks.push(Box::new(move || check_basis_change(pair, g)));
                }
            }
        }
        Suite::Stanley => {
            for g in graphs {
                tasks.push(Box::new(move || check_stanley(g)));
            }
        }
        Suite::All => unreachable!(),
    }
    tasks
}

fn graph_order(g: &str) -> (usize, &str) {
    let n = g.split('|').next().map_or(0, |v| v.split(',').filter(|s| !s.is_empty()).count());
    (n, g)
}

fn gate_verdicts(records: &[CheckRecord]) -> Vec<GateVerdict> {
    use crate::antipode::{closed_form_status, is_gated, ClosedFormStatus};
    let mut out = Vec::new();
    for m in MonoidId::ALL.into_iter().filter(|&m| is_gated(m)) {
        let rel: Vec<_> = records
            .iter()
            .filter(|r| r.subject == m.name() && r.check == "closed_form")
            .collect();
        if rel.is_empty() {
            continue;
        }
        let agreeing = rel.iter().filter(|r| r.pass).count();
        let disagreeing = rel.len() - agreeing;
        let status = closed_form_status(m);
        let consistent = match status {
            ClosedFormStatus::Verified => disagreeing == 0,
            ClosedFormStatus::Demoted => disagreeing > 0,
        };
        out.push(GateVerdict {
            monoid: m.name().into(),
            status: match status {
                ClosedFormStatus::Verified => "verified".into(),
                ClosedFormStatus::Demoted => "demoted".into(),
            },
            agreeing_graphs: agreeing,
            disagreeing_graphs: disagreeing,
            consistent,
        });
    }
    out
}

/// Runs a suite over the corpus. Output order is deterministic regardless
/// of scheduling.
pub fn run_suite(suite: Suite, n_max: usize, monoids: &[MonoidId], opts: &SuiteOptions) -> Result<Report> {
    if n_max > opts.cap {
        return Err(Error::Unsupported(format!(
            "corpus size {n_max} exceeds the cap of {} vertices",
            opts.cap
        )));
    }
    let start = Instant::now();
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::ALL.into_iter().filter(|&s| s != Suite::All).collect()
    } else {
        vec![suite]
    };
    let mut records = Vec::new();
    let mut graph_count = 0;
    let mut sampled = None;
    for s in suites {
        let (graphs, k) = suite_corpus(s, n_max, opts);
        graph_count = graph_count.max(graphs.len());
        sampled = sampled.or(k);
        let tasks = tasks_for(s, &graphs, monoids, opts);
        let mut recs: Vec<CheckRecord> = tasks.par_iter().flat_map_iter(|t| t()).collect();
        if s == Suite::Stanley {
            let extra = random_graphs(n_max + 1, STANLEY_EXTRA, opts.seed);
            recs.extend(extra.par_iter().flat_map_iter(check_stanley).collect::<Vec<_>>());
            graph_count += STANLEY_EXTRA;
        }
        records.extend(recs);
    }
    records.sort_by(|a, b| {
        (&a.subject, graph_order(&a.graph), &a.check).cmp(&(&b.subject, graph_order(&b.graph), &b.check))
    });
    records.dedup();
    let gates = gate_verdicts(&records);
    let failed = records.iter().filter(|r| !r.pass).count();
    let required_failed = records.iter().filter(|r| !r.pass && r.required).count()
        + gates.iter().filter(|g| !g.consistent).count();
    let totals = Totals {
        checks: records.len(),
        passed: records.len() - failed,
        failed,
        required_failed,
    };
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        suite: suite.name().into(),
        corpus: CorpusInfo {
            n_max,
            graphs: graph_count,
            sampled,
            seed: opts.seed,
        },
        records,
        gates,
        totals,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_counts() {
        assert_eq!(corpus(2).len(), 4);
        assert_eq!(corpus(3).len(), 12);
        assert_eq!(corpus(4).len(), 76);
        assert_eq!(corpus(5).len(), 1100);
        assert_eq!(corpus(0), vec![Graph::empty()]);
        let g = &corpus(2)[3];
        assert_eq!(g.compact(), "v1,v2|v1-v2");
    }

    #[test]
    fn sampling_is_seeded() {
        assert_eq!(random_graphs(6, 5, 7), random_graphs(6, 5, 7));
        assert_ne!(random_graphs(6, 5, 7), random_graphs(6, 5, 8));
    }

    #[test]
    fn cap_is_enforced() {
        let err = run_suite(Suite::Stanley, 6, &MonoidId::ALL, &SuiteOptions::default());
        assert!(err.is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = SuiteOptions::default();
        let a = run_suite(Suite::Bimonoid, 2, &MonoidId::ALL, &opts).unwrap();
        let b = run_suite(Suite::Bimonoid, 2, &MonoidId::ALL, &opts).unwrap();
        assert_eq!(a.records, b.records);
        assert_eq!(a.to_text(true), b.to_text(true));
        assert!(a.ok());
    }

    #[test]
    fn json_round_trip() {
        let r = run_suite(Suite::Antipode, 2, &[MonoidId::L, MonoidId::Sigma], &SuiteOptions::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.schema_version, SCHEMA_VERSION);
    }
}
