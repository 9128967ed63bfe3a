use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::error::FamilyError;
use crate::family::{
    enumerate_dags, enumerate_digraphs, enumerate_ditrees, random_dag, random_digraph, random_ditree_with, random_tree,
    FamilySpec,
};
use crate::graph::Digraph;
use crate::record::{Claim, VerificationRecord};
use crate::solve::SolveConfig;

use super::checks::*;
use super::{CheckConfig, Instance};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("suite line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("worker pool: {0}")]
    Pool(String),
}

fn parse_err(line: usize, msg: impl Into<String>) -> SuiteError {
    SuiteError::Parse { line, msg: msg.into() }
}

/// Where a check line draws its instances from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    /// Named family members; a trailing `a..b` argument expands to a range.
    Family(Vec<FamilySpec>),
    EnumDitrees(usize),
    EnumDigraphs(usize),
    EnumDags(usize),
    RandomDitrees {
        n: RangeInclusive<usize>,
        count: usize,
        weights: [u32; 3],
        min_indeg: bool,
    },
    RandomDigraphs {
        n: RangeInclusive<usize>,
        count: usize,
        p: f64,
        min_indeg: bool,
    },
    /// Undirected trees, stored as their bidirected digraphs.
    RandomTrees { n: RangeInclusive<usize>, count: usize },
    RandomDags { n: RangeInclusive<usize>, count: usize, p: f64 },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a count"));
    match s.split_once("..") {
        Some((a, b)) => {
            let r = num(a)?..=num(b)?;
            if r.is_empty() {
                return Err(format!("empty range `{s}`"));
            }
            Ok(r)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

fn expand_family(spec: &str) -> Result<Vec<FamilySpec>, String> {
    if let Some((prefix, arg)) = spec.rsplit_once(':') {
        if arg.contains("..") {
            return parse_range(arg)?
                .map(|i| format!("{prefix}:{i}").parse().map_err(|e: FamilyError| e.to_string()))
                .collect();
        }
    }
    Ok(vec![spec.parse().map_err(|e: FamilyError| e.to_string())?])
}

#[derive(Default)]
struct RandomArgs {
    n: Option<RangeInclusive<usize>>,
    count: Option<usize>,
    p: Option<f64>,
    weights: Option<[u32; 3]>,
    min_indeg: bool,
}

fn parse_random_args(arg: &str) -> Result<RandomArgs, String> {
    let mut out = RandomArgs::default();
    for kv in arg.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = kv.split_once('=').ok_or_else(|| format!("expected key=value, got `{kv}`"))?;
        match k.trim() {
            "n" => out.n = Some(parse_range(v)?),
            "count" => out.count = Some(v.parse().map_err(|_| format!("bad count `{v}`"))?),
            "p" => {
                let p: f64 = v.parse().map_err(|_| format!("bad probability `{v}`"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(format!("probability `{v}` outside [0, 1]"));
                }
                out.p = Some(p);
            }
            "w" => {
                let parts: Vec<u32> = v
                    .split('/')
                    .map(|x| x.parse().map_err(|_| format!("bad weight `{x}`")))
                    .collect::<Result<_, _>>()?;
                out.weights = Some(parts.try_into().map_err(|_| "weights need three parts".to_string())?);
            }
            "min_indeg" => out.min_indeg = v.trim() == "1",
            other => return Err(format!("unknown key `{other}`")),
        }
    }
    Ok(out)
}

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = s.split_once(':').ok_or_else(|| format!("source `{s}` needs a `kind:` prefix"))?;
        let count = |arg: &str| arg.parse::<usize>().map_err(|_| format!("`{arg}` is not a count"));
        Ok(match kind {
            "family" => Source::Family(expand_family(arg)?),
            "enum-ditrees" => Source::EnumDitrees(count(arg)?),
            "enum-digraphs" => Source::EnumDigraphs(count(arg)?),
            "enum-dags" => Source::EnumDags(count(arg)?),
            "random-ditrees" | "random-digraphs" | "random-trees" | "random-dags" => {
                let a = parse_random_args(arg)?;
                let n = a.n.ok_or("missing n=")?;
                let count = a.count.ok_or("missing count=")?;
                match kind {
                    "random-ditrees" => Source::RandomDitrees {
                        n,
                        count,
                        weights: a.weights.unwrap_or([1, 1, 1]),
                        min_indeg: a.min_indeg,
                    },
                    "random-digraphs" => Source::RandomDigraphs {
                        n,
                        count,
                        p: a.p.ok_or("missing p=")?,
                        min_indeg: a.min_indeg,
                    },
                    "random-trees" => Source::RandomTrees { n, count },
                    _ => Source::RandomDags {
                        n,
                        count,
                        p: a.p.ok_or("missing p=")?,
                    },
                }
            }
            _ => return Err(format!("unknown source kind `{kind}`")),
        })
    }
}

/// SplitMix64 finalizer, used to derive independent per-instance seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of instance `index` drawn by check line `line` (its source `slot`).
pub(crate) fn instance_seed(base: u64, line: usize, slot: usize, index: usize) -> u64 {
    mix(mix(mix(base ^ line as u64) ^ slot as u64) ^ index as u64)
}

const RESAMPLE_LIMIT: usize = 10_000;

/// Draw from `gen` until `accept` holds; `None` after too many tries.
fn resample(seed: u64, accept: bool, mut gen: impl FnMut(&mut ChaCha8Rng) -> Digraph) -> Option<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..RESAMPLE_LIMIT)
        .map(|_| gen(&mut rng))
        .find(|d| !accept || d.min_in_degree() >= 1)
}

impl Source {
    /// Materialise the instances; random ones use seeds derived from `base`.
    pub fn instances(&self, base: u64, line: usize, slot: usize) -> Result<Vec<Instance>, SuiteError> {
        let seed_of = |i: usize| instance_seed(base, line, slot, i);
        let random = |kind: &str, i: usize, seed: u64, graph: Digraph| Instance {
            name: format!("{kind}:n={}#{i}", graph.order()),
            graph,
            spec: None,
            seed: Some(seed),
            inline: true,
        };
        let pick_n = |rng: &mut ChaCha8Rng, n: &RangeInclusive<usize>| rng.gen_range(n.clone());
        let out = match self {
            Source::Family(specs) => specs
                .iter()
                .map(|s| Instance::from_spec(s.clone()))
                .collect::<Result<_, _>>()?,
            Source::EnumDitrees(n) => enumerate_ditrees(*n, false)?
                .enumerate()
                .map(|(i, d)| Instance::inline(format!("ditree:n={n}#{i}"), d))
                .collect(),
            Source::EnumDigraphs(n) => enumerate_digraphs(*n)
                .enumerate()
                .map(|(i, d)| Instance::inline(format!("digraph:n={n}#{i}"), d))
                .collect(),
            Source::EnumDags(n) => enumerate_dags(*n)
                .enumerate()
                .map(|(i, d)| Instance::inline(format!("dag:n={n}#{i}"), d))
                .collect(),
            Source::RandomDitrees {
                n,
                count,
                weights,
                min_indeg,
            } => (0..*count)
                .filter_map(|i| {
                    let seed = seed_of(i);
                    resample(seed, *min_indeg, |rng| {
                        let k = pick_n(rng, n);
                        random_ditree_with(k, *weights, rng).expect("validated weights")
                    })
                    .map(|d| random("random-ditree", i, seed, d))
                })
                .collect(),
            Source::RandomDigraphs { n, count, p, min_indeg } => (0..*count)
                .filter_map(|i| {
                    let seed = seed_of(i);
                    resample(seed, *min_indeg, |rng| {
                        let k = pick_n(rng, n);
                        random_digraph(k, *p, rng)
                    })
                    .map(|d| random("random-digraph", i, seed, d))
                })
                .collect(),
            Source::RandomTrees { n, count } => (0..*count)
                .map(|i| {
                    let seed = seed_of(i);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let k = pick_n(&mut rng, n);
                    random("random-tree", i, seed, Digraph::bidirected(&random_tree(k, &mut rng)))
                })
                .collect(),
            Source::RandomDags { n, count, p } => (0..*count)
                .map(|i| {
                    let seed = seed_of(i);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let k = pick_n(&mut rng, n);
                    random("random-dag", i, seed, random_dag(k, *p, &mut rng))
                })
                .collect(),
        };
        Ok(out)
    }
}

/// One `check = <claim> <source> [<source>]` line.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub claim: Claim,
    pub sources: Vec<Source>,
    /// 1-based line number in the config text.
    pub line: usize,
}

/// A parsed suite config.
///
/// ```text
/// # comment
/// seed = 7
/// timeout_ms = 60000
/// exact_threshold = 64
/// packing_cap = 100000
/// check = packing-equals-domination enum-ditrees:4
/// check = vizing-inequality family:cycle:3 family:chorded-pentagon
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub timeout_ms: Option<u64>,
    pub exact_threshold: usize,
    pub packing_cap: usize,
    pub checks: Vec<CheckLine>,
}

impl SuiteConfig {
    pub fn check_config(&self, timing: bool) -> CheckConfig {
        CheckConfig {
            solve: SolveConfig {
                timeout: self.timeout_ms.map(Duration::from_millis),
            },
            exact_threshold: self.exact_threshold,
            packing_cap: self.packing_cap,
            timing,
            ..CheckConfig::default()
        }
    }
}

impl FromStr for SuiteConfig {
    type Err = SuiteError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let defaults = CheckConfig::default();
        let mut cfg = SuiteConfig {
            seed: 0,
            timeout_ms: defaults.solve.timeout.map(|t| t.as_millis() as u64),
            exact_threshold: defaults.exact_threshold,
            packing_cap: defaults.packing_cap,
            checks: Vec::new(),
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| parse_err(line, format!("expected `key = value`, got `{content}`")))?;
            let number = |v: &str| v.parse::<u64>().map_err(|_| parse_err(line, format!("`{v}` is not a number")));
            match key {
                "seed" => cfg.seed = number(value)?,
                "timeout_ms" => cfg.timeout_ms = Some(number(value)?).filter(|&t| t > 0),
                "exact_threshold" => cfg.exact_threshold = number(value)? as usize,
                "packing_cap" => cfg.packing_cap = number(value)? as usize,
                "check" => {
                    let mut words = value.split_whitespace();
                    let claim: Claim = words
                        .next()
                        .ok_or_else(|| parse_err(line, "missing claim id"))?
                        .parse()
                        .map_err(|e: String| parse_err(line, e))?;
                    let sources = words
                        .map(|w| w.parse().map_err(|e: String| parse_err(line, e)))
                        .collect::<Result<Vec<Source>, _>>()?;
                    let want = if claim.is_binary() { 2 } else { 1 };
                    if sources.len() != want {
                        return Err(parse_err(line, format!("`{claim}` takes {want} source(s), got {}", sources.len())));
                    }
                    if claim == Claim::GmVizingFailure
                        && !matches!(&sources[0], Source::Family(s) if s.iter().all(|f| matches!(f, FamilySpec::Gm(_))))
                    {
                        return Err(parse_err(line, "gm-vizing-failure takes family:Gm:<m> sources"));
                    }
                    cfg.checks.push(CheckLine { claim, sources, line });
                }
                other => return Err(parse_err(line, format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }
}

/// The built-in suite: every claim id at least once, sized to finish in
/// seconds.
pub const DEFAULT_SUITE: &str = "\
# Built-in suite: every claim id at least once.
seed = 20240601
timeout_ms = 60000
exact_threshold = 64
packing_cap = 100000
check = meir-moon family:path:4
check = meir-moon random-trees:n=1..14,count=100
check = packing-equals-domination family:K1star
check = packing-equals-domination family:Gm:1..4
check = packing-equals-domination enum-ditrees:4
check = open-packing-equals-total-domination family:path:4
check = open-packing-equals-total-domination enum-ditrees:4
check = total-domination-direct-product family:cycle:3 family:cycle:3..4
check = total-domination-direct-product family:path:3 random-digraphs:n=2..6,count=10,p=0.5,min_indeg=1
check = packing-lower-bound family:cycle:3 family:chorded-pentagon
check = packing-lower-bound random-digraphs:n=1..5,count=10,p=0.4 random-digraphs:n=1..5,count=5,p=0.4
check = vizing-inequality family:cycle:3 family:chorded-pentagon
check = vizing-inequality family:cycle:4 family:cycle:4
check = vizing-inequality random-ditrees:n=1..5,count=10 random-digraphs:n=1..5,count=5,p=0.4
check = half-vizing-bound family:cycle:3 family:cycle:3
check = half-vizing-bound family:Hm:3 family:Gm:1
check = half-vizing-bound random-digraphs:n=1..5,count=10,p=0.4 random-digraphs:n=1..5,count=5,p=0.4
check = gm-vizing-failure family:Gm:1..6
check = c4-equality family:corona:ff/bii
check = c4-equality family:corona:b/bb
check = c4-equality family:arcless:3
check = strong-support-condition family:K1star family:path:4
check = strong-support-condition enum-ditrees:4 family:path:2
check = isolated-leaf-extension family:K1star family:path:4
check = max-packing-dominates family:K1star family:path:4
check = acyclic-packing-domination enum-dags:3
check = acyclic-packing-domination family:C4:0202
check = closed-helly random-ditrees:n=2..20,count=50
check = open-helly random-ditrees:n=2..20,count=50,min_indeg=1
";

pub fn default_suite() -> SuiteConfig {
    DEFAULT_SUITE.parse().expect("built-in suite parses")
}

/// Verdict counts per claim, plus the records that contradict a theorem.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub counts: BTreeMap<String, BTreeMap<String, usize>>,
    /// `claim instance` of every theorem violation.
    pub violations: Vec<String>,
}

impl SuiteSummary {
    pub fn add(&mut self, rec: &VerificationRecord) {
        self.total += 1;
        *self
            .counts
            .entry(rec.claim.id().to_string())
            .or_default()
            .entry(rec.verdict.to_string())
            .or_default() += 1;
        if rec.violates_theorem() {
            self.violations.push(format!("{} {}", rec.claim, rec.instance));
        }
    }

    pub fn count(&self, claim: Claim, verdict: crate::record::Verdict) -> usize {
        self.counts
            .get(claim.id())
            .and_then(|m| m.get(&verdict.to_string()))
            .copied()
            .unwrap_or(0)
    }

    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (claim, verdicts) in &self.counts {
            let parts: Vec<String> = verdicts.iter().map(|(v, n)| format!("{v}={n}")).collect();
            writeln!(f, "{claim}: {}", parts.join(" "))?;
        }
        write!(f, "total {} records, {} theorem violations", self.total, self.violations.len())
    }
}

enum Task {
    Unary(Claim, Arc<Instance>),
    Binary(Claim, Arc<Instance>, Arc<Instance>),
    Leaf(Arc<Instance>, Arc<Instance>, usize),
    Gm(usize),
}

impl Task {
    fn run(&self, cfg: &CheckConfig) -> VerificationRecord {
        match self {
            Task::Gm(m) => check_gm_vizing_failure(*m, cfg),
            Task::Leaf(t, h, at) => check_isolated_leaf_extension(t, h, *at, cfg),
            Task::Unary(claim, i) => match claim {
                Claim::MeirMoon => check_meir_moon(i, cfg),
                Claim::PackingEqualsDomination => check_packing_equals_domination(i, cfg),
                Claim::OpenPackingEqualsTotalDomination => check_open_packing_equals_total_domination(i, cfg),
                Claim::C4Equality => check_c4_equality(i, cfg),
                Claim::AcyclicPackingDomination => run_acyclic_check(i, cfg),
                Claim::ClosedHelly => check_closed_helly(i, cfg),
                Claim::OpenHelly => check_open_helly(i, cfg),
                other => unreachable!("{other} is not unary"),
            },
            Task::Binary(claim, g, h) => match claim {
                Claim::TotalDominationDirectProduct => check_total_domination_direct_product(g, h, cfg),
                Claim::PackingLowerBound => check_packing_lower_bound(g, h, cfg),
                Claim::VizingInequality => check_vizing_inequality(g, h, cfg),
                Claim::HalfVizingBound => check_half_vizing_bound(g, h, cfg),
                Claim::StrongSupportCondition => check_strong_support_condition(g, h, cfg),
                Claim::MaxPackingDominates => check_max_packing_dominates(g, h, cfg),
                other => unreachable!("{other} is not a plain binary check"),
            },
        }
    }
}

fn tasks_for(check: &CheckLine, seed: u64) -> Result<Vec<Task>, SuiteError> {
    let sets = check
        .sources
        .iter()
        .enumerate()
        .map(|(slot, s)| {
            s.instances(seed, check.line, slot)
                .map(|v| v.into_iter().map(Arc::new).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let claim = check.claim;
    let tasks = match (claim, sets.as_slice()) {
        (Claim::GmVizingFailure, [a]) => a
            .iter()
            .map(|i| match i.spec {
                Some(FamilySpec::Gm(m)) => Task::Gm(m),
                _ => unreachable!("validated at parse time"),
            })
            .collect(),
        (_, [a]) => a.iter().map(|i| Task::Unary(claim, i.clone())).collect(),
        (Claim::IsolatedLeafExtension, [a, b]) => a
            .iter()
            .flat_map(|t| {
                b.iter()
                    .flat_map(move |h| (0..t.graph.order()).map(move |at| Task::Leaf(t.clone(), h.clone(), at)))
            })
            .collect(),
        (_, [a, b]) => a
            .iter()
            .flat_map(|g| b.iter().map(move |h| Task::Binary(claim, g.clone(), h.clone())))
            .collect(),
        _ => unreachable!("source count validated at parse time"),
    };
    Ok(tasks)
}

/// How a suite run is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; 0 uses all cores.
    pub jobs: usize,
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { jobs: 0, timing: true }
    }
}

const CHUNK: usize = 512;

/// Run every check line, writing one JSON line per record to `out` in a
/// deterministic order. Instances within a chunk run on the worker pool.
pub fn run_suite<W: Write>(suite: &SuiteConfig, opts: RunOptions, out: &mut W) -> Result<SuiteSummary, SuiteError> {
    run_suite_with(suite, opts, |rec| {
        serde_json::to_writer(&mut *out, rec)?;
        out.write_all(b"\n")?;
        Ok(())
    })
}

/// [`run_suite`] with a callback per record instead of a writer.
pub fn run_suite_with(
    suite: &SuiteConfig,
    opts: RunOptions,
    mut sink: impl FnMut(&VerificationRecord) -> Result<(), SuiteError>,
) -> Result<SuiteSummary, SuiteError> {
    let cfg = suite.check_config(opts.timing);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| SuiteError::Pool(e.to_string()))?;
    let mut summary = SuiteSummary::default();
    for check in &suite.checks {
        let tasks = tasks_for(check, suite.seed)?;
        for chunk in tasks.chunks(CHUNK) {
            let records: Vec<VerificationRecord> = pool.install(|| chunk.par_iter().map(|t| t.run(&cfg)).collect());
            for rec in &records {
                summary.add(rec);
                sink(rec)?;
            }
        }
    }
    Ok(summary)
}

/// Largest order enumerated exhaustively by [`search_acyclic_problem`].
pub const ACYCLIC_EXHAUSTIVE_LIMIT: usize = 5;

/// Records ρ vs γ for every acyclic digraph with at most
/// `min(max_n, 5)` vertices, then for `budget` random acyclic digraphs with
/// 1 to `max_n` vertices and arc densities spread over (0.1, 0.9).
pub fn search_acyclic_problem(
    max_n: usize,
    budget: usize,
    seed: u64,
    cfg: &CheckConfig,
) -> impl Iterator<Item = VerificationRecord> + '_ {
    let exhaustive = (1..=max_n.min(ACYCLIC_EXHAUSTIVE_LIMIT)).flat_map(move |n| {
        enumerate_dags(n)
            .enumerate()
            .map(move |(i, d)| run_acyclic_check(&Instance::inline(format!("dag:n={n}#{i}"), d), cfg))
    });
    let sampled = (0..budget).filter(move |_| max_n >= 1).map(move |i| {
        let s = instance_seed(seed, 0, 0, i);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.1..0.9);
        let d = random_dag(n, p, &mut rng);
        let mut inst = Instance::inline(format!("random-dag:n={n}#{i}"), d);
        inst.seed = Some(s);
        run_acyclic_check(&inst, cfg)
    });
    exhaustive.chain(sampled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::Verdict;

    #[test]
    fn sources_parse_and_expand() {
        let s: Source = "family:Gm:1..3".parse().unwrap();
        assert_eq!(s, Source::Family(vec![FamilySpec::Gm(1), FamilySpec::Gm(2), FamilySpec::Gm(3)]));
        let r: Source = "random-ditrees:n=2..5,count=7,w=1/2/3,min_indeg=1".parse().unwrap();
        assert_eq!(
            r,
            Source::RandomDitrees {
                n: 2..=5,
                count: 7,
                weights: [1, 2, 3],
                min_indeg: true
            }
        );
        assert!("random-digraphs:n=2,count=3".parse::<Source>().is_err());
        assert!("nowhere:3".parse::<Source>().is_err());
    }

    #[test]
    fn random_sources_are_deterministic() {
        let s: Source = "random-digraphs:n=2..6,count=20,p=0.5,min_indeg=1".parse().unwrap();
        let a = s.instances(9, 1, 0).unwrap();
        let b = s.instances(9, 1, 0).unwrap();
        assert_eq!(a.len(), 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
            assert!(x.graph.min_in_degree() >= 1);
        }
        let c = s.instances(10, 1, 0).unwrap();
        assert!(a.iter().zip(&c).any(|(x, y)| x.graph != y.graph));
    }

    #[test]
    fn config_errors_name_the_line() {
        let err = "seed = 1\ncheck = vizing-inequality family:cycle:3\n".parse::<SuiteConfig>().unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!("check = gm-vizing-failure family:cycle:3".parse::<SuiteConfig>().is_err());
        assert!("bogus = 1".parse::<SuiteConfig>().is_err());
    }

    #[test]
    fn default_suite_covers_every_claim() {
        let suite = default_suite();
        for claim in Claim::ALL {
            assert!(suite.checks.iter().any(|c| c.claim == claim), "{claim} missing");
        }
    }

    #[test]
    fn ditrees_of_order_four_all_hold() {
        let suite: SuiteConfig = "check = packing-equals-domination enum-ditrees:4".parse().unwrap();
        let mut out = Vec::new();
        let summary = run_suite(&suite, RunOptions { jobs: 2, timing: false }, &mut out).unwrap();
        assert_eq!(summary.count(Claim::PackingEqualsDomination, Verdict::Holds), 432);
        assert_eq!(summary.total, 432);
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 432);
    }

    #[test]
    fn suite_output_is_reproducible() {
        let text = "seed = 3\ncheck = half-vizing-bound random-digraphs:n=1..4,count=6,p=0.5 family:cycle:3\n";
        let suite: SuiteConfig = text.parse().unwrap();
        let opts = RunOptions { jobs: 3, timing: false };
        let (mut a, mut b) = (Vec::new(), Vec::new());
        run_suite(&suite, opts, &mut a).unwrap();
        run_suite(&suite, RunOptions { jobs: 1, ..opts }, &mut b).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn acyclic_search_covers_small_orders() {
        let cfg = CheckConfig {
            timing: false,
            ..CheckConfig::default()
        };
        let recs: Vec<_> = search_acyclic_problem(3, 10, 1, &cfg).collect();
        assert_eq!(recs.len(), 1 + 3 + 25 + 10);
        assert!(recs.iter().all(|r| r.hypotheses_met));
    }
}
