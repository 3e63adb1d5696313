//! Searches over generated or streamed graphs, and the registered
//! reproduction tasks built on them.
//!
//! A search evaluates a conjunction of conditions on every graph of a
//! universe. Work is split into a fixed number of chunks that do not depend
//! on the worker count, and per-chunk tallies are merged with commutative
//! operations, so reports are identical for any number of workers.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{is_center_regular_tree, ud_pairs};
use crate::codec::{encode_graph6_string, stream_graph6, ErrorPolicy, Padding};
use crate::enumerate::{connected_graphs, trees, GeneratorConfig, Mode, Shard, SmallGraph};
use crate::error::{CodecError, GraphError};
use crate::graph::Graph;
use crate::invariants::tr_ec;

/// Witness lists stop growing at this size and are marked truncated.
pub const WITNESS_CAP: usize = 10_000;
/// Generator universes are split into this many chunks.
const CHUNKS: usize = 32;
/// Records decoded from a graph6 stream per parallel batch.
const BATCH: usize = 1 << 15;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown task '{0}'")]
    UnknownTask(String),
    #[error("task '{0}' scans about a billion graphs; enable extended runs to start it")]
    ExtendedRequired(String),
    #[error("bad predicate '{0}': {1}")]
    BadPredicate(String, String),
    #[error("bad universe '{0}'")]
    BadUniverse(String),
    #[error("bad histogram key '{0}'")]
    BadHistogram(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Codec { path: String, source: CodecError },
    #[error("{0}")]
    Io(String),
    #[error("predicate panicked on graph {graph6}: {message}")]
    PredicatePanic { graph6: String, message: String },
    #[error("registry: {0}")]
    Registry(String),
}

type Result<T> = std::result::Result<T, HarnessError>;

/// Where the graphs of a search come from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    Generated(GeneratorConfig),
    Graph6File(PathBuf),
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::Generated(cfg) => {
                let mode = match cfg.mode {
                    Mode::ConnectedGraphs => "connected",
                    Mode::Trees => "trees",
                };
                write!(f, "{mode}:{}", cfg.n)?;
                if let Some(lo) = cfg.min_degree {
                    write!(f, ":min={lo}")?;
                }
                if let Some(hi) = cfg.max_degree {
                    write!(f, ":max={hi}")?;
                }
                Ok(())
            }
            Universe::Graph6File(p) => write!(f, "g6:{}", p.display()),
        }
    }
}

impl FromStr for Universe {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Universe> {
        let bad = || HarnessError::BadUniverse(s.to_string());
        if let Some(path) = s.strip_prefix("g6:") {
            return Ok(Universe::Graph6File(PathBuf::from(path)));
        }
        let mut parts = s.split(':');
        let mut cfg = match parts.next() {
            Some("connected") => GeneratorConfig::connected(0),
            Some("trees") => GeneratorConfig::trees(0),
            _ => return Err(bad()),
        };
        cfg.n = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        for extra in parts {
            let (k, v) = extra.split_once('=').ok_or_else(bad)?;
            let v: usize = v.parse().map_err(|_| bad())?;
            match k {
                "min" => cfg.min_degree = Some(v),
                "max" => cfg.max_degree = Some(v),
                _ => return Err(bad()),
            }
        }
        cfg.validate()?;
        Ok(Universe::Generated(cfg))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Quantity {
    Order,
    Edges,
    Diam,
    Rad,
    Cw,
    Cec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Le,
    Ge,
    Lt,
    Gt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Atom {
    TransmissionRegular,
    TransmissionIrregular,
    TransmissionIndivisible,
    IntervalIrregular,
    Arithmetic,
    SelfCentered,
    Bidegreed,
    Tree,
    Biconnected,
    CenterRegularTree,
    Ud,
    UdEqualTr,
    EcGtW,
    EcEqW,
    EcLtW,
    Cmp(Quantity, Op, u64),
}

fn parse_atom(tok: &str) -> Option<Atom> {
    let named = match tok {
        "transmission-regular" => Some(Atom::TransmissionRegular),
        "transmission-irregular" => Some(Atom::TransmissionIrregular),
        "transmission-indivisible" => Some(Atom::TransmissionIndivisible),
        "interval-irregular" => Some(Atom::IntervalIrregular),
        "arithmetic" => Some(Atom::Arithmetic),
        "self-centered" => Some(Atom::SelfCentered),
        "bidegreed" => Some(Atom::Bidegreed),
        "tree" => Some(Atom::Tree),
        "biconnected" | "2-connected" => Some(Atom::Biconnected),
        "center-regular-tree" => Some(Atom::CenterRegularTree),
        "ud" => Some(Atom::Ud),
        "ud-equal-tr" => Some(Atom::UdEqualTr),
        "ec-gt-w" => Some(Atom::EcGtW),
        "ec-eq-w" => Some(Atom::EcEqW),
        "ec-lt-w" => Some(Atom::EcLtW),
        _ => None,
    };
    if named.is_some() {
        return named;
    }
    let split = tok.find(|c: char| "=<>!".contains(c))?;
    let (name, rest) = tok.split_at(split);
    let q = match name {
        "n" | "order" => Quantity::Order,
        "m" | "edges" => Quantity::Edges,
        "diam" => Quantity::Diam,
        "rad" => Quantity::Rad,
        "cw" => Quantity::Cw,
        "cec" => Quantity::Cec,
        _ => return None,
    };
    let (op, value) = [
        ("<=", Op::Le),
        (">=", Op::Ge),
        ("!=", Op::Ne),
        ("=", Op::Eq),
        ("<", Op::Lt),
        (">", Op::Gt),
    ]
    .iter()
    .find_map(|&(sym, op)| rest.strip_prefix(sym).map(|v| (op, v)))?;
    Some(Atom::Cmp(q, op, value.parse().ok()?))
}

/// Conjunction of possibly negated conditions, written like
/// `interval-irregular,biconnected` or `diam=3,!tree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    text: String,
    atoms: Vec<(bool, Atom)>,
}

impl Predicate {
    /// The predicate that every graph satisfies.
    pub fn always() -> Predicate {
        Predicate { text: "all".into(), atoms: Vec::new() }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for Predicate {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Predicate> {
        let s = s.trim();
        if s.is_empty() || s == "all" {
            return Ok(Predicate::always());
        }
        let mut atoms = Vec::new();
        for raw in s.split(',') {
            let tok = raw.trim();
            let (neg, body) = match tok.strip_prefix('!').or_else(|| tok.strip_prefix("not-")) {
                Some(b) => (true, b),
                None => (false, tok),
            };
            let atom = parse_atom(body).ok_or_else(|| {
                HarnessError::BadPredicate(s.to_string(), format!("unknown condition '{tok}'"))
            })?;
            atoms.push((neg, atom));
        }
        Ok(Predicate { text: s.to_string(), atoms })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HistogramKey {
    /// Smallest and largest transmission, as `min..max`.
    Interval,
    Cw,
    Cec,
    Diam,
    /// `C_ec - C_W`.
    Gap,
}

impl FromStr for HistogramKey {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<HistogramKey> {
        Ok(match s {
            "interval" => HistogramKey::Interval,
            "cw" => HistogramKey::Cw,
            "cec" => HistogramKey::Cec,
            "diam" => HistogramKey::Diam,
            "gap" => HistogramKey::Gap,
            _ => return Err(HarnessError::BadHistogram(s.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Collect {
    pub witnesses: bool,
    pub histogram: Option<HistogramKey>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTask {
    pub name: String,
    pub universe: Universe,
    pub predicate: Predicate,
    pub collect: Collect,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub workers: usize,
    pub policy: ErrorPolicy,
    pub padding: Padding,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            policy: ErrorPolicy::Abort,
            padding: Padding::Strict,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> SearchOptions {
        SearchOptions { workers, ..SearchOptions::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub task: String,
    pub universe: String,
    pub predicate: String,
    pub shard: String,
    /// Graphs the predicate was evaluated on, disconnected ones included.
    pub examined: u64,
    /// Disconnected graphs from a graph6 source; they never match.
    pub disconnected: u64,
    /// Undecodable graph6 records skipped under the skip policy.
    pub skipped_records: u64,
    pub matches: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
    #[serde(default)]
    pub witnesses_truncated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub histogram: Option<BTreeMap<String, u64>>,
    /// Elapsed time; left out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

/// One header line plus one line per report.
pub fn csv_summary(reports: &[SearchReport]) -> String {
    let mut out = String::from("task,universe,predicate,shard,examined,matches\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},\"{}\",{},{},{}\n",
            r.task, r.universe, r.predicate, r.shard, r.examined, r.matches
        ));
    }
    out
}

/// A graph being examined, in whichever representation the source produced.
#[derive(Clone, Copy)]
enum Item<'a> {
    Small(&'a SmallGraph),
    Full(&'a Graph),
}

impl Item<'_> {
    fn order(&self) -> usize {
        match self {
            Item::Small(g) => g.order(),
            Item::Full(g) => g.order(),
        }
    }

    fn degree(&self, v: usize) -> usize {
        match self {
            Item::Small(g) => g.degree(v),
            Item::Full(g) => g.deg(v),
        }
    }

    fn edge_count(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    fn full(&self) -> Cow<'_, Graph> {
        match self {
            Item::Small(g) => Cow::Owned(g.to_graph()),
            Item::Full(g) => Cow::Borrowed(*g),
        }
    }

    fn is_biconnected(&self) -> bool {
        match self {
            Item::Small(g) => g.order() >= 3 && (0..g.order()).all(|v| !g.is_cut_vertex(v)),
            Item::Full(g) => g.is_biconnected().unwrap_or(false),
        }
    }

    fn graph6(&self) -> String {
        encode_graph6_string(&self.full())
    }
}

/// Transmission and eccentricity data for the graph under examination,
/// reusing its buffers between graphs.
#[derive(Default)]
struct Facts {
    n: usize,
    tr: Vec<u64>,
    ec: Vec<u32>,
    sorted_tr: Vec<u64>,
    c_w: usize,
    c_ec: usize,
    diam: u32,
    rad: u32,
}

impl Facts {
    /// False when the graph is disconnected or empty.
    fn fill(&mut self, item: Item<'_>) -> bool {
        let n = item.order();
        if n == 0 {
            return false;
        }
        self.n = n;
        match item {
            Item::Small(g) => {
                self.tr.resize(n, 0);
                self.ec.resize(n, 0);
                if !g.tr_ec(&mut self.tr, &mut self.ec) {
                    return false;
                }
            }
            Item::Full(g) => match tr_ec(g) {
                Ok((tr, ec)) => {
                    self.tr = tr;
                    self.ec = ec;
                }
                Err(_) => return false,
            },
        }
        self.sorted_tr.clear();
        self.sorted_tr.extend_from_slice(&self.tr);
        self.sorted_tr.sort_unstable();
        self.sorted_tr.dedup();
        self.c_w = self.sorted_tr.len();
        self.diam = *self.ec.iter().max().expect("n >= 1");
        self.rad = *self.ec.iter().min().expect("n >= 1");
        self.c_ec = (self.diam - self.rad) as usize + 1;
        true
    }

    fn indivisible(&self) -> bool {
        if self.c_w != self.n {
            return false;
        }
        let mut seen = 0u128;
        let mut big = vec![];
        for &t in &self.tr {
            let r = (t % self.n as u64) as usize;
            if r < 128 {
                if seen >> r & 1 == 1 {
                    return false;
                }
                seen |= 1 << r;
            } else {
                big.push(r);
            }
        }
        big.sort_unstable();
        big.windows(2).all(|w| w[0] != w[1])
    }

    fn arithmetic(&self) -> bool {
        let s = &self.sorted_tr;
        s.len() < 3 || s.windows(2).all(|w| w[1] - w[0] == s[1] - s[0])
    }

    fn quantity(&self, q: Quantity, item: Item<'_>) -> u64 {
        match q {
            Quantity::Order => self.n as u64,
            Quantity::Edges => item.edge_count() as u64,
            Quantity::Diam => self.diam as u64,
            Quantity::Rad => self.rad as u64,
            Quantity::Cw => self.c_w as u64,
            Quantity::Cec => self.c_ec as u64,
        }
    }

    fn histogram_key(&self, key: HistogramKey) -> String {
        match key {
            HistogramKey::Interval => {
                format!("{}..{}", self.sorted_tr[0], self.sorted_tr[self.c_w - 1])
            }
            HistogramKey::Cw => self.c_w.to_string(),
            HistogramKey::Cec => self.c_ec.to_string(),
            HistogramKey::Diam => self.diam.to_string(),
            HistogramKey::Gap => (self.c_ec as i64 - self.c_w as i64).to_string(),
        }
    }

    fn holds(&self, atom: Atom, item: Item<'_>) -> bool {
        match atom {
            Atom::TransmissionRegular => self.c_w == 1,
            Atom::TransmissionIrregular => self.c_w == self.n,
            Atom::TransmissionIndivisible => self.indivisible(),
            Atom::IntervalIrregular => {
                self.c_w == self.n && self.sorted_tr[self.n - 1] - self.sorted_tr[0] == self.n as u64 - 1
            }
            Atom::Arithmetic => self.arithmetic(),
            Atom::SelfCentered => self.c_ec == 1,
            Atom::Bidegreed => {
                let mut d: Vec<usize> = (0..self.n).map(|v| item.degree(v)).collect();
                d.sort_unstable();
                d.dedup();
                d.len() == 2
            }
            Atom::Tree => item.edge_count() + 1 == self.n,
            Atom::Biconnected => item.is_biconnected(),
            Atom::CenterRegularTree => {
                item.edge_count() + 1 == self.n
                    && is_center_regular_tree(&item.full()).unwrap_or(false)
            }
            Atom::Ud => self.n >= 2 && !ud_pairs(&item.full()).unwrap_or_default().is_empty(),
            Atom::UdEqualTr => {
                self.n >= 2
                    && ud_pairs(&item.full())
                        .unwrap_or_default()
                        .iter()
                        .any(|&(u, v)| self.tr[u] == self.tr[v])
            }
            Atom::EcGtW => self.c_ec > self.c_w,
            Atom::EcEqW => self.c_ec == self.c_w,
            Atom::EcLtW => self.c_ec < self.c_w,
            Atom::Cmp(q, op, value) => {
                let x = self.quantity(q, item);
                match op {
                    Op::Eq => x == value,
                    Op::Ne => x != value,
                    Op::Le => x <= value,
                    Op::Ge => x >= value,
                    Op::Lt => x < value,
                    Op::Gt => x > value,
                }
            }
        }
    }

    fn matches(&self, p: &Predicate, item: Item<'_>) -> bool {
        p.atoms.iter().all(|&(neg, a)| self.holds(a, item) != neg)
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    matches: u64,
    witnesses: BTreeSet<String>,
    truncated: bool,
    histogram: BTreeMap<String, u64>,
}

impl Tally {
    fn add_witness(&mut self, w: String) {
        if self.witnesses.len() >= WITNESS_CAP {
            self.truncated = true;
            if self.witnesses.last().is_some_and(|last| &w >= last) {
                return;
            }
        }
        self.witnesses.insert(w);
        if self.witnesses.len() > WITNESS_CAP {
            self.witnesses.pop_last();
        }
    }

    fn merge(&mut self, other: Tally) {
        self.matches += other.matches;
        self.truncated |= other.truncated;
        for w in other.witnesses {
            self.add_witness(w);
        }
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_insert(0) += v;
        }
    }
}

#[derive(Clone, Debug, Default)]
struct Scan {
    examined: u64,
    disconnected: u64,
    skipped: u64,
    tallies: Vec<Tally>,
}

impl Scan {
    fn new(tasks: usize) -> Scan {
        Scan { tallies: vec![Tally::default(); tasks], ..Scan::default() }
    }

    fn merge(mut self, other: Scan) -> Scan {
        self.examined += other.examined;
        self.disconnected += other.disconnected;
        self.skipped += other.skipped;
        for (a, b) in self.tallies.iter_mut().zip(other.tallies) {
            a.merge(b);
        }
        self
    }

    fn observe(&mut self, facts: &mut Facts, item: Item<'_>, tasks: &[SearchTask]) -> Result<()> {
        self.examined += 1;
        let outcome = catch_unwind(AssertUnwindSafe(|| {
            if !facts.fill(item) {
                return None;
            }
            Some(
                tasks
                    .iter()
                    .map(|t| {
                        facts.matches(&t.predicate, item).then(|| {
                            t.collect.histogram.map(|k| facts.histogram_key(k))
                        })
                    })
                    .collect::<Vec<_>>(),
            )
        }));
        let results = match outcome {
            Ok(Some(r)) => r,
            Ok(None) => {
                self.disconnected += 1;
                return Ok(());
            }
            Err(payload) => {
                let message = payload
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| payload.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "unknown panic".into());
                return Err(HarnessError::PredicatePanic { graph6: item.graph6(), message });
            }
        };
        for ((task, tally), hit) in tasks.iter().zip(&mut self.tallies).zip(results) {
            let Some(key) = hit else { continue };
            tally.matches += 1;
            if let Some(k) = key {
                *tally.histogram.entry(k).or_insert(0) += 1;
            }
            if task.collect.witnesses {
                tally.add_witness(item.graph6());
            }
        }
        Ok(())
    }
}

fn scan_chunk(cfg: &GeneratorConfig, tasks: &[SearchTask]) -> Result<Scan> {
    let mut scan = Scan::new(tasks.len());
    let mut facts = Facts::default();
    match cfg.mode {
        Mode::ConnectedGraphs => {
            let mut gen = connected_graphs(cfg)?;
            while let Some(g) = gen.next_small() {
                scan.observe(&mut facts, Item::Small(&g), tasks)?;
            }
        }
        Mode::Trees => {
            for t in trees(cfg)? {
                scan.observe(&mut facts, Item::Full(&t), tasks)?;
            }
        }
    }
    Ok(scan)
}

fn scan_generated(cfg: &GeneratorConfig, tasks: &[SearchTask]) -> Result<Scan> {
    cfg.validate()?;
    (0..CHUNKS)
        .into_par_iter()
        .map(|c| scan_chunk(&cfg.with_shard(cfg.shard.subdivide(c, CHUNKS)), tasks))
        .try_reduce(|| Scan::new(tasks.len()), |a, b| Ok(a.merge(b)))
}

fn scan_batch(batch: &[Graph], tasks: &[SearchTask]) -> Result<Scan> {
    batch
        .par_chunks(1024)
        .map(|part| {
            let mut scan = Scan::new(tasks.len());
            let mut facts = Facts::default();
            for g in part {
                scan.observe(&mut facts, Item::Full(g), tasks)?;
            }
            Ok(scan)
        })
        .try_reduce(|| Scan::new(tasks.len()), |a, b| Ok(a.merge(b)))
}

fn scan_file(path: &PathBuf, tasks: &[SearchTask], opts: &SearchOptions) -> Result<Scan> {
    let shown = path.display().to_string();
    let reader: Box<dyn BufRead> = if shown == "-" {
        Box::new(BufReader::new(std::io::stdin()))
    } else {
        let f = File::open(path).map_err(|e| HarnessError::Io(format!("{shown}: {e}")))?;
        Box::new(BufReader::new(f))
    };
    let mut stream = stream_graph6(reader).policy(opts.policy).padding(opts.padding);
    let mut total = Scan::new(tasks.len());
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        let next = stream.next();
        let done = next.is_none();
        match next {
            Some(Ok(g)) => batch.push(g),
            Some(Err(e)) => return Err(HarnessError::Codec { path: shown, source: e }),
            None => {}
        }
        if batch.len() == BATCH || (done && !batch.is_empty()) {
            total = total.merge(scan_batch(&batch, tasks)?);
            batch.clear();
        }
        if done {
            break;
        }
    }
    total.skipped = stream.diagnostics().len() as u64;
    Ok(total)
}

fn build_pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| HarnessError::Io(format!("cannot start worker pool: {e}")))
}

/// Runs several tasks, scanning each distinct universe once. Reports come
/// back in the order of `tasks`.
pub fn run_searches(tasks: &[SearchTask], opts: &SearchOptions) -> Result<Vec<SearchReport>> {
    let pool = build_pool(opts.workers)?;
    let mut universes: Vec<&Universe> = Vec::new();
    for t in tasks {
        if !universes.contains(&&t.universe) {
            universes.push(&t.universe);
        }
    }
    let mut reports: Vec<Option<SearchReport>> = vec![None; tasks.len()];
    for universe in universes {
        let members: Vec<usize> = (0..tasks.len()).filter(|&i| &tasks[i].universe == universe).collect();
        let group: Vec<SearchTask> = members.iter().map(|&i| tasks[i].clone()).collect();
        let start = Instant::now();
        let scan = pool.install(|| match universe {
            Universe::Generated(cfg) => scan_generated(cfg, &group),
            Universe::Graph6File(p) => scan_file(p, &group, opts),
        })?;
        let elapsed = start.elapsed();
        let shard = match universe {
            Universe::Generated(cfg) => cfg.shard.to_string(),
            Universe::Graph6File(_) => Shard::WHOLE.to_string(),
        };
        for ((&i, task), tally) in members.iter().zip(&group).zip(scan.tallies) {
            reports[i] = Some(SearchReport {
                task: task.name.clone(),
                universe: universe.to_string(),
                predicate: task.predicate.to_string(),
                shard: shard.clone(),
                examined: scan.examined,
                disconnected: scan.disconnected,
                skipped_records: scan.skipped,
                matches: tally.matches,
                witnesses: task.collect.witnesses.then(|| tally.witnesses.into_iter().collect()),
                witnesses_truncated: tally.truncated,
                histogram: task.collect.histogram.map(|_| tally.histogram),
                wall_time: elapsed,
            });
        }
    }
    Ok(reports.into_iter().map(|r| r.expect("every task belongs to a universe")).collect())
}

pub fn run_search(task: &SearchTask, opts: &SearchOptions) -> Result<SearchReport> {
    Ok(run_searches(std::slice::from_ref(task), opts)?.remove(0))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub universe: String,
    pub predicate: String,
    #[serde(default)]
    pub witnesses: bool,
    #[serde(default)]
    pub histogram: Option<String>,
    #[serde(default)]
    pub count: Option<u64>,
    #[serde(default)]
    pub count_at_least: Option<u64>,
    #[serde(default)]
    pub histogram_at_least: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub name: String,
    pub claim: String,
    #[serde(default)]
    pub extended: bool,
    pub run: Vec<RunSpec>,
}

#[derive(Deserialize)]
struct Registry {
    task: Vec<TaskSpec>,
}

/// The built-in reproduction tasks.
pub fn registry() -> &'static [TaskSpec] {
    static REG: OnceLock<Vec<TaskSpec>> = OnceLock::new();
    REG.get_or_init(|| {
        let r: Registry = toml::from_str(include_str!("registry.toml")).expect("embedded registry parses");
        r.task
    })
}

pub fn find_task(name: &str) -> Result<&'static TaskSpec> {
    registry().iter().find(|t| t.name == name).ok_or_else(|| HarnessError::UnknownTask(name.to_string()))
}

#[derive(Clone, Debug, Default)]
pub struct ReproduceOptions {
    pub search: Option<SearchOptions>,
    /// Allow tasks marked extended.
    pub extended: bool,
    /// Read graphs from this graph6 file instead of the generator. Only for
    /// tasks whose runs all share one universe.
    pub source: Option<PathBuf>,
    /// Run one shard of the generator; expectations are then not checked.
    pub shard: Option<Shard>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A single shard ran; the expectations refer to the whole universe.
    Partial,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Partial => "PARTIAL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub what: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOutcome {
    pub report: SearchReport,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub task: String,
    pub claim: String,
    pub status: Status,
    pub runs: Vec<RunOutcome>,
}

impl ReproduceReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Human-readable summary, one line per check.
    pub fn render(&self) -> String {
        let mut out = format!("{} {}: {}\n", self.status, self.task, self.claim);
        for run in &self.runs {
            for c in &run.checks {
                out.push_str(&format!(
                    "  {} {} [{}] {}: expected {}, observed {}\n",
                    c.status, run.report.universe, run.report.predicate, c.what, c.expected, c.observed
                ));
            }
        }
        out
    }
}

fn checks_for(spec: &RunSpec, report: &SearchReport, partial: bool) -> Vec<Check> {
    let verdict = |ok: bool| match (partial, ok) {
        (true, _) => Status::Partial,
        (false, true) => Status::Pass,
        (false, false) => Status::Fail,
    };
    let mut checks = Vec::new();
    if let Some(want) = spec.count {
        checks.push(Check {
            what: "count".into(),
            expected: want.to_string(),
            observed: report.matches.to_string(),
            status: verdict(report.matches == want),
        });
    }
    if let Some(want) = spec.count_at_least {
        checks.push(Check {
            what: "count".into(),
            expected: format!(">= {want}"),
            observed: report.matches.to_string(),
            status: verdict(report.matches >= want),
        });
    }
    if let Some(bins) = &spec.histogram_at_least {
        let hist = report.histogram.clone().unwrap_or_default();
        for (k, &want) in bins {
            let got = hist.get(k).copied().unwrap_or(0);
            checks.push(Check {
                what: format!("histogram {k}"),
                expected: format!(">= {want}"),
                observed: got.to_string(),
                status: verdict(got >= want),
            });
        }
    }
    checks
}

fn run_to_task(task: &TaskSpec, spec: &RunSpec, opts: &ReproduceOptions) -> Result<SearchTask> {
    let mut universe: Universe = spec.universe.parse()?;
    if let Some(src) = &opts.source {
        if task.run.iter().any(|r| r.universe != spec.universe) {
            return Err(HarnessError::BadUniverse(format!(
                "task '{}' spans several universes; a single graph6 source cannot replace them",
                task.name
            )));
        }
        universe = Universe::Graph6File(src.clone());
    } else if let (Some(shard), Universe::Generated(cfg)) = (opts.shard, &mut universe) {
        cfg.shard = shard;
    }
    Ok(SearchTask {
        name: task.name.clone(),
        universe,
        predicate: spec.predicate.parse()?,
        collect: Collect {
            witnesses: spec.witnesses,
            histogram: spec.histogram.as_deref().map(str::parse).transpose()?,
        },
    })
}

/// Runs several registered tasks, scanning each distinct universe once.
pub fn reproduce_many(names: &[&str], opts: &ReproduceOptions) -> Result<Vec<ReproduceReport>> {
    let specs: Vec<&TaskSpec> = names.iter().map(|n| find_task(n)).collect::<Result<_>>()?;
    for s in &specs {
        if s.extended && !opts.extended {
            return Err(HarnessError::ExtendedRequired(s.name.clone()));
        }
    }
    let mut searches = Vec::new();
    for s in &specs {
        for r in &s.run {
            searches.push(run_to_task(s, r, opts)?);
        }
    }
    let search_opts = opts.search.unwrap_or_default();
    let mut reports = run_searches(&searches, &search_opts)?.into_iter();
    let partial = opts.shard.is_some_and(|s| s.count > 1) && opts.source.is_none();
    let mut out = Vec::new();
    for s in specs {
        let mut runs = Vec::new();
        for r in &s.run {
            let report = reports.next().expect("one report per run");
            runs.push(RunOutcome { checks: checks_for(r, &report, partial), report });
        }
        let all: Vec<Status> = runs.iter().flat_map(|r| r.checks.iter().map(|c| c.status)).collect();
        let status = if all.contains(&Status::Fail) {
            Status::Fail
        } else if all.contains(&Status::Partial) {
            Status::Partial
        } else {
            Status::Pass
        };
        out.push(ReproduceReport { task: s.name.clone(), claim: s.claim.clone(), status, runs });
    }
    Ok(out)
}

pub fn reproduce(name: &str, opts: &ReproduceOptions) -> Result<ReproduceReport> {
    Ok(reproduce_many(&[name], opts)?.remove(0))
}
