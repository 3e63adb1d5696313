//! Command-line front end.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::classify::{classify_with, ClassificationReport};
use crate::codec::{encode_graph6_string, stream_graph6, ErrorPolicy, Padding};
use crate::construct::FamilySpec;
use crate::enumerate::{Mode, Shard, MAX_CONNECTED_ORDER};
use crate::error::GraphError;
use crate::graph::Graph;
use crate::harness::{
    csv_summary, reproduce_many, run_search, Collect, HarnessError, HistogramKey, Predicate, ReproduceOptions,
    SearchOptions, SearchTask, Universe,
};
use crate::invariants::{profile, ProfileRecord};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wiener-ecc", version, about = "Wiener and eccentric complexity of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Family name such as `z:3`, `qminus:5`, `bloom:cycle:6:2`.
    #[arg(long)]
    pub family: Option<String>,
    /// graph6 or sparse6 file, one record per line; `-` reads stdin.
    #[arg(long, value_name = "FILE")]
    pub g6: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ReadOpts {
    /// Accept nonzero padding bits in graph6 records.
    #[arg(long)]
    pub lenient: bool,
    /// Skip undecodable records instead of stopping at the first one.
    #[arg(long)]
    pub skip_bad: bool,
}

impl ReadOpts {
    fn padding(&self) -> Padding {
        if self.lenient {
            Padding::Lenient
        } else {
            Padding::Strict
        }
    }

    fn policy(&self) -> ErrorPolicy {
        if self.skip_bad {
            ErrorPolicy::Skip
        } else {
            ErrorPolicy::Abort
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Transmissions, eccentricities and complexities, one JSON line per graph.
    Profile {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        read: ReadOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Class memberships, one JSON line per graph.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        read: ReadOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the graph6 record of a family member.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count the graphs of a universe that satisfy a predicate.
    Search {
        /// `connected:N[:min=K][:max=K]`, `trees:N` or `g6:FILE`.
        #[arg(long)]
        universe: String,
        /// Comma-separated conditions, `!` negates, e.g. `interval-irregular,!tree`.
        #[arg(long = "pred", default_value = "all")]
        predicate: String,
        /// Collect sorted graph6 witnesses.
        #[arg(long)]
        witnesses: bool,
        /// Histogram of matches by `interval`, `cw`, `cec`, `diam` or `gap`.
        #[arg(long)]
        histogram: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
        /// Run only part `i` of `k` of a generated universe.
        #[arg(long, value_name = "i/k")]
        shard: Option<String>,
        /// Allow generated universes of order 11.
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        read: ReadOpts,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print a CSV summary line to stdout.
        #[arg(long)]
        csv: bool,
    },
    /// Run registered tasks and compare with their expected values.
    Reproduce {
        #[arg(required = true)]
        tasks: Vec<String>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_name = "i/k")]
        shard: Option<String>,
        /// Allow the order-11 tasks.
        #[arg(long)]
        extended: bool,
        /// Read the universe from a graph6 file instead of the generator.
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
        #[command(flatten)]
        read: ReadOpts,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Run verification suites: `all` or one of the suite names.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Random factor pairs for the product identity suite.
        #[arg(long, default_value_t = verify::DEFAULT_PAIR_BUDGET)]
        pairs: usize,
        /// Largest order of a random factor.
        #[arg(long, default_value_t = verify::DEFAULT_MAX_FACTOR_ORDER)]
        max_order: usize,
        /// Largest order for the tree and diameter-two suites.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read edge lists (`n` on the first line, then `u v` per line) and print graph6.
    Encode {
        /// Edge list file; stdin when absent or `-`.
        #[arg(long)]
        edges: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode graph6 / sparse6 records into JSON lines with edge lists.
    Decode {
        /// Input file; stdin when absent or `-`.
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
        #[command(flatten)]
        read: ReadOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Errors with the exit code they map to.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> CliError {
        match e {
            GraphError::BadParameter(_) | GraphError::TooLarge { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> CliError {
        match e {
            HarnessError::Codec { .. } | HarnessError::Io(_) | HarnessError::PredicatePanic { .. } => {
                CliError::Input(e.to_string())
            }
            HarnessError::Graph(g) => g.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn open_input(path: Option<&Path>) -> CliResult<(String, Box<dyn BufRead>)> {
    match path {
        None => Ok(("<stdin>".into(), Box::new(BufReader::new(io::stdin())))),
        Some(p) if p.as_os_str() == "-" => Ok(("<stdin>".into(), Box::new(BufReader::new(io::stdin())))),
        Some(p) => {
            let f = File::open(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            Ok((p.display().to_string(), Box::new(BufReader::new(f))))
        }
    }
}

fn open_output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        None => Box::new(BufWriter::new(io::stdout())),
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
        )),
    })
}

/// Calls `f` on every input graph with a label for diagnostics.
fn for_each_graph(
    input: &Input,
    read: &ReadOpts,
    mut f: impl FnMut(&Graph, &str) -> CliResult<()>,
) -> CliResult<()> {
    if let Some(spec) = &input.family {
        let spec: FamilySpec = spec.parse()?;
        let g = spec.build()?;
        return f(&g, &spec.to_string());
    }
    let (name, reader) = open_input(input.g6.as_deref())?;
    let mut stream = stream_graph6(reader).policy(read.policy()).padding(read.padding());
    while let Some(item) = stream.next() {
        let g = item.map_err(|e| CliError::Input(format!("{name}: {e}")))?;
        let at = format!("{name}: line {}", stream.line_number());
        f(&g, &at)?;
    }
    for d in stream.diagnostics() {
        eprintln!("{name}: skipped {d}");
    }
    Ok(())
}

fn json_line<T: Serialize>(w: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer(&mut *w, value).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(w)?;
    Ok(())
}

fn json_doc<T: Serialize>(w: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *w, value).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(w)?;
    Ok(())
}

#[derive(Serialize)]
struct ClassifyRecord {
    graph6: String,
    #[serde(flatten)]
    report: ClassificationReport,
}

#[derive(Serialize)]
struct DecodeRecord {
    graph6: String,
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn parse_shard(s: Option<&str>) -> CliResult<Option<Shard>> {
    s.map(|s| s.parse::<Shard>().map_err(CliError::from)).transpose()
}

fn search_options(workers: Option<usize>, read: &ReadOpts) -> CliResult<SearchOptions> {
    let mut opts = SearchOptions { policy: read.policy(), padding: read.padding(), ..SearchOptions::default() };
    if let Some(w) = workers {
        if w == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        opts.workers = w;
    }
    Ok(opts)
}

fn parse_edge_list(name: &str, mut reader: Box<dyn BufRead>) -> CliResult<Graph> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    let (_, first) = lines.next().ok_or_else(|| CliError::Input(format!("{name}: empty edge list")))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{name}: line 1: expected the vertex count")))?;
    let mut edges = Vec::new();
    for (i, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Input(format!("{name}: line {}: expected two vertex numbers", i + 1)))?;
        match nums[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(CliError::Input(format!("{name}: line {}: expected two vertex numbers", i + 1))),
        }
    }
    Graph::new(n, &edges).map_err(|e| CliError::Input(format!("{name}: {e}")))
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Profile { input, read, out } => {
            let mut w = open_output(out.as_deref())?;
            for_each_graph(&input, &read, |g, at| {
                let p = profile(g).map_err(|e| CliError::Input(format!("{at}: {e}")))?;
                json_line(&mut w, &ProfileRecord::new(g, &p))
            })?;
            w.flush()?;
            Ok(EXIT_OK)
        }
        Command::Classify { input, read, out } => {
            let mut w = open_output(out.as_deref())?;
            for_each_graph(&input, &read, |g, at| {
                let p = profile(g).map_err(|e| CliError::Input(format!("{at}: {e}")))?;
                let report = classify_with(g, &p).map_err(|e| CliError::Input(format!("{at}: {e}")))?;
                json_line(&mut w, &ClassifyRecord { graph6: encode_graph6_string(g), report })
            })?;
            w.flush()?;
            Ok(EXIT_OK)
        }
        Command::Construct { family, out } => {
            let g = family.parse::<FamilySpec>()?.build()?;
            let mut w = open_output(out.as_deref())?;
            writeln!(w, "{}", encode_graph6_string(&g))?;
            w.flush()?;
            Ok(EXIT_OK)
        }
        Command::Search { universe, predicate, witnesses, histogram, workers, shard, extended, read, out, csv } => {
            let mut universe: Universe = universe.parse()?;
            if let Universe::Generated(cfg) = &mut universe {
                if cfg.mode == Mode::ConnectedGraphs && cfg.n == MAX_CONNECTED_ORDER && !extended {
                    return Err(CliError::Usage(format!(
                        "connected graphs of order {} number about a billion; pass --extended to run them",
                        cfg.n
                    )));
                }
                if let Some(s) = parse_shard(shard.as_deref())? {
                    cfg.shard = s;
                }
            } else if shard.is_some() {
                return Err(CliError::Usage("--shard applies to generated universes only".into()));
            }
            let task = SearchTask {
                name: "search".into(),
                universe,
                predicate: predicate.parse::<Predicate>()?,
                collect: Collect {
                    witnesses,
                    histogram: histogram.as_deref().map(str::parse::<HistogramKey>).transpose()?,
                },
            };
            let report = run_search(&task, &search_options(workers, &read)?)?;
            eprintln!("{} graphs examined in {:.2?}", report.examined, report.wall_time);
            if csv {
                print!("{}", csv_summary(std::slice::from_ref(&report)));
            }
            if out.is_some() || !csv {
                let mut w = open_output(out.as_deref())?;
                json_doc(&mut w, &report)?;
                w.flush()?;
            }
            Ok(EXIT_OK)
        }
        Command::Reproduce { tasks, workers, shard, extended, g6, read, out, csv } => {
            let opts = ReproduceOptions {
                search: Some(search_options(workers, &read)?),
                extended,
                source: g6,
                shard: parse_shard(shard.as_deref())?,
            };
            let names: Vec<&str> = tasks.iter().map(String::as_str).collect();
            let reports = reproduce_many(&names, &opts)?;
            for r in &reports {
                eprint!("{}", r.render());
            }
            if csv {
                let runs: Vec<_> = reports.iter().flat_map(|r| r.runs.iter().map(|x| x.report.clone())).collect();
                print!("{}", csv_summary(&runs));
            }
            if out.is_some() || !csv {
                let mut w = open_output(out.as_deref())?;
                json_doc(&mut w, &reports)?;
                w.flush()?;
            }
            Ok(if reports.iter().any(|r| r.status == crate::harness::Status::Fail) { EXIT_FAIL } else { EXIT_OK })
        }
        Command::Verify { suite, seed, pairs, max_order, max_n, workers, out } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let names: Vec<&str> = if suite == "all" { verify::SUITES.to_vec() } else { vec![suite.as_str()] };
            let results = pool.install(|| {
                names
                    .iter()
                    .map(|&name| match (name, max_n) {
                        ("product-identity", _) => verify::product_identity_suite(pairs, max_order, seed),
                        ("tree", Some(n)) => verify::tree_suite(n),
                        ("diam2", Some(n)) => verify::diam2_suite(n),
                        _ => verify::run_suite(name, seed),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })?;
            for r in &results {
                eprint!("{}", r.render());
            }
            let mut w = open_output(out.as_deref())?;
            json_doc(&mut w, &results)?;
            w.flush()?;
            Ok(if results.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Encode { edges, out } => {
            let (name, reader) = open_input(edges.as_deref())?;
            let g = parse_edge_list(&name, reader)?;
            let mut w = open_output(out.as_deref())?;
            writeln!(w, "{}", encode_graph6_string(&g))?;
            w.flush()?;
            Ok(EXIT_OK)
        }
        Command::Decode { g6, read, out } => {
            let mut w = open_output(out.as_deref())?;
            let input = Input { family: None, g6: Some(g6.unwrap_or_else(|| PathBuf::from("-"))) };
            for_each_graph(&input, &read, |g, _| {
                json_line(
                    &mut w,
                    &DecodeRecord { graph6: encode_graph6_string(g), n: g.order(), edges: g.edges().collect() },
                )
            })?;
            w.flush()?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Diagnostics go to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}

