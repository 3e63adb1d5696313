//! Acceptance criteria. Each test prints one `PASS` or `FAIL` line and
//! fails when its criterion is not met.

use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wiener_ecc::classify::classify;
use wiener_ecc::codec::{decode_graph6, encode_graph6_string};
use wiener_ecc::construct::{cartesian_power, hypercube_minus, spider, y_graph, z_graph, cartesian_product, NamedGraph};
use wiener_ecc::enumerate::{connected_graphs, count, GeneratorConfig};
use wiener_ecc::harness::{
    reproduce, reproduce_many, run_search, Collect, HistogramKey, ReproduceOptions, SearchOptions, SearchTask, Status,
    Universe,
};
use wiener_ecc::verify::{product_identity_suite, tree_suite, SuiteResult, DEFAULT_SEED};
use wiener_ecc::{profile, Graph};

/// Writes past the test harness's output capture so every criterion line
/// shows up in a plain `cargo test` run.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

fn report(id: u32, title: &str, ok: bool, detail: impl AsRef<str>) {
    let line = format!("{} criterion {id} ({title}): {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
    emit(&line);
    assert!(ok, "{line}");
}

fn within(elapsed: Duration, limit: Duration) -> String {
    format!("{:.2?} (limit {:.0?})", elapsed, limit)
}

fn render_failures(r: &wiener_ecc::harness::ReproduceReport) -> String {
    r.runs
        .iter()
        .flat_map(|run| run.checks.iter().map(move |c| (run, c)))
        .map(|(run, c)| format!("{}[{}] {}={}/{}", run.report.universe, run.report.predicate, c.what, c.observed, c.expected))
        .collect::<Vec<_>>()
        .join("; ")
}

#[test]
fn criterion_01_interval_counts() {
    let start = Instant::now();
    let r = reproduce("interval-counts", &ReproduceOptions::default()).unwrap();
    let counts: Vec<u64> = r.runs.iter().map(|run| run.report.matches).collect();
    report(
        1,
        "interval irregular counts for n = 7..10",
        r.status == Status::Pass && counts == [1, 2, 13, 0],
        format!("counts {counts:?} in {:.2?}; {}", start.elapsed(), render_failures(&r)),
    );
}

#[test]
fn criterion_02_diameter_three_gap() {
    let start = Instant::now();
    let r = reproduce("diam3-gap", &ReproduceOptions::default()).unwrap();
    let total: u64 = r.runs.iter().map(|run| run.report.matches).sum();
    let examined: u64 = r.runs.iter().map(|run| run.report.examined).sum();
    report(
        2,
        "no diameter-3 graph of order <= 10 with C_ec > C_W",
        r.status == Status::Pass && total == 0,
        format!("{total} matches among {examined} graphs in {:.2?}", start.elapsed()),
    );
}

#[test]
fn criterion_03_figure_corpus() {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut expect_tr = |name: &str, g: &Graph, want: &[u64]| {
        let got = profile(g).unwrap().tr;
        if got != want {
            problems.push(format!("{name}: transmissions {got:?}, printed {want:?}"));
        }
    };
    // the branched tree: legs of lengths 2, 3, 1 at the center
    expect_tr("tree", &spider(&[2, 3, 1]).unwrap(), &[10, 13, 18, 11, 14, 19, 15]);
    expect_tr("interval 7", &NamedGraph::Interval7.graph(), &[7, 8, 9, 10, 11, 12, 13]);
    expect_tr("interval 8", &NamedGraph::Interval8.graph(), &[8, 9, 10, 11, 12, 13, 14, 15]);
    expect_tr(
        "indivisible 11",
        &NamedGraph::Indivisible11.graph(),
        &[18, 26, 22, 24, 20, 21, 17, 23, 19, 16, 14],
    );
    expect_tr("nested G", &spider(&[2, 2, 1]).unwrap(), &[7, 9, 13, 9, 13, 11]);
    expect_tr("nested H", &NamedGraph::PrismMinusRung.graph(), &[9, 7, 7, 7, 7, 9]);

    for (g, lo, hi) in [(NamedGraph::Interval7, 7, 13), (NamedGraph::Interval8, 8, 15)] {
        let p = profile(&g.graph()).unwrap();
        let c = classify(&g.graph()).unwrap();
        if !c.interval_irregular || p.tr_set.first() != Some(&lo) || p.tr_set.last() != Some(&hi) {
            problems.push(format!("{}: not interval irregular on [{lo}..{hi}]", g.name()));
        }
    }
    let c = classify(&NamedGraph::Indivisible11.graph()).unwrap();
    if !(c.transmission_indivisible && !c.interval_irregular) {
        problems.push("indivisible 11: classification".into());
    }
    let tree = classify(&spider(&[2, 3, 1]).unwrap()).unwrap();
    if !(tree.transmission_irregular && !tree.transmission_indivisible) {
        problems.push("tree: expected irregular but not indivisible".into());
    }
    report(
        3,
        "figure transmissions and classes",
        problems.is_empty() && start.elapsed() < Duration::from_secs(1),
        if problems.is_empty() { format!("6 graphs in {:.2?}", start.elapsed()) } else { problems.join("; ") },
    );
}

#[test]
fn criterion_04_family_formulas() {
    let mut problems = Vec::new();
    for d in 2..=10 {
        let p = profile(&hypercube_minus(d).unwrap()).unwrap();
        if p.c_w as i64 - p.c_ec as i64 != d as i64 - 2 {
            problems.push(format!("Q_{d} minus a vertex: C_W {} C_ec {}", p.c_w, p.c_ec));
        }
    }
    for k in 1..=20u64 {
        let p = profile(&z_graph(k as usize).unwrap()).unwrap();
        let tr = [(k + 1).pow(2) + k + 3, (k + 1).pow(2) + 3 * k + 5];
        let ec = [k as u32 + 1, k as u32 + 2, k as u32 + 3];
        if p.tr_set != tr || p.ec_set != ec {
            problems.push(format!("Z_{k}: Tr {:?} Ec {:?}", p.tr_set, p.ec_set));
        }
    }
    let z = z_graph(1).unwrap();
    let mut slowest = Duration::ZERO;
    for k in 0..=2u32 {
        let start = Instant::now();
        let p = profile(&cartesian_power(&z, 1 << k).unwrap()).unwrap();
        slowest = slowest.max(start.elapsed());
        if p.c_ec != (1 << (k + 1)) + 1 || p.c_w != (1 << k) + 1 {
            problems.push(format!("Z^{}: C_ec {} C_W {}", 1 << k, p.c_ec, p.c_w));
        }
    }
    let ok = problems.is_empty() && slowest < Duration::from_secs(30);
    report(
        4,
        "cube-minus, Z_k and Z powers",
        ok,
        if problems.is_empty() {
            format!("all formulas hold; Z^4 profile {}", within(slowest, Duration::from_secs(30)))
        } else {
            problems.join("; ")
        },
    );
}

#[test]
fn criterion_05_y_z_table() {
    let start = Instant::now();
    let diffs: Vec<i64> = (2..=5)
        .map(|k| {
            let p = profile(&cartesian_product(&y_graph(k).unwrap(), &z_graph(k).unwrap()).unwrap()).unwrap();
            p.c_ec as i64 - p.c_w as i64
        })
        .collect();
    let elapsed = start.elapsed();
    report(
        5,
        "C_ec - C_W of Y_k □ Z_k",
        diffs == [1, 0, 0, -2] && elapsed < Duration::from_secs(5),
        format!("differences {diffs:?} for k = 2..5 in {}", within(elapsed, Duration::from_secs(5))),
    );
}

fn suite_summary(r: &SuiteResult, ids: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for id in ids {
        match r.claims.iter().find(|c| c.claim == *id) {
            Some(c) => {
                ok &= c.status == Status::Pass && c.instances > 0;
                parts.push(match &c.witness {
                    Some(w) => format!("{id} {} on {} (witness {w})", c.status, c.instances),
                    None => format!("{id} {} on {}", c.status, c.instances),
                });
            }
            None => {
                ok = false;
                parts.push(format!("{id} missing"));
            }
        }
    }
    (ok, parts.join("; "))
}

#[test]
fn criterion_06_product_identities() {
    let start = Instant::now();
    let r = product_identity_suite(200, 8, DEFAULT_SEED).unwrap();
    let (ok, detail) = suite_summary(
        &r,
        &[
            "product.distance",
            "product.transmission",
            "product.ecc-complexity",
            "product.wiener-bounds",
            "product.wiener-lower",
        ],
    );
    let elapsed = start.elapsed();
    report(
        6,
        "product identities on 200 seeded pairs plus corpus",
        ok && elapsed < Duration::from_secs(60),
        format!("{detail}; {}", within(elapsed, Duration::from_secs(60))),
    );
}

/// The statement covers both directions: `C_ec <= C_W` for every tree, and
/// equality exactly for center-regular trees.
#[test]
fn criterion_07_tree_theorem() {
    let start = Instant::now();
    let r = tree_suite(14).unwrap();
    let (ok, detail) = suite_summary(
        &r,
        &["tree.ecc-le-wiener", "tree.center-regular-equality", "tree.equality-center-regular"],
    );
    let elapsed = start.elapsed();
    report(
        7,
        "trees of order <= 14: C_ec <= C_W, equality iff center-regular",
        ok && elapsed < Duration::from_secs(60),
        format!("{detail}; {}", within(elapsed, Duration::from_secs(60))),
    );
}

/// Isomorphism classes of connected graphs on `n` labelled vertices, by
/// marking every relabelling of each new edge set.
fn labelled_connected_classes(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    let slot = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(pairs.iter().map(|&(i, j)| slot(p[i], p[j])).collect::<Vec<_>>());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    let mut seen = vec![false; 1 << m];
    let mut classes = 0;
    for mask in 0..1usize << m {
        if seen[mask] {
            continue;
        }
        for map in &perms {
            let img = (0..m).filter(|e| mask >> e & 1 == 1).fold(0usize, |acc, e| acc | 1 << map[e]);
            seen[img] = true;
        }
        // connectivity by flood fill over the edge mask
        let mut reach = 1usize;
        loop {
            let mut grown = reach;
            for (e, &(i, j)) in pairs.iter().enumerate() {
                if mask >> e & 1 == 1 && (grown >> i & 1 == 1 || grown >> j & 1 == 1) {
                    grown |= 1 << i | 1 << j;
                }
            }
            if grown == reach {
                break;
            }
            reach = grown;
        }
        if reach.count_ones() as usize == n {
            classes += 1;
        }
    }
    classes
}

/// Free trees on `n` labelled vertices from Prüfer sequences, up to
/// isomorphism via sorted bracket strings rooted at the center.
fn labelled_tree_classes(n: usize) -> u64 {
    fn code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| code(adj, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    if n <= 2 {
        return 1;
    }
    let mut classes = HashSet::new();
    let total = n.pow(n as u32 - 2);
    for idx in 0..total {
        let seq: Vec<usize> = (0..n - 2).map(|i| idx / n.pow(i as u32) % n).collect();
        let mut degree = vec![1usize; n];
        for &x in &seq {
            degree[x] += 1;
        }
        let mut adj = vec![Vec::new(); n];
        for &x in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            adj[leaf].push(x);
            adj[x].push(leaf);
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        adj[rest[0]].push(rest[1]);
        adj[rest[1]].push(rest[0]);
        let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut left = n;
        while left > 2 {
            left -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in &adj[v] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        classes.insert(layer.iter().map(|&c| code(&adj, c, usize::MAX)).min().unwrap());
    }
    classes.len() as u64
}

#[test]
fn criterion_08_generator_counts() {
    let start = Instant::now();
    const CONNECTED: [u64; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];
    const TREES: [u64; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    let mut problems = Vec::new();
    for n in 1..=9 {
        let c = count(&GeneratorConfig::connected(n)).unwrap();
        if c != CONNECTED[n - 1] {
            problems.push(format!("connected n={n}: {c}"));
        }
        if n <= 7 && labelled_connected_classes(n) != c {
            problems.push(format!("connected n={n}: oracle disagrees"));
        }
    }
    for n in 1..=10 {
        let c = count(&GeneratorConfig::trees(n)).unwrap();
        if c != TREES[n - 1] {
            problems.push(format!("trees n={n}: {c}"));
        }
        if n <= 7 && labelled_tree_classes(n) != c {
            problems.push(format!("trees n={n}: oracle disagrees"));
        }
    }
    let elapsed = start.elapsed();
    report(
        8,
        "generator counts with labelled oracles for n <= 7",
        problems.is_empty() && elapsed < Duration::from_secs(120),
        if problems.is_empty() {
            format!("all counts match; {}", within(elapsed, Duration::from_secs(120)))
        } else {
            problems.join("; ")
        },
    );
}

#[test]
fn criterion_09_codec() {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut corpus = 0;
    for n in 1..=7 {
        for g in connected_graphs(&GeneratorConfig::connected(n)).unwrap() {
            corpus += 1;
            let s = encode_graph6_string(&g);
            if decode_graph6(s.as_bytes()).as_ref() != Ok(&g) {
                problems.push(format!("corpus {s}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=50);
        let p: f64 = rng.gen();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::new(n, &edges).unwrap();
        let s = encode_graph6_string(&g);
        if decode_graph6(s.as_bytes()).as_ref() != Ok(&g) {
            problems.push(format!("random {s}"));
        }
    }
    for (g, want) in [
        (Graph::empty(1), "@"),
        (Graph::new(2, &[(0, 1)]).unwrap(), "A_"),
        (Graph::empty(2), "A?"),
    ] {
        if encode_graph6_string(&g) != want || decode_graph6(want.as_bytes()).as_ref() != Ok(&g) {
            problems.push(format!("fixed record {want}"));
        }
    }
    let elapsed = start.elapsed();
    report(
        9,
        "graph6 round trip",
        problems.is_empty() && elapsed < Duration::from_secs(30),
        if problems.is_empty() {
            format!("{corpus} corpus graphs and 10000 random graphs; {}", within(elapsed, Duration::from_secs(30)))
        } else {
            problems.join("; ")
        },
    );
}

/// The order-11 tasks scan about a billion graphs, so they run only when
/// `WIENER_ECC_EXTENDED=1`. The cross-check between the generator and a
/// graph6 stream of the same universe always runs, at order 8.
#[test]
fn criterion_10_order_eleven() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("connected8.g6");
    let mut out = std::io::BufWriter::new(std::fs::File::create(&file).unwrap());
    for g in connected_graphs(&GeneratorConfig::connected(8)).unwrap() {
        writeln!(out, "{}", encode_graph6_string(&g)).unwrap();
    }
    out.into_inner().unwrap().sync_all().unwrap();
    let mut consistent = true;
    for pred in ["transmission-indivisible,!interval-irregular", "interval-irregular,biconnected"] {
        let generated = SearchTask {
            name: "cross".into(),
            universe: "connected:8".parse().unwrap(),
            predicate: pred.parse().unwrap(),
            collect: Collect { witnesses: true, histogram: Some(HistogramKey::Interval) },
        };
        let streamed = SearchTask { universe: Universe::Graph6File(file.clone()), ..generated.clone() };
        let a = run_search(&generated, &SearchOptions::default()).unwrap();
        let b = run_search(&streamed, &SearchOptions::default()).unwrap();
        consistent &= (a.examined, a.matches, &a.histogram, &a.witnesses) == (b.examined, b.matches, &b.histogram, &b.witnesses);
    }
    if std::env::var("WIENER_ECC_EXTENDED").as_deref() != Ok("1") {
        emit(&format!(
            "SKIP criterion 10 (order-11 reproductions): extended run disabled; generator and graph6 stream agree at order 8: {consistent}"
        ));
        assert!(consistent);
        return;
    }
    let opts = ReproduceOptions { extended: true, ..ReproduceOptions::default() };
    let reports = reproduce_many(&["indivisible-11", "interval-11-2conn"], &opts).unwrap();
    let ok = consistent && reports.iter().all(|r| r.status == Status::Pass);
    let detail = reports.iter().map(render_failures).collect::<Vec<_>>().join("; ");
    report(10, "order-11 reproductions", ok, detail);
}
