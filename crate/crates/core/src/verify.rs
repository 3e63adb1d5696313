//! Executable checks of the product identities, tree and diameter-two
//! statements, and family formulas, run over constructed, sampled and
//! enumerated graphs.
//!
//! Each claim counts the instances it was tested on. A failing claim keeps
//! the witness of its first failing instance in a fixed instance order, so
//! results do not depend on scheduling.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{arithmetic_step, classify_with, is_center_regular_tree, ud_pairs};
use crate::codec::encode_graph6_string;
use crate::construct::{
    bloom, cartesian_power, cartesian_product, center_regular_tree, complete, complete_minus_edge_list,
    complete_minus_edges, cycle, hypercube, hypercube_minus, identify, lexicographic_product, paw, path,
    spider, star, y_graph, z_graph, NamedGraph,
};
use crate::enumerate::{connected_graphs, trees, GeneratorConfig, MAX_CONNECTED_ORDER, MAX_TREE_ORDER};
use crate::error::{GraphError, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::harness::Status;
use crate::invariants::{profile, InvariantProfile};

pub const DEFAULT_SEED: u64 = 20_200_601;
pub const DEFAULT_PAIR_BUDGET: usize = 200;
pub const DEFAULT_MAX_FACTOR_ORDER: usize = 8;
pub const DEFAULT_TREE_ORDER: usize = 14;
pub const DEFAULT_DIAM2_ORDER: usize = 9;

/// Largest factor order accepted for random product pairs.
pub const MAX_FACTOR_ORDER: usize = 10;
/// Largest order accepted by [`diam2_suite`].
pub const MAX_DIAM2_ORDER: usize = 9;

const CHUNKS: usize = 32;

const CLAIMS: &[(&str, &str)] = &[
    ("product.distance", "distance in G □ H is the sum of the factor distances"),
    ("product.transmission", "Tr(g,h) = n(H) Tr(g) + n(G) Tr(h) in G □ H"),
    ("product.ecc-complexity", "C_ec(G □ H) = C_ec(G) + C_ec(H) - 1"),
    ("product.wiener-bounds", "max(C_W(G), C_W(H)) <= C_W(G □ H) <= C_W(G) C_W(H)"),
    ("product.wiener-lower", "C_W(G □ H) >= C_W(G) + C_W(H) - 1"),
    ("power.ecc-complexity", "C_ec(G^(2^k)) = 2^k C_ec(G) - 2^k + 1"),
    ("equality.coprime", "one factor transmission indivisible and coprime orders give C_W(G □ H) = C_W(G) C_W(H)"),
    ("equality.prime-orders", "a transmission indivisible G times graphs of prime order above n(G) attains the upper bound"),
    ("equality.arithmetic-nested", "equal-order arithmetic G, H with equal steps and Tr(H) in Tr(G) give C_W(G □ H) = C_W(G) + C_W(H) - 1"),
    ("equality.arithmetic-power", "arithmetic G gives C_W(G^(2^k)) = 2^k C_W(G) - 2^k + 1"),
    ("equality.arithmetic-separated", "arithmetic G, H with steps a, b and n(H)(C_W(G)-1)a < n(G)b give C_W(G □ H) = C_W(G) C_W(H)"),
    ("equality.regular-factor", "C_W(H) = 1 gives C_W(G □ H) = C_W(G)"),
    ("tree.ecc-le-wiener", "every tree has C_ec <= C_W"),
    ("tree.center-regular-equality", "a center-regular tree has C_ec = C_W"),
    ("tree.equality-center-regular", "a tree with C_ec = C_W is center-regular"),
    ("diam2.transmission-degree", "a vertex of eccentricity at most 2 has Tr = 2n - 2 - deg"),
    ("diam2.ecc-le-wiener", "diameter 2 gives C_ec <= C_W"),
    ("diam2.regular-self-centered", "regular and 2-self-centered gives C_W = C_ec = 1"),
    ("diam2.bidegreed", "bidegreed, not self-centered, diameter 2 gives C_W = C_ec = 2"),
    ("diam2.examples", "C_5, the paw and K_{1,4} have the documented transmissions and eccentricities"),
    ("family.cube-minus", "C_W(Q_d minus a vertex) - C_ec(Q_d minus a vertex) = d - 2"),
    ("family.cycle-transmission", "every vertex of C_n has transmission floor(n^2/4)"),
    ("family.z", "Z_k has Tr = {(k+1)^2+k+3, (k+1)^2+3k+5} and Ec = {k+1, k+2, k+3}"),
    ("family.z-power", "C_ec(Z^(2^k)) = 2^(k+1) + 1 and C_W(Z^(2^k)) = 2^k + 1"),
    ("family.hypercube-factor", "C_ec(G) > C_W(G) persists in G □ Q_d"),
    ("family.complete-minus", "a regular or bidegreed K_n minus k <= n/2 edges has C_W = C_ec"),
    ("family.bloom", "k pendants on every vertex of a vertex-transitive graph give C_W = C_ec = 2"),
    ("family.cartesian-host", "hosts used with the regular-factor product are self-centered and transmission regular"),
    ("family.cartesian-equal", "C_W(G) = C_ec(G) and a self-centered transmission regular H give C_ec(G □ H) = C_W(G □ H) = C_W(G)"),
    ("family.lexicographic-path", "C_W(P_n ∘ H) = C_ec(P_n ∘ H) = ceil(n/2) for regular H and n >= 4"),
    ("family.ud-attach", "center-regular trees glued at a UD pair of equal transmission keep C_ec > C_W"),
    ("family.y", "C_ec(Y_k) > C_W(Y_k)"),
    ("family.y-z-table", "C_ec(Y_k □ Z_k) - C_W(Y_k □ Z_k) is 1, 0, 0, -2 for k = 2, 3, 4, 5"),
];

fn describe(claim: &str) -> &'static str {
    CLAIMS
        .iter()
        .find(|(c, _)| *c == claim)
        .map(|(_, d)| *d)
        .unwrap_or_else(|| panic!("claim '{claim}' has no description"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub description: String,
    pub instances: u64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Sorted by claim id.
    pub claims: Vec<ClaimResult>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status == Status::Pass)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", if self.passed() { "PASS" } else { "FAIL" }, self.suite);
        for c in &self.claims {
            out.push_str(&format!("  {} {} ({} instances): {}\n", c.status, c.claim, c.instances, c.description));
            if let Some(w) = &c.witness {
                out.push_str(&format!("      witness: {w}\n"));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
struct Acc {
    instances: u64,
    failure: Option<(u64, String)>,
}

/// Per-claim instance counts and earliest failure.
#[derive(Clone, Debug, Default)]
struct Ledger {
    claims: BTreeMap<&'static str, Acc>,
}

impl Ledger {
    /// `key` orders instances; the smallest failing key supplies the witness.
    fn record(&mut self, claim: &'static str, key: u64, ok: bool, witness: impl FnOnce() -> String) {
        let acc = self.claims.entry(claim).or_default();
        acc.instances += 1;
        if !ok && acc.failure.as_ref().is_none_or(|(k, _)| key < *k) {
            acc.failure = Some((key, witness()));
        }
    }

    fn merge(mut self, other: Ledger) -> Ledger {
        for (claim, acc) in other.claims {
            let mine = self.claims.entry(claim).or_default();
            mine.instances += acc.instances;
            if let Some((k, w)) = acc.failure {
                if mine.failure.as_ref().is_none_or(|(mk, _)| k < *mk) {
                    mine.failure = Some((k, w));
                }
            }
        }
        self
    }

    fn finish(self, suite: &str, seed: Option<u64>) -> SuiteResult {
        let claims = self
            .claims
            .into_iter()
            .map(|(claim, acc)| ClaimResult {
                claim: claim.to_string(),
                description: describe(claim).to_string(),
                instances: acc.instances,
                status: if acc.failure.is_some() { Status::Fail } else { Status::Pass },
                witness: acc.failure.map(|(_, w)| w),
            })
            .collect();
        SuiteResult { suite: suite.to_string(), seed, claims }
    }
}

fn g6(g: &Graph) -> String {
    encode_graph6_string(g)
}

fn pair_witness(g: &Graph, h: &Graph) -> String {
    format!("G={} H={}", g6(g), g6(h))
}

/// Uniformly random labelled spanning tree shape plus independent extra
/// edges, so the result is always connected.
fn random_connected(rng: &mut ChaCha8Rng, max_order: usize) -> Graph {
    let n = rng.gen_range(1..=max_order);
    let p: f64 = rng.gen_range(0.0..0.7);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        b.add_edge(perm[i], perm[j]);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// Small connected graphs used as product factors in every suite run.
pub fn factor_corpus() -> Vec<Graph> {
    let mut out = vec![
        complete(1).unwrap(),
        complete(2).unwrap(),
        path(3).unwrap(),
        path(4).unwrap(),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        complete(4).unwrap(),
        paw(),
        star(3).unwrap(),
        z_graph(1).unwrap(),
        spider(&[2, 3, 1]).unwrap(),
        spider(&[2, 2, 1]).unwrap(),
        NamedGraph::PrismMinusRung.graph(),
        NamedGraph::Interval7.graph(),
    ];
    out.push(NamedGraph::Interval8.graph());
    out
}

fn check_product(led: &mut Ledger, key: u64, g: &Graph, h: &Graph) -> Result<()> {
    let (pg, ph) = (profile(g)?, profile(h)?);
    let prod = cartesian_product(g, h)?;
    let pp = profile(&prod)?;
    let (ng, nh) = (g.order(), h.order());
    let (dg, dh, dp) = (g.all_pairs_distances()?, h.all_pairs_distances()?, prod.all_pairs_distances()?);
    let mut additive = true;
    let mut tr_ok = true;
    for a in 0..ng {
        for x in 0..nh {
            let u = a * nh + x;
            tr_ok &= pp.tr[u] == nh as u64 * pg.tr[a] + ng as u64 * ph.tr[x];
            for b in 0..ng {
                for y in 0..nh {
                    additive &= dp.get(u, b * nh + y) == dg.get(a, b) + dh.get(x, y);
                }
            }
        }
    }
    let w = || pair_witness(g, h);
    led.record("product.distance", key, additive, w);
    led.record("product.transmission", key, tr_ok, w);
    led.record("product.ecc-complexity", key, pp.c_ec == pg.c_ec + ph.c_ec - 1, w);
    led.record(
        "product.wiener-bounds",
        key,
        pg.c_w.max(ph.c_w) <= pp.c_w && pp.c_w <= pg.c_w * ph.c_w,
        w,
    );
    led.record("product.wiener-lower", key, pp.c_w + 1 >= pg.c_w + ph.c_w, w);
    Ok(())
}

/// Product identities and bounds on `pair_budget` seeded random connected
/// pairs with factors of order at most `max_order`, plus all ordered pairs
/// of [`factor_corpus`] and squares and fourth powers of its members.
pub fn product_identity_suite(pair_budget: usize, max_order: usize, seed: u64) -> Result<SuiteResult> {
    if max_order == 0 || max_order > MAX_FACTOR_ORDER {
        return Err(GraphError::BadParameter(format!(
            "factor order {max_order} outside 1..={MAX_FACTOR_ORDER}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(Graph, Graph)> = (0..pair_budget)
        .map(|_| (random_connected(&mut rng, max_order), random_connected(&mut rng, max_order)))
        .collect();
    let corpus = factor_corpus();
    for g in &corpus {
        for h in &corpus {
            pairs.push((g.clone(), h.clone()));
        }
    }
    let led = pairs
        .par_iter()
        .enumerate()
        .map(|(i, (g, h))| {
            let mut led = Ledger::default();
            check_product(&mut led, i as u64, g, h)?;
            Ok(led)
        })
        .try_reduce(Ledger::default, |a, b| Ok(a.merge(b)))?;
    let powers = corpus
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut led = Ledger::default();
            let base = profile(g)?;
            for k in 1..=2u32 {
                let m = 1usize << k;
                if g.order().pow(m as u32) > 1296 {
                    break;
                }
                let p = profile(&cartesian_power(g, m)?)?;
                let want = m * base.c_ec + 1 - m;
                led.record("power.ecc-complexity", (i as u64) << 8 | k as u64, p.c_ec == want, || {
                    format!("G={} k={k}", g6(g))
                });
            }
            Ok(led)
        })
        .try_reduce(Ledger::default, |a, b| Ok(a.merge(b)))?;
    Ok(led.merge(powers).finish("product-identity", Some(seed)))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Connected graphs of order `lo..=hi` whose transmission set is an
/// arithmetic progression with at least two terms.
fn arithmetic_pool(lo: usize, hi: usize) -> Result<Vec<(Graph, InvariantProfile, u64)>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        for g in connected_graphs(&GeneratorConfig::connected(n))? {
            let p = profile(&g)?;
            if let Some(step) = arithmetic_step(&p.tr_set).filter(|_| p.c_w >= 2) {
                out.push((g, p, step));
            }
        }
    }
    Ok(out)
}

/// Instances of the equality cases of the Wiener complexity bounds for
/// Cartesian products. Each instance has its hypothesis checked first;
/// pairs that fail it are not counted.
pub fn product_equality_suite() -> Result<SuiteResult> {
    let mut led = Ledger::default();
    let mut key = 0u64;
    let mut next = || {
        key += 1;
        key
    };
    let indivisible: Vec<Graph> =
        [NamedGraph::Interval7, NamedGraph::Interval8, NamedGraph::Indivisible11].map(|g| g.graph()).to_vec();
    let mut hosts = Vec::new();
    for m in 2..=13 {
        hosts.push(path(m)?);
        hosts.push(star(m - 1)?);
        if m >= 3 {
            hosts.push(cycle(m)?);
            hosts.push(complete(m)?);
        }
    }
    hosts.push(z_graph(1)?);
    hosts.push(z_graph(2)?);
    hosts.push(hypercube(3)?);
    for g in &indivisible {
        let pg = profile(g)?;
        let cg = classify_with(g, &pg)?;
        for h in &hosts {
            let ph = profile(h)?;
            let ch = classify_with(h, &ph)?;
            if gcd(g.order(), h.order()) != 1 || !(cg.transmission_indivisible || ch.transmission_indivisible) {
                continue;
            }
            let pp = profile(&cartesian_product(g, h)?)?;
            let k = next();
            led.record("equality.coprime", k, pp.c_w == pg.c_w * ph.c_w, || pair_witness(g, h));
            if is_prime(h.order()) && h.order() > g.order() && cg.transmission_indivisible {
                led.record("equality.prime-orders", k, pp.c_w == pg.c_w * ph.c_w, || pair_witness(g, h));
            }
        }
    }

    // nested arithmetic transmission sets of equal order
    let pool = arithmetic_pool(2, 6)?;
    let mut documented = vec![(spider(&[2, 2, 1])?, NamedGraph::PrismMinusRung.graph())];
    for (g, pg, a) in &pool {
        for (h, ph, b) in &pool {
            if g.order() == h.order() && a == b && ph.tr_set.iter().all(|t| pg.tr_set.binary_search(t).is_ok()) {
                documented.push((g.clone(), h.clone()));
            }
        }
    }
    for (g, h) in &documented {
        let (pg, ph) = (profile(g)?, profile(h)?);
        let same_step = arithmetic_step(&pg.tr_set).is_some()
            && arithmetic_step(&pg.tr_set) == arithmetic_step(&ph.tr_set);
        let nested = ph.tr_set.iter().all(|t| pg.tr_set.binary_search(t).is_ok());
        if !(same_step && nested && g.order() == h.order()) {
            continue;
        }
        let pp = profile(&cartesian_product(g, h)?)?;
        led.record("equality.arithmetic-nested", next(), pp.c_w == pg.c_w + ph.c_w - 1, || pair_witness(g, h));
    }

    // steps far enough apart that the blocks of the product do not overlap
    let mut separated: Vec<(&Graph, &InvariantProfile, u64)> = pool.iter().map(|(g, p, s)| (g, p, *s)).collect();
    let interval: Vec<(Graph, InvariantProfile)> = indivisible[..2]
        .iter()
        .map(|g| Ok((g.clone(), profile(g)?)))
        .collect::<Result<_>>()?;
    separated.extend(interval.iter().map(|(g, p)| (g, p, 1)));
    for &(g, pg, a) in &separated {
        for &(h, ph, b) in &separated {
            let lhs = h.order() as u64 * (pg.c_w as u64 - 1) * a;
            if lhs >= g.order() as u64 * b {
                continue;
            }
            let pp = profile(&cartesian_product(g, h)?)?;
            led.record("equality.arithmetic-separated", next(), pp.c_w == pg.c_w * ph.c_w, || pair_witness(g, h));
        }
    }

    let powers = [
        z_graph(1)?,
        path(3)?,
        spider(&[2, 2, 1])?,
        NamedGraph::PrismMinusRung.graph(),
        NamedGraph::Interval7.graph(),
        NamedGraph::Interval8.graph(),
    ];
    for g in &powers {
        let pg = profile(g)?;
        if arithmetic_step(&pg.tr_set).is_none() && pg.c_w > 1 {
            continue;
        }
        for k in 0..=2u32 {
            let m = 1usize << k;
            if g.order().pow(m as u32) > 4096 {
                break;
            }
            let p = profile(&cartesian_power(g, m)?)?;
            led.record("equality.arithmetic-power", next(), p.c_w == m * pg.c_w + 1 - m, || {
                format!("G={} k={k}", g6(g))
            });
        }
    }

    let regular = [cycle(4)?, cycle(5)?, complete(3)?, hypercube(3)?, cycle(6)?];
    for g in factor_corpus() {
        let pg = profile(&g)?;
        for h in &regular {
            let ph = profile(h)?;
            if ph.c_w != 1 {
                continue;
            }
            let pp = profile(&cartesian_product(&g, h)?)?;
            led.record("equality.regular-factor", next(), pp.c_w == pg.c_w, || pair_witness(&g, h));
        }
    }
    Ok(led.finish("product-equality", None))
}

/// Every free tree of order `1..=max_n`.
pub fn tree_suite(max_n: usize) -> Result<SuiteResult> {
    if max_n > MAX_TREE_ORDER {
        return Err(GraphError::BadParameter(format!("tree order {max_n} above {MAX_TREE_ORDER}")));
    }
    let jobs: Vec<(usize, usize)> = (1..=max_n).flat_map(|n| (0..CHUNKS).map(move |c| (n, c))).collect();
    let led = jobs
        .par_iter()
        .map(|&(n, c)| {
            let mut led = Ledger::default();
            let cfg = GeneratorConfig::trees(n);
            let cfg = cfg.with_shard(cfg.shard.subdivide(c, CHUNKS));
            for (i, t) in trees(&cfg)?.enumerate() {
                let key = (n as u64) << 48 | (c as u64) << 40 | i as u64;
                let p = profile(&t)?;
                let w = || g6(&t);
                led.record("tree.ecc-le-wiener", key, p.c_ec <= p.c_w, w);
                let regular = is_center_regular_tree(&t)?;
                if regular {
                    led.record("tree.center-regular-equality", key, p.c_ec == p.c_w, w);
                }
                if p.c_ec == p.c_w {
                    led.record("tree.equality-center-regular", key, regular, w);
                }
            }
            Ok(led)
        })
        .try_reduce(Ledger::default, |a, b| Ok(a.merge(b)))?;
    Ok(led.finish("tree", None))
}

/// Every connected graph of diameter 2 and order `3..=max_n`, plus the
/// small documented examples.
pub fn diam2_suite(max_n: usize) -> Result<SuiteResult> {
    if max_n > MAX_DIAM2_ORDER.min(MAX_CONNECTED_ORDER) {
        return Err(GraphError::BadParameter(format!("order {max_n} above {MAX_DIAM2_ORDER}")));
    }
    let jobs: Vec<(usize, usize)> = (3..=max_n).flat_map(|n| (0..CHUNKS).map(move |c| (n, c))).collect();
    let mut led = jobs
        .par_iter()
        .map(|&(n, c)| {
            let mut led = Ledger::default();
            let cfg = GeneratorConfig::connected(n);
            let mut gen = connected_graphs(&cfg.with_shard(cfg.shard.subdivide(c, CHUNKS)))?;
            let (mut tr, mut ec) = (vec![0u64; n], vec![0u32; n]);
            let mut i = 0u64;
            while let Some(s) = gen.next_small() {
                i += 1;
                if !s.tr_ec(&mut tr, &mut ec) || ec.iter().max() != Some(&2) {
                    continue;
                }
                let key = (n as u64) << 48 | (c as u64) << 40 | i;
                let w = || g6(&s.to_graph());
                let formula = (0..n).all(|v| ec[v] > 2 || tr[v] == 2 * n as u64 - 2 - s.degree(v) as u64);
                led.record("diam2.transmission-degree", key, formula, w);
                let mut trs = tr.clone();
                trs.sort_unstable();
                trs.dedup();
                let c_w = trs.len();
                let self_centered = ec.iter().all(|&e| e == 2);
                let c_ec = if self_centered { 1 } else { 2 };
                led.record("diam2.ecc-le-wiener", key, c_ec <= c_w, w);
                let mut degs: Vec<usize> = (0..n).map(|v| s.degree(v)).collect();
                degs.sort_unstable();
                degs.dedup();
                if degs.len() == 1 && self_centered {
                    led.record("diam2.regular-self-centered", key, c_w == 1, w);
                }
                if degs.len() == 2 && !self_centered {
                    led.record("diam2.bidegreed", key, c_w == 2 && c_ec == 2, w);
                }
            }
            Ok(led)
        })
        .try_reduce(Ledger::default, |a, b| Ok(a.merge(b)))?;
    let c5 = profile(&cycle(5)?)?;
    led.record("diam2.examples", 0, c5.c_w == 1 && c5.c_ec == 1, || "C5".into());
    let p = profile(&paw())?;
    led.record("diam2.examples", 1, p.tr_set == [3, 4, 5] && p.ec_set == [1, 2], || "paw".into());
    let s = profile(&star(4)?)?;
    led.record("diam2.examples", 2, s.c_w == 2 && s.c_ec == 2, || "K_{1,4}".into());
    Ok(led.finish("diam2", None))
}

/// Each `k`-subset of `0..m`, in lexicographic order.
fn subsets(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return;
    }
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn family_suite() -> Result<SuiteResult> {
    let mut led = Ledger::default();

    let cubes: Vec<Ledger> = (2..=10usize)
        .into_par_iter()
        .map(|d| {
            let mut l = Ledger::default();
            let p = profile(&hypercube_minus(d)?)?;
            l.record("family.cube-minus", d as u64, p.c_w as i64 - p.c_ec as i64 == d as i64 - 2, || {
                format!("d={d} C_W={} C_ec={}", p.c_w, p.c_ec)
            });
            Ok(l)
        })
        .collect::<Result<_>>()?;
    for l in cubes {
        led = led.merge(l);
    }

    for n in 3..=40usize {
        let p = profile(&cycle(n)?)?;
        led.record("family.cycle-transmission", n as u64, p.tr_set == [(n * n / 4) as u64], || format!("C{n}"));
    }

    for k in 1..=20usize {
        let p = profile(&z_graph(k)?)?;
        let k64 = k as u64;
        let ok = p.tr_set == [(k64 + 1).pow(2) + k64 + 3, (k64 + 1).pow(2) + 3 * k64 + 5]
            && p.ec_set == [k as u32 + 1, k as u32 + 2, k as u32 + 3];
        led.record("family.z", k64, ok, || format!("Z_{k}: Tr {:?} Ec {:?}", p.tr_set, p.ec_set));
    }

    let z = z_graph(1)?;
    for k in 0..=2u32 {
        let m = 1usize << k;
        let p = profile(&cartesian_power(&z, m)?)?;
        let ok = p.c_ec == (1 << (k + 1)) + 1 && p.c_w == (1 << k) + 1;
        led.record("family.z-power", k as u64, ok, || format!("k={k} C_ec={} C_W={}", p.c_ec, p.c_w));
    }

    let gaps = [z_graph(1)?, z_graph(2)?, z_graph(3)?, y_graph(2)?, y_graph(3)?];
    for (i, g) in gaps.iter().enumerate() {
        let pg = profile(g)?;
        if pg.c_ec <= pg.c_w {
            continue;
        }
        for d in 1..=3usize {
            let p = profile(&cartesian_product(g, &hypercube(d)?)?)?;
            led.record("family.hypercube-factor", (i * 4 + d) as u64, p.c_ec > p.c_w, || {
                format!("G={} d={d}", g6(g))
            });
        }
    }

    // every regular or bidegreed K_n minus k edges for small n, and the
    // matching removals for larger n
    let mut key = 0u64;
    for n in 3..=8usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for k in 1..=n / 2 {
            subsets(pairs.len(), k, |pick| {
                let removed: Vec<_> = pick.iter().map(|&i| pairs[i]).collect();
                let Ok(g) = complete_minus_edge_list(n, &removed) else { return };
                let mut degs = g.degrees();
                degs.sort_unstable();
                degs.dedup();
                if degs.len() > 2 {
                    return;
                }
                key += 1;
                let p = profile(&g).expect("connected");
                led.record("family.complete-minus", key, p.c_w == p.c_ec, || g6(&g));
            });
        }
    }
    for n in 9..=14usize {
        for k in 1..=n / 2 {
            let g = complete_minus_edges(n, k)?;
            let p = profile(&g)?;
            key += 1;
            led.record("family.complete-minus", key, p.c_w == p.c_ec, || g6(&g));
        }
    }

    let mut hosts: Vec<Graph> = (3..=10).map(cycle).collect::<Result<_>>()?;
    hosts.extend((2..=8).map(complete).collect::<Result<Vec<_>>>()?);
    hosts.push(hypercube(3)?);
    for (i, h) in hosts.iter().enumerate() {
        for k in 1..=3usize {
            let p = profile(&bloom(h, k)?)?;
            led.record("family.bloom", (i * 4 + k) as u64, p.c_w == 2 && p.c_ec == 2, || {
                format!("host={} k={k}", g6(h))
            });
        }
    }

    let cart_hosts = [cycle(3)?, cycle(4)?, cycle(5)?, cycle(6)?, complete(4)?, hypercube(3)?];
    let equal_graphs = [
        path(4)?,
        path(5)?,
        star(4)?,
        center_regular_tree(&[3, 2], false)?,
        center_regular_tree(&[2, 2], true)?,
        complete_minus_edges(6, 2)?,
        paw(),
    ];
    for (j, h) in cart_hosts.iter().enumerate() {
        let ph = profile(h)?;
        led.record("family.cartesian-host", j as u64, ph.c_w == 1 && ph.c_ec == 1, || g6(h));
        for (i, g) in equal_graphs.iter().enumerate() {
            let pg = profile(g)?;
            if pg.c_w != pg.c_ec {
                continue;
            }
            let p = profile(&cartesian_product(g, h)?)?;
            led.record("family.cartesian-equal", (j * 16 + i) as u64, p.c_w == pg.c_w && p.c_ec == pg.c_w, || {
                pair_witness(g, h)
            });
        }
    }

    let lex_factors = [complete(1)?, cycle(3)?, cycle(4)?, complete(4)?];
    for n in 4..=9usize {
        for (j, h) in lex_factors.iter().enumerate() {
            let p = profile(&lexicographic_product(&path(n)?, h)?)?;
            let want = n.div_ceil(2);
            led.record("family.lexicographic-path", (n * 8 + j) as u64, p.c_w == want && p.c_ec == want, || {
                format!("n={n} H={}", g6(h))
            });
        }
    }

    let bases = [z_graph(1)?, z_graph(2)?];
    let tree_shapes: [&[usize]; 4] = [&[2], &[3], &[2, 1], &[2, 2]];
    for (i, g0) in bases.iter().enumerate() {
        let p0 = profile(g0)?;
        let Some(&(v, v2)) = ud_pairs(g0)?.iter().find(|&&(a, b)| p0.tr[a] == p0.tr[b]) else { continue };
        if p0.c_ec <= p0.c_w {
            continue;
        }
        for (j, levels) in tree_shapes.iter().enumerate() {
            let t = center_regular_tree(levels, false)?;
            let pt = profile(&t)?;
            if pt.center != [0] || !is_center_regular_tree(&t)? {
                continue;
            }
            let once = identify(g0, v, &t, 0)?;
            let g = identify(&once, v2, &t, 0)?;
            let p = profile(&g)?;
            led.record("family.ud-attach", (i * 8 + j) as u64, p.c_ec > p.c_w, || {
                format!("G0={} T={}", g6(g0), g6(&t))
            });
        }
    }

    for k in 1..=20usize {
        let p = profile(&y_graph(k)?)?;
        led.record("family.y", k as u64, p.c_ec > p.c_w, || format!("Y_{k}"));
    }

    for (k, want) in [(2usize, 1i64), (3, 0), (4, 0), (5, -2)] {
        let p = profile(&cartesian_product(&y_graph(k)?, &z_graph(k)?)?)?;
        let got = p.c_ec as i64 - p.c_w as i64;
        led.record("family.y-z-table", k as u64, got == want, || format!("k={k} difference {got}"));
    }

    Ok(led.finish("family", None))
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 5] = ["product-identity", "product-equality", "tree", "diam2", "family"];

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteResult> {
    match name {
        "product-identity" => product_identity_suite(DEFAULT_PAIR_BUDGET, DEFAULT_MAX_FACTOR_ORDER, seed),
        "product-equality" => product_equality_suite(),
        "tree" => tree_suite(DEFAULT_TREE_ORDER),
        "diam2" => diam2_suite(DEFAULT_DIAM2_ORDER),
        "family" => family_suite(),
        _ => Err(GraphError::BadParameter(format!(
            "unknown suite '{name}'; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Every suite at its default size.
pub fn all(seed: u64) -> Result<Vec<SuiteResult>> {
    SUITES.iter().map(|s| run_suite(s, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claim<'a>(r: &'a SuiteResult, id: &str) -> &'a ClaimResult {
        r.claims.iter().find(|c| c.claim == id).unwrap_or_else(|| panic!("no claim {id}"))
    }

    fn assert_all_pass(r: &SuiteResult) {
        for c in &r.claims {
            assert_eq!(c.status, Status::Pass, "{} failed: {:?}", c.claim, c.witness);
            assert!(c.instances > 0, "{} never instantiated", c.claim);
        }
    }

    #[test]
    fn every_claim_has_a_description() {
        for (id, _) in CLAIMS {
            assert_eq!(CLAIMS.iter().filter(|(c, _)| c == id).count(), 1);
        }
    }

    #[test]
    fn ledger_keeps_the_earliest_failure() {
        let mut a = Ledger::default();
        a.record("tree.ecc-le-wiener", 5, false, || "five".into());
        a.record("tree.ecc-le-wiener", 9, false, || "nine".into());
        let mut b = Ledger::default();
        b.record("tree.ecc-le-wiener", 2, false, || "two".into());
        b.record("tree.ecc-le-wiener", 3, true, || unreachable!());
        let r = b.merge(a).finish("t", None);
        assert_eq!(r.claims[0].instances, 4);
        assert_eq!(r.claims[0].witness.as_deref(), Some("two"));
        assert!(!r.passed());
    }

    #[test]
    fn product_identities_hold_and_are_seeded() {
        let r = product_identity_suite(40, 6, 7).unwrap();
        assert_all_pass(&r);
        assert_eq!(r, product_identity_suite(40, 6, 7).unwrap());
        assert_eq!(claim(&r, "product.distance").instances, 40 + 15 * 15);
        assert!(product_identity_suite(1, 11, 0).is_err());
    }

    #[test]
    fn random_graphs_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(random_connected(&mut rng, 9).is_connected().unwrap());
        }
    }

    #[test]
    fn product_equalities() {
        let r = product_equality_suite().unwrap();
        assert_all_pass(&r);
        assert!(claim(&r, "equality.arithmetic-separated").instances >= 10);
        assert!(claim(&r, "equality.prime-orders").instances >= 3);
    }

    #[test]
    fn trees_up_to_ten() {
        let r = tree_suite(10).unwrap();
        assert_eq!(claim(&r, "tree.ecc-le-wiener").instances, 201);
        assert_eq!(claim(&r, "tree.ecc-le-wiener").status, Status::Pass);
        assert_eq!(claim(&r, "tree.center-regular-equality").status, Status::Pass);
        // the converse fails: three legs of lengths 3, 3, 1 give
        // Tr = {13, 15, 19, 25} and Ec = {3, 4, 5, 6}, yet the center's
        // neighbours have degrees 2, 2, 1
        let converse = claim(&r, "tree.equality-center-regular");
        assert_eq!(converse.status, Status::Fail);
        let w = crate::codec::decode_graph6(converse.witness.as_ref().unwrap().as_bytes()).unwrap();
        let spider = spider(&[3, 3, 1]).unwrap();
        assert_eq!(
            crate::enumerate::canonical_form(&w).unwrap(),
            crate::enumerate::canonical_form(&spider).unwrap()
        );
    }

    #[test]
    fn diameter_two_up_to_seven() {
        let r = diam2_suite(7).unwrap();
        assert_all_pass(&r);
        assert!(diam2_suite(10).is_err());
    }

    #[test]
    fn families() {
        assert_all_pass(&family_suite().unwrap());
    }

    #[test]
    fn subset_enumeration() {
        let mut seen = Vec::new();
        subsets(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }
}
