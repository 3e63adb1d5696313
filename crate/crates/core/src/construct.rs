//! Graph families and graph operations.
//!
//! Vertex layouts are fixed so that witnesses can be reproduced:
//!
//! * products index the pair `(g, h)` as `g * n(H) + h`;
//! * `join` and `disjoint_union` put the vertices of the first graph first;
//! * `bloom` keeps the host on `0..n` and gives the `j`-th pendant of host
//!   vertex `v` the index `n + v * k + j`;
//! * `identify` keeps the indices of `A` and appends the vertices of `B`
//!   other than `b` in increasing order.

use std::fmt;
use std::str::FromStr;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, GraphBuilder};

/// Largest order any builder in this module will produce.
pub const MAX_ORDER: usize = 1 << 14;

fn check_order(order: Option<usize>) -> Result<usize> {
    match order {
        Some(n) if n <= MAX_ORDER => Ok(n),
        Some(n) => Err(GraphError::TooLarge { order: n, cap: MAX_ORDER }),
        None => Err(GraphError::TooLarge { order: usize::MAX, cap: MAX_ORDER }),
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let n = check_order(ng.checked_mul(nh))?;
    let mut b = GraphBuilder::new(n);
    for (x, y) in g.edges() {
        for j in 0..nh {
            b.add_edge(x * nh + j, y * nh + j);
        }
    }
    for i in 0..ng {
        for (x, y) in h.edges() {
            b.add_edge(i * nh + x, i * nh + y);
        }
    }
    Ok(b.build())
}

/// `G^m` with respect to the Cartesian product; `G^1 = G`.
pub fn cartesian_power(g: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(GraphError::BadParameter("power must be at least 1".into()));
    }
    let mut order = Some(g.order());
    for _ in 1..m {
        order = order.and_then(|o| o.checked_mul(g.order()));
    }
    check_order(order)?;
    let mut out = g.clone();
    for _ in 1..m {
        out = cartesian_product(&out, g)?;
    }
    Ok(out)
}

pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let n = check_order(ng.checked_mul(nh))?;
    let mut b = GraphBuilder::new(n);
    for (x, y) in g.edges() {
        for i in 0..nh {
            for j in 0..nh {
                b.add_edge(x * nh + i, y * nh + j);
            }
        }
    }
    for x in 0..ng {
        for (i, j) in h.edges() {
            b.add_edge(x * nh + i, x * nh + j);
        }
    }
    Ok(b.build())
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let ng = g.order();
    let n = check_order(ng.checked_add(h.order()))?;
    let mut b = GraphBuilder::new(n);
    for (x, y) in g.edges() {
        b.add_edge(x, y);
    }
    for (x, y) in h.edges() {
        b.add_edge(ng + x, ng + y);
    }
    Ok(b.build())
}

pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let u = disjoint_union(g, h)?;
    let ng = g.order();
    let mut b = GraphBuilder::new(u.order());
    for (x, y) in u.edges() {
        b.add_edge(x, y);
    }
    for x in 0..ng {
        for y in 0..h.order() {
            b.add_edge(x, ng + y);
        }
    }
    Ok(b.build())
}

/// Attaches `k` pendant vertices to every vertex of `g`.
pub fn bloom(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(GraphError::BadParameter("bloom needs k >= 1".into()));
    }
    let ng = g.order();
    let n = check_order(k.checked_add(1).and_then(|m| m.checked_mul(ng)))?;
    let mut b = GraphBuilder::new(n);
    for (x, y) in g.edges() {
        b.add_edge(x, y);
    }
    for v in 0..ng {
        for j in 0..k {
            b.add_edge(v, ng + v * k + j);
        }
    }
    Ok(b.build())
}

/// Merges vertex `a` of `a_graph` with vertex `b` of `b_graph`.
pub fn identify(a_graph: &Graph, a: usize, b_graph: &Graph, b: usize) -> Result<Graph> {
    a_graph.check_vertex(a)?;
    b_graph.check_vertex(b)?;
    let na = a_graph.order();
    let n = check_order(Some(na + b_graph.order() - 1))?;
    let map = |x: usize| match x.cmp(&b) {
        std::cmp::Ordering::Equal => a,
        std::cmp::Ordering::Less => na + x,
        std::cmp::Ordering::Greater => na + x - 1,
    };
    let mut out = GraphBuilder::new(n);
    for (x, y) in a_graph.edges() {
        out.add_edge(x, y);
    }
    for (x, y) in b_graph.edges() {
        out.add_edge(map(x), map(y));
    }
    Ok(out.build())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(GraphError::BadParameter("path needs n >= 1".into()));
    }
    check_order(Some(n))?;
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        b.add_edge(i - 1, i);
    }
    Ok(b.build())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(GraphError::BadParameter("cycle needs n >= 3".into()));
    }
    check_order(Some(n))?;
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge(i, (i + 1) % n);
    }
    Ok(b.build())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(GraphError::BadParameter("complete graph needs n >= 1".into()));
    }
    check_order(Some(n))?;
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for j in i + 1..n {
            b.add_edge(i, j);
        }
    }
    Ok(b.build())
}

/// `K_{1,k}` with the center at 0.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(GraphError::BadParameter("star needs k >= 1".into()));
    }
    check_order(Some(k + 1))?;
    let mut b = GraphBuilder::new(k + 1);
    for i in 1..=k {
        b.add_edge(0, i);
    }
    Ok(b.build())
}

/// Triangle 0-1-2 with a pendant 3 on vertex 0.
pub fn paw() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).expect("static edge list")
}

/// `Q_d`; vertex `x` is adjacent to `x ^ (1 << i)`.
pub fn hypercube(d: usize) -> Result<Graph> {
    let n = check_order(1usize.checked_shl(d as u32).filter(|_| d < 63))?;
    let mut b = GraphBuilder::new(n);
    for x in 0..n {
        for i in 0..d {
            let y = x ^ (1 << i);
            if x < y {
                b.add_edge(x, y);
            }
        }
    }
    Ok(b.build())
}

/// `Q_d` without the all-zeros vertex; vertex `x` of `Q_d` becomes `x - 1`.
pub fn hypercube_minus(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(GraphError::BadParameter("hypercube_minus needs d >= 2".into()));
    }
    let q = hypercube(d)?;
    let mut b = GraphBuilder::new(q.order() - 1);
    for (x, y) in q.edges() {
        if x != 0 {
            b.add_edge(x - 1, y - 1);
        }
    }
    Ok(b.build())
}

/// `C_{2k+2}` on `0..2k+2` with pendant `2k+2` on vertex 0 and pendant
/// `2k+3` on the antipodal vertex `k+1`.
pub fn z_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(GraphError::BadParameter("Z_k needs k >= 1".into()));
    }
    let m = 2 * k + 2;
    check_order(Some(m + 2))?;
    let mut b = GraphBuilder::new(m + 2);
    for i in 0..m {
        b.add_edge(i, (i + 1) % m);
    }
    b.add_edge(0, m);
    b.add_edge(k + 1, m + 1);
    Ok(b.build())
}

/// Path `0..=2k+2` plus vertex `2k+3` adjacent to `k` and `k+2`, the two
/// neighbours of the central vertex `k+1`.
pub fn y_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(GraphError::BadParameter("Y_k needs k >= 1".into()));
    }
    let n = check_order(Some(2 * k + 4))?;
    let mut b = GraphBuilder::new(n);
    for i in 1..=2 * k + 2 {
        b.add_edge(i - 1, i);
    }
    b.add_edge(k, 2 * k + 3);
    b.add_edge(k + 2, 2 * k + 3);
    Ok(b.build())
}

/// Tree in which the central vertex (or each of the two adjacent central
/// vertices) has `levels[0]` children and every vertex at depth `i >= 1`
/// has `levels[i]` children. Vertices are numbered breadth first.
pub fn center_regular_tree(levels: &[usize], bicentral: bool) -> Result<Graph> {
    if levels.is_empty() || levels.contains(&0) {
        return Err(GraphError::BadParameter(
            "level sequence must be nonempty with entries >= 1".into(),
        ));
    }
    let roots: usize = if bicentral { 2 } else { 1 };
    let mut order = Some(roots);
    let mut width = Some(roots);
    for &d in levels {
        width = width.and_then(|w| w.checked_mul(d));
        order = order.and_then(|o| width.and_then(|w| o.checked_add(w)));
    }
    let n = check_order(order)?;
    let mut b = GraphBuilder::new(n);
    if bicentral {
        b.add_edge(0, 1);
    }
    let mut frontier: Vec<usize> = (0..roots).collect();
    let mut next_id = roots;
    for &d in levels {
        let mut next = Vec::with_capacity(frontier.len() * d);
        for &p in &frontier {
            for _ in 0..d {
                b.add_edge(p, next_id);
                next.push(next_id);
                next_id += 1;
            }
        }
        frontier = next;
    }
    Ok(b.build())
}

/// Legs of the given lengths joined at the center vertex 0. Leg `i` occupies
/// consecutive indices, nearest vertex first.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(GraphError::BadParameter("spider legs must be nonempty and >= 1".into()));
    }
    let n = check_order(legs.iter().try_fold(1usize, |a, &l| a.checked_add(l)))?;
    let mut b = GraphBuilder::new(n);
    let mut next = 1;
    for &l in legs {
        let mut prev = 0;
        for _ in 0..l {
            b.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    Ok(b.build())
}

/// `K_n` minus the matching `(0,1), (2,3), ...` of size `k`.
pub fn complete_minus_edges(n: usize, k: usize) -> Result<Graph> {
    if k > n / 2 {
        return Err(GraphError::BadParameter(format!("cannot remove {k} disjoint edges from K_{n}")));
    }
    let removed: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    complete_minus_edge_list(n, &removed)
}

/// `K_n` minus an explicit edge list. The result must stay connected.
pub fn complete_minus_edge_list(n: usize, removed: &[(usize, usize)]) -> Result<Graph> {
    let k = complete(n)?;
    let mut b = GraphBuilder::new(n);
    for (x, y) in k.edges() {
        b.add_edge(x, y);
    }
    for &(u, v) in removed {
        if u >= n || v >= n {
            return Err(GraphError::InvalidEdge { u, v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        b.remove_edge(u, v);
    }
    let g = b.build();
    if !g.is_connected()? {
        return Err(GraphError::Disconnected);
    }
    Ok(g)
}

/// Small graphs with hand-checked transmissions, numbered so that vertex
/// labels follow increasing transmission where that is meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// Order 7, transmissions 7..=13 on vertices 0..=6.
    Interval7,
    /// Order 8, transmissions 8..=15 on vertices 0..=7.
    Interval8,
    /// Order 11, pairwise incongruent transmissions that do not form an interval.
    Indivisible11,
    /// Prism `C_3 □ K_2` without one rung, ends 0 and 5.
    PrismMinusRung,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 4] = [
        NamedGraph::Interval7,
        NamedGraph::Interval8,
        NamedGraph::Indivisible11,
        NamedGraph::PrismMinusRung,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::Interval7 => "interval7",
            NamedGraph::Interval8 => "interval8",
            NamedGraph::Indivisible11 => "indivisible11",
            NamedGraph::PrismMinusRung => "prism-minus-rung",
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            NamedGraph::Interval7 => (
                7,
                &[(2, 1), (1, 0), (0, 4), (4, 2), (2, 0), (0, 5), (0, 3), (3, 1), (1, 6)],
            ),
            NamedGraph::Interval8 => (
                8,
                &[
                    (2, 1), (1, 3), (3, 0), (0, 5), (5, 2), (3, 2),
                    (2, 0), (0, 6), (0, 4), (4, 1), (1, 0), (1, 7),
                ],
            ),
            NamedGraph::Indivisible11 => (
                11,
                &[
                    (9, 10), (10, 5), (5, 1), (1, 8), (8, 0), (0, 10), (10, 6),
                    (6, 9), (9, 2), (2, 7), (7, 3), (3, 9), (9, 7), (4, 10),
                    (10, 8), (8, 4), (4, 0), (0, 6), (6, 2),
                ],
            ),
            NamedGraph::PrismMinusRung => (
                6,
                &[(0, 1), (1, 3), (3, 5), (0, 2), (2, 4), (4, 5), (1, 2), (3, 4)],
            ),
        };
        Graph::new(n, edges).expect("static edge list")
    }
}

/// A parsed family name such as `z:3`, `qminus:4` or `bloom:cycle:5:2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Hypercube(usize),
    HypercubeMinus(usize),
    Paw,
    Z(usize),
    Y(usize),
    Bloom(Box<FamilySpec>, usize),
    Power(Box<FamilySpec>, usize),
    CenterRegularTree { levels: Vec<usize>, bicentral: bool },
    CompleteMinusEdges { n: usize, k: usize },
    Spider(Vec<usize>),
    Named(NamedGraph),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        let g = match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Star(k) => star(*k),
            FamilySpec::Hypercube(d) => hypercube(*d),
            FamilySpec::HypercubeMinus(d) => hypercube_minus(*d),
            FamilySpec::Paw => Ok(paw()),
            FamilySpec::Z(k) => z_graph(*k),
            FamilySpec::Y(k) => y_graph(*k),
            FamilySpec::Bloom(inner, k) => bloom(&inner.build()?, *k),
            FamilySpec::Power(inner, m) => cartesian_power(&inner.build()?, *m),
            FamilySpec::CenterRegularTree { levels, bicentral } => {
                center_regular_tree(levels, *bicentral)
            }
            FamilySpec::CompleteMinusEdges { n, k } => complete_minus_edges(*n, *k),
            FamilySpec::Spider(legs) => spider(legs),
            FamilySpec::Named(g) => Ok(g.graph()),
        }?;
        Ok(g.with_label(self.to_string()))
    }
}

pub fn standard_family(spec: &FamilySpec) -> Result<Graph> {
    spec.build()
}

fn join_list(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::HypercubeMinus(d) => write!(f, "qminus:{d}"),
            FamilySpec::Paw => write!(f, "paw"),
            FamilySpec::Z(k) => write!(f, "z:{k}"),
            FamilySpec::Y(k) => write!(f, "y:{k}"),
            FamilySpec::Bloom(inner, k) => write!(f, "bloom:{inner}:{k}"),
            FamilySpec::Power(inner, m) => write!(f, "power:{inner}:{m}"),
            FamilySpec::CenterRegularTree { levels, bicentral } => {
                write!(f, "crt:{}", join_list(levels))?;
                if *bicentral {
                    write!(f, ":bi")?;
                }
                Ok(())
            }
            FamilySpec::CompleteMinusEdges { n, k } => write!(f, "kminus:{n}:{k}"),
            FamilySpec::Spider(legs) => write!(f, "spider:{}", join_list(legs)),
            FamilySpec::Named(g) => write!(f, "{}", g.name()),
        }
    }
}

fn bad(s: &str, why: &str) -> GraphError {
    GraphError::BadParameter(format!("family '{s}': {why}"))
}

fn int(s: &str, tok: &str) -> Result<usize> {
    tok.trim().parse().map_err(|_| bad(s, &format!("'{tok}' is not a non-negative integer")))
}

fn int_list(s: &str, tok: &str) -> Result<Vec<usize>> {
    tok.split(',').map(|t| int(s, t)).collect()
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let one = |want: usize| -> Result<()> {
            if parts.len() != want + 1 {
                return Err(bad(s, &format!("expected {want} parameter(s)")));
            }
            Ok(())
        };
        let head = parts[0].to_ascii_lowercase();
        let spec = match head.as_str() {
            "path" | "p" => {
                one(1)?;
                FamilySpec::Path(int(s, parts[1])?)
            }
            "cycle" | "c" => {
                one(1)?;
                FamilySpec::Cycle(int(s, parts[1])?)
            }
            "complete" | "k" => {
                one(1)?;
                FamilySpec::Complete(int(s, parts[1])?)
            }
            "star" => {
                one(1)?;
                FamilySpec::Star(int(s, parts[1])?)
            }
            "hypercube" | "q" => {
                one(1)?;
                FamilySpec::Hypercube(int(s, parts[1])?)
            }
            "qminus" | "hypercube_minus" => {
                one(1)?;
                FamilySpec::HypercubeMinus(int(s, parts[1])?)
            }
            "paw" => {
                one(0)?;
                FamilySpec::Paw
            }
            "z" => {
                one(1)?;
                FamilySpec::Z(int(s, parts[1])?)
            }
            "y" => {
                one(1)?;
                FamilySpec::Y(int(s, parts[1])?)
            }
            "bloom" | "power" => {
                if parts.len() < 3 {
                    return Err(bad(s, "expected <family>:<k>"));
                }
                let inner: FamilySpec = parts[1..parts.len() - 1].join(":").parse()?;
                let k = int(s, parts[parts.len() - 1])?;
                if head == "bloom" {
                    FamilySpec::Bloom(Box::new(inner), k)
                } else {
                    FamilySpec::Power(Box::new(inner), k)
                }
            }
            "crt" | "center_regular_tree" => {
                let bicentral = match parts.len() {
                    2 => false,
                    3 if parts[2] == "bi" => true,
                    _ => return Err(bad(s, "expected crt:<d0,d1,...>[:bi]")),
                };
                FamilySpec::CenterRegularTree { levels: int_list(s, parts[1])?, bicentral }
            }
            "kminus" | "complete_minus_edges" => {
                one(2)?;
                FamilySpec::CompleteMinusEdges { n: int(s, parts[1])?, k: int(s, parts[2])? }
            }
            "spider" => {
                one(1)?;
                FamilySpec::Spider(int_list(s, parts[1])?)
            }
            other => match NamedGraph::ALL.iter().find(|g| g.name() == other) {
                Some(&g) => {
                    one(0)?;
                    FamilySpec::Named(g)
                }
                None => return Err(bad(s, "unknown family")),
            },
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, is_center_regular_tree, ud_pairs};
    use crate::invariants::profile;

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn small_products() {
        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.edge_count(), c4.degrees()), (4, vec![2; 4]));
        assert!(c4.is_connected().unwrap());
        assert_eq!(lexicographic_product(&k2, &k2).unwrap(), complete(4).unwrap());
        let p5 = path(5).unwrap();
        assert_eq!(lexicographic_product(&p5, &Graph::empty(1)).unwrap(), p5);
        assert_eq!(cartesian_power(&k2, 4).unwrap(), hypercube(4).unwrap());
        assert_eq!(cartesian_power(&p5, 1).unwrap(), p5);
        assert!(matches!(cartesian_power(&p5, 0), Err(GraphError::BadParameter(_))));
        assert!(matches!(
            cartesian_power(&cycle(10).unwrap(), 5),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn product_layout_and_degrees() {
        let g = path(3).unwrap();
        let h = cycle(4).unwrap();
        let p = cartesian_product(&g, &h).unwrap();
        for a in 0..3 {
            for b in 0..4 {
                assert_eq!(p.deg(a * 4 + b), g.deg(a) + h.deg(b));
            }
        }
        assert!(p.has_edge(0, 4) && p.has_edge(0, 1) && !p.has_edge(0, 5));
    }

    #[test]
    fn lexicographic_path_of_triangles() {
        let p = profile(&lexicographic_product(&path(4).unwrap(), &complete(3).unwrap()).unwrap())
            .unwrap();
        assert_eq!((p.c_w, p.c_ec), (2, 2));
    }

    #[test]
    fn joins() {
        let k1 = Graph::empty(1);
        assert_eq!(join(&k1, &k1).unwrap(), complete(2).unwrap());
        let w = profile(&join(&k1, &cycle(4).unwrap()).unwrap()).unwrap();
        assert_eq!(w.ec_set, vec![1, 2]);
    }

    #[test]
    fn blooms() {
        assert_eq!(bloom(&Graph::empty(1), 3).unwrap(), star(3).unwrap());
        let c4 = cycle(4).unwrap();
        for k in 1..=3 {
            let b = bloom(&c4, k).unwrap();
            let p = profile(&b).unwrap();
            assert_eq!((p.c_w, p.c_ec), (2, 2));
            // a pendant sits one step further from everything but its host
            let n = 4;
            for v in 0..n {
                for j in 0..k {
                    let leaf = n + v * k + j;
                    assert_eq!(p.tr[leaf], p.tr[v] + (n * (k + 1) - 2) as u64);
                }
            }
        }
        assert!(bloom(&c4, 0).is_err());
    }

    #[test]
    fn hypercubes() {
        let q3m = profile(&hypercube_minus(3).unwrap()).unwrap();
        assert_eq!((q3m.c_w, q3m.c_ec), (3, 2));
        let q2m = hypercube_minus(2).unwrap();
        assert!(q2m.is_tree() && q2m.order() == 3);
        for d in 2..=7 {
            let p = profile(&hypercube_minus(d).unwrap()).unwrap();
            assert_eq!(p.c_w - p.c_ec, d - 2);
            let ones = (1 << d) - 2;
            for v in 0..(1 << d) - 1 {
                assert_eq!(p.ec[v] as usize, if v == ones { d - 1 } else { d });
            }
        }
        assert!(hypercube_minus(1).is_err());
    }

    #[test]
    fn z_and_y() {
        let z1 = profile(&z_graph(1).unwrap()).unwrap();
        assert_eq!(z1.tr_set, vec![8, 12]);
        assert_eq!(z1.ec_set, vec![2, 3, 4]);
        for k in 1..=8usize {
            let z = z_graph(k).unwrap();
            assert_eq!(z.order(), 2 * k + 4);
            let p = profile(&z).unwrap();
            let base = ((k + 1) * (k + 1)) as u64;
            assert_eq!(p.tr_set, vec![base + k as u64 + 3, base + 3 * k as u64 + 5]);
            assert_eq!(p.ec_set, vec![k as u32 + 1, k as u32 + 2, k as u32 + 3]);
            // the pendant pair is universally diametrical only while every
            // cycle vertex is within reach of a pendant-side eccentricity
            let pendants = (2 * k + 2, 2 * k + 3);
            assert_eq!(ud_pairs(&z).unwrap().contains(&pendants), k <= 2, "Z_{k}");
        }
        assert_eq!(classify(&z_graph(1).unwrap()).unwrap().arithmetic_step, Some(4));
        assert_eq!(profile(&y_graph(1).unwrap()).unwrap().tr_set, vec![8, 12]);
        for k in 1..=6 {
            let y = y_graph(k).unwrap();
            assert_eq!(y.order(), 2 * k + 4);
            let p = profile(&y).unwrap();
            assert!(p.c_ec > p.c_w, "Y_{k}");
        }
    }

    #[test]
    fn center_regular_trees() {
        assert_eq!(center_regular_tree(&[3], false).unwrap(), star(3).unwrap());
        let t = center_regular_tree(&[2, 2], false).unwrap();
        let p = profile(&t).unwrap();
        assert_eq!((t.order(), p.c_w, p.c_ec), (7, 3, 3));
        for (levels, bi) in [(vec![2, 2], true), (vec![3, 1, 2], false), (vec![1, 1, 1], true)] {
            let t = center_regular_tree(&levels, bi).unwrap();
            assert!(t.is_tree());
            assert_eq!(is_center_regular_tree(&t), Ok(true));
            let p = profile(&t).unwrap();
            assert_eq!(p.center.len(), if bi { 2 } else { 1 });
        }
        assert!(center_regular_tree(&[], false).is_err());
        assert!(center_regular_tree(&[2, 0], false).is_err());
    }

    #[test]
    fn identification() {
        let k2 = complete(2).unwrap();
        let p3 = identify(&k2, 0, &k2, 0).unwrap();
        assert_eq!(p3.order(), 3);
        assert!(p3.has_edge(0, 1) && p3.has_edge(0, 2));
        let g = identify(&cycle(5).unwrap(), 2, &path(4).unwrap(), 1).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 5 + 3);
        assert!(g.has_edge(2, 5) && g.has_edge(2, 6) && g.has_edge(6, 7));
        assert!(identify(&k2, 2, &k2, 0).is_err());
    }

    #[test]
    fn complete_minus() {
        let p = profile(&complete_minus_edges(6, 3).unwrap()).unwrap();
        assert_eq!((p.c_w, p.c_ec), (1, 1));
        assert!(complete_minus_edges(6, 4).is_err());
        assert_eq!(complete_minus_edges(2, 1), Err(GraphError::Disconnected));
        let g = complete_minus_edge_list(5, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn named_graph_transmissions() {
        let tr = |g: NamedGraph| profile(&g.graph()).unwrap().tr;
        assert_eq!(tr(NamedGraph::Interval7), (7..=13).collect::<Vec<u64>>());
        assert_eq!(tr(NamedGraph::Interval8), (8..=15).collect::<Vec<u64>>());
        assert_eq!(
            tr(NamedGraph::Indivisible11),
            vec![18, 26, 22, 24, 20, 21, 17, 23, 19, 16, 14]
        );
        assert_eq!(tr(NamedGraph::PrismMinusRung), vec![9, 7, 7, 7, 7, 9]);
        let r = classify(&NamedGraph::Indivisible11.graph()).unwrap();
        assert!(r.transmission_indivisible && !r.interval_irregular);
        assert!(classify(&NamedGraph::Interval7.graph()).unwrap().interval_irregular);
        assert!(classify(&NamedGraph::Interval8.graph()).unwrap().interval_irregular);
    }

    #[test]
    fn spiders() {
        assert_eq!(
            profile(&spider(&[2, 3, 1]).unwrap()).unwrap().tr_set,
            vec![10, 11, 13, 14, 15, 18, 19]
        );
        let g = profile(&spider(&[2, 2, 1]).unwrap()).unwrap();
        assert_eq!(g.tr_set, vec![7, 9, 11, 13]);
    }

    #[test]
    fn family_strings_round_trip() {
        for s in [
            "path:5", "cycle:6", "complete:4", "star:3", "hypercube:3", "qminus:4", "paw",
            "z:3", "y:2", "bloom:cycle:5:2", "power:z:1:2", "crt:3,2", "crt:2,2:bi",
            "kminus:6:3", "spider:2,3,1", "interval7", "prism-minus-rung",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let g = spec.build().unwrap();
            assert_eq!(g.label(), Some(s));
            assert!(g.is_connected().unwrap(), "{s}");
        }
        assert_eq!(fam("bloom:cycle:5:2").order(), 15);
        assert_eq!(fam("paw"), paw());
        for s in ["", "cycle", "cycle:x", "cycle:2", "nope:3", "crt:1:uni", "paw:1", "bloom:3"] {
            assert!(s.parse::<FamilySpec>().and_then(|f| f.build()).is_err(), "{s}");
        }
    }

    #[test]
    fn z_powers() {
        let z = z_graph(1).unwrap();
        let p = profile(&cartesian_power(&z, 2).unwrap()).unwrap();
        assert_eq!((p.n, p.c_ec, p.c_w), (36, 5, 3));
    }
}
