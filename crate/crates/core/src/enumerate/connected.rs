//! Connected graphs by canonical vertex augmentation.
//!
//! A child is a parent plus one new vertex joined to a nonempty subset `S`
//! of the parent. Only one `S` per orbit of the parent's automorphism group
//! is tried. The child is kept when its new vertex lies in the orbit of the
//! child's canonical deletion vertex: among the non-cut vertices, the one
//! with the largest [`key`], ties broken by the largest canonical position.

use super::canon::{canonicalize, subset_orbit_representatives, Canon};
use super::small::SmallGraph;
use super::{GeneratorConfig, Shard};

#[inline]
fn key(g: &SmallGraph, x: usize, deg: &[u8; 16]) -> u16 {
    let mut nsum = 0u16;
    let mut r = g.row(x);
    while r != 0 {
        nsum += deg[r.trailing_zeros() as usize] as u16;
        r &= r - 1;
    }
    (16 - deg[x] as u16) << 8 | nsum
}

pub(crate) enum Verdict {
    Reject,
    Accept(Option<Canon>),
}

/// Whether the last vertex of `c` is its canonical deletion vertex, up to
/// automorphism.
pub(crate) fn accept_last(c: &SmallGraph) -> Verdict {
    let n = c.order();
    let v = n - 1;
    let mut deg = [0u8; 16];
    for (x, d) in deg.iter_mut().enumerate().take(n) {
        *d = c.row(x).count_ones() as u8;
    }
    let kv = key(c, v, &deg);
    let mut ties = 0u16;
    for x in 0..v {
        // a larger degree always gives a smaller key
        if deg[x] > deg[v] {
            continue;
        }
        let kx = key(c, x, &deg);
        if kx < kv || c.is_cut_vertex(x) {
            continue;
        }
        if kx > kv {
            return Verdict::Reject;
        }
        ties |= 1 << x;
    }
    if ties == 0 {
        return Verdict::Accept(None);
    }
    let canon = canonicalize(c);
    let pos = canon.positions();
    ties |= 1 << v;
    let mut chosen = v;
    let mut t = ties;
    while t != 0 {
        let x = t.trailing_zeros() as usize;
        t &= t - 1;
        if pos[x] > pos[chosen] {
            chosen = x;
        }
    }
    if canon.orbits[chosen] == canon.orbits[v] {
        Verdict::Accept(Some(canon))
    } else {
        Verdict::Reject
    }
}

enum Subsets {
    All { next: u32, end: u32 },
    Reps { list: Vec<u16>, next: usize },
}

impl Subsets {
    fn for_graph(g: &SmallGraph, canon: Option<Canon>) -> Subsets {
        let m = g.order();
        let canon = canon.unwrap_or_else(|| canonicalize(g));
        if canon.generators.is_empty() {
            Subsets::All { next: 1, end: 1 << m }
        } else {
            Subsets::Reps { list: subset_orbit_representatives(m, &canon.generators), next: 0 }
        }
    }

    #[inline]
    fn next(&mut self) -> Option<u16> {
        match self {
            Subsets::All { next, end } => {
                if *next >= *end {
                    return None;
                }
                *next += 1;
                Some((*next - 1) as u16)
            }
            Subsets::Reps { list, next } => {
                let s = list.get(*next).copied();
                *next += 1;
                s
            }
        }
    }
}

struct Frame {
    g: SmallGraph,
    /// Vertices already at the degree cap.
    full: u16,
    subsets: Subsets,
}

/// Lazy stream of connected graphs of one order, one per isomorphism class.
pub struct ConnectedGraphs {
    n: usize,
    max_deg: usize,
    min_deg: usize,
    shard: Shard,
    split: usize,
    split_seen: u64,
    stack: Vec<Frame>,
    pending_k1: bool,
}

impl ConnectedGraphs {
    pub(crate) fn new(cfg: &GeneratorConfig) -> ConnectedGraphs {
        let n = cfg.n;
        let split = if n >= 4 { n - 2 } else { n };
        let max_deg = cfg.max_degree.unwrap_or(usize::MAX);
        let mut gen = ConnectedGraphs {
            n,
            max_deg,
            min_deg: cfg.min_degree.unwrap_or(0),
            shard: cfg.shard,
            split,
            split_seen: 0,
            stack: Vec::new(),
            pending_k1: n == 1,
        };
        if n >= 2 {
            let k1 = SmallGraph::empty(1);
            gen.push(k1, None);
        }
        gen
    }

    fn push(&mut self, g: SmallGraph, canon: Option<Canon>) {
        let mut full = 0u16;
        for x in 0..g.order() {
            if g.degree(x) >= self.max_deg {
                full |= 1 << x;
            }
        }
        let subsets = Subsets::for_graph(&g, canon);
        self.stack.push(Frame { g, full, subsets });
    }

    /// Claims the next split-level index; true when it belongs to this shard.
    fn claim(&mut self) -> bool {
        let j = self.split_seen;
        self.split_seen += 1;
        j % self.shard.count as u64 == self.shard.index as u64
    }

    /// Next graph as a [`SmallGraph`], avoiding the conversion to [`Graph`].
    ///
    /// [`Graph`]: crate::graph::Graph
    pub fn next_small(&mut self) -> Option<SmallGraph> {
        if self.pending_k1 {
            self.pending_k1 = false;
            let k1 = SmallGraph::empty(1);
            return (self.claim() && self.min_deg == 0).then_some(k1);
        }
        loop {
            let frame = self.stack.last_mut()?;
            let Some(s) = frame.subsets.next() else {
                self.stack.pop();
                continue;
            };
            if s & frame.full != 0 || s.count_ones() as usize > self.max_deg {
                continue;
            }
            let child = frame.g.extend(s);
            let canon = match accept_last(&child) {
                Verdict::Reject => continue,
                Verdict::Accept(c) => c,
            };
            let level = child.order();
            if level == self.split && !self.claim() {
                continue;
            }
            if level == self.n {
                if self.min_deg > 0 && (0..level).any(|x| child.degree(x) < self.min_deg) {
                    continue;
                }
                return Some(child);
            }
            self.push(child, canon);
        }
    }
}

impl Iterator for ConnectedGraphs {
    type Item = crate::graph::Graph;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_small().map(|g| g.to_graph())
    }
}
