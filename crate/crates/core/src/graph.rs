//! Immutable simple undirected graphs stored as adjacency bit rows.
//!
//! Row `v` is a little bitset of `words` machine words; bit `u` of row `v` is
//! set iff `uv` is an edge. Graphs on at most 64 vertices use one word per row,
//! which keeps the BFS used by every invariant down to a handful of word ops.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{GraphError, Result};

/// Hop distance. The largest diameter reachable in this crate is far below
/// `u16::MAX`.
pub type Dist = u16;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    label: Option<String>,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Builds a graph on `n` vertices with the given edges; duplicate edges
    /// collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as `words()` machine words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Single-word row; only meaningful when `order() <= 64`.
    #[inline]
    pub(crate) fn row64(&self, v: usize) -> u64 {
        self.bits[v * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self.reach_count(0, None) == self.n)
    }

    /// Number of vertices reachable from `src`, optionally with one vertex
    /// removed.
    fn reach_count(&self, src: usize, removed: Option<usize>) -> usize {
        if self.words == 1 {
            let mask = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
            let allowed = match removed {
                Some(r) => mask & !(1u64 << r),
                None => mask,
            };
            let mut seen = 1u64 << src;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let x = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.row64(x);
                }
                next &= allowed & !seen;
                seen |= next;
                frontier = next;
            }
            return seen.count_ones() as usize;
        }
        let mut seen = vec![false; self.n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seen[src] = true;
        let mut stack = vec![src];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Exact hop distances from `src`.
    pub fn bfs_distances(&self, src: usize) -> Result<Vec<Dist>> {
        self.check_vertex(src)?;
        let mut dist = vec![Dist::MAX; self.n];
        let reached = self.bfs_into(src, &mut dist);
        if reached != self.n {
            return Err(GraphError::Disconnected);
        }
        Ok(dist)
    }

    /// Fills `dist` (pre-sized to `n`) and returns the number of reached vertices.
    pub(crate) fn bfs_into(&self, src: usize, dist: &mut [Dist]) -> usize {
        let w = self.words;
        let mut seen = vec![0u64; w];
        let mut frontier = vec![0u64; w];
        let mut next = vec![0u64; w];
        seen[src / 64] |= 1 << (src % 64);
        frontier[src / 64] |= 1 << (src % 64);
        dist.iter_mut().for_each(|d| *d = Dist::MAX);
        dist[src] = 0;
        let mut reached = 1;
        let mut level: Dist = 0;
        loop {
            next.iter_mut().for_each(|x| *x = 0);
            for x in iter_bits(&frontier) {
                for (nw, rw) in next.iter_mut().zip(self.row(x)) {
                    *nw |= rw;
                }
            }
            let mut any = false;
            for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
                *nw &= !*sw;
                *sw |= *nw;
                any |= *nw != 0;
            }
            if !any {
                break;
            }
            level += 1;
            for x in iter_bits(&next) {
                dist[x] = level;
                reached += 1;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        reached
    }

    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let n = self.n;
        let mut d = vec![0 as Dist; n * n];
        for (v, row) in d.chunks_mut(n).enumerate() {
            if self.bfs_into(v, row) != n {
                return Err(GraphError::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    /// True iff the graph has no articulation vertex (low-point DFS).
    pub fn is_biconnected(&self) -> Result<bool> {
        if self.n < 3 {
            return Err(GraphError::TooSmall(self.n));
        }
        if !self.is_connected()? {
            return Err(GraphError::Disconnected);
        }
        Ok(articulation_points(self).is_empty())
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edge_count() == self.n - 1 && self.reach_count(0, None) == self.n
    }

    /// True iff removing `v` disconnects the remaining vertices.
    pub fn is_cut_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        if self.n <= 2 {
            return Ok(false);
        }
        let src = if v == 0 { 1 } else { 0 };
        Ok(self.reach_count(src, Some(v)) != self.n - 1)
    }
}

fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut time = 0;
    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < nbrs[v].len() {
                let w = nbrs[v][top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Graph");
        s.field("n", &self.n);
        if let Some(l) = &self.label {
            s.field("label", l);
        }
        s.field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Mutable staging area for building a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> GraphBuilder {
        let words = words_for(n);
        GraphBuilder {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::InvalidEdge { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range endpoints; for internal builders whose indices
    /// are correct by construction.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            words: self.words,
            bits: self.bits,
            label: None,
        }
    }
}

/// All-pairs hop distances of a connected graph, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.d[u * self.n + v]
    }

    pub fn row(&self, v: usize) -> &[Dist] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    pub fn max(&self) -> Dist {
        self.d.iter().copied().max().unwrap_or(0)
    }
}
