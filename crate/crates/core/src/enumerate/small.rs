use crate::error::{GraphError, Result};
use crate::graph::{Graph, GraphBuilder};

/// Largest order handled by [`SmallGraph`] and the canonicalizer.
pub const SMALL_MAX: usize = 16;

/// Fixed-size adjacency rows for graphs of order at most 16.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: u8,
    rows: [u16; SMALL_MAX],
}

impl SmallGraph {
    pub fn empty(n: usize) -> SmallGraph {
        assert!(n <= SMALL_MAX, "order {n} exceeds {SMALL_MAX}");
        SmallGraph { n: n as u8, rows: [0; SMALL_MAX] }
    }

    pub fn from_graph(g: &Graph) -> Result<SmallGraph> {
        if g.order() > SMALL_MAX {
            return Err(GraphError::TooLarge { order: g.order(), cap: SMALL_MAX });
        }
        let mut s = SmallGraph::empty(g.order());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        Ok(s)
    }

    pub fn to_graph(&self) -> Graph {
        let mut b = GraphBuilder::new(self.order());
        for u in 0..self.order() {
            let mut r = self.rows[u] >> u >> 1;
            let mut v = u + 1;
            while r != 0 {
                let z = r.trailing_zeros() as usize;
                v += z;
                b.add_edge(u, v);
                r >>= z + 1;
                v += 1;
            }
        }
        b.build()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn row(&self, v: usize) -> u16 {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.n as usize]
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub(crate) fn full_mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    /// Copy with a new vertex `n` adjacent to `nbrs`.
    #[inline]
    pub(crate) fn extend(&self, nbrs: u16) -> SmallGraph {
        let m = self.n as usize;
        let mut c = *self;
        let mut s = nbrs;
        while s != 0 {
            let x = s.trailing_zeros() as usize;
            c.rows[x] |= 1 << m;
            s &= s - 1;
        }
        c.rows[m] = nbrs;
        c.n += 1;
        c
    }

    /// Vertices reachable from `src` without passing through `removed`.
    #[inline]
    pub(crate) fn reach(&self, src: usize, removed: u16) -> u16 {
        let allowed = self.full_mask() & !removed;
        let mut seen = 1u16 << src;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= self.rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & allowed & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, 0) == self.full_mask()
    }

    /// Whether removing `x` disconnects the graph (assumed connected).
    #[inline]
    pub fn is_cut_vertex(&self, x: usize) -> bool {
        let n = self.order();
        if n <= 2 || self.rows[x].count_ones() <= 1 {
            return false;
        }
        let src = self.rows[x].trailing_zeros() as usize;
        self.reach(src, 1 << x).count_ones() as usize != n - 1
    }

    /// Transmissions and eccentricities into the first `n` slots; false when
    /// the graph is disconnected.
    pub(crate) fn tr_ec(&self, tr: &mut [u64], ec: &mut [u32]) -> bool {
        let full = self.full_mask();
        for s in 0..self.order() {
            let mut seen = 1u16 << s;
            let mut frontier = seen;
            let mut level = 0u32;
            let mut total = 0u64;
            while seen != full {
                let mut next = 0u16;
                let mut f = frontier;
                while f != 0 {
                    next |= self.rows[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                next &= !seen;
                if next == 0 {
                    return false;
                }
                level += 1;
                total += (level * next.count_ones()) as u64;
                seen |= next;
                frontier = next;
            }
            tr[s] = total;
            ec[s] = level;
        }
        true
    }

    /// Graph with vertex `perm[v]` in place of `v`.
    pub fn permuted(&self, perm: &[u8]) -> SmallGraph {
        let mut out = SmallGraph::empty(self.order());
        for u in 0..self.order() {
            out.rows[perm[u] as usize] = map_bits(self.rows[u], perm);
        }
        out
    }
}

#[inline]
pub(crate) fn map_bits(mut mask: u16, perm: &[u8]) -> u16 {
    let mut out = 0;
    while mask != 0 {
        out |= 1 << perm[mask.trailing_zeros() as usize];
        mask &= mask - 1;
    }
    out
}
