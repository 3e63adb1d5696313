//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree is explored depth first. Leaves are compared by their
//! relabelled adjacency rows; the smallest one is canonical. A leaf whose
//! relabelled graph equals the first or the best leaf yields an
//! automorphism, and the search jumps back to the common ancestor of the two
//! leaves. Children of a node are skipped when an automorphism fixing the
//! node's individualized vertices maps an explored child onto them. The
//! automorphisms found this way generate the full group.

use super::small::{map_bits, SmallGraph, SMALL_MAX};

pub type Perm = [u8; SMALL_MAX];

/// Ordered partition of the vertex set, one bitmask per cell.
#[derive(Clone, Copy)]
struct Cells {
    m: [u16; SMALL_MAX],
    len: usize,
}

impl Cells {
    fn insert(&mut self, at: usize, mask: u16) {
        self.m.copy_within(at..self.len, at + 1);
        self.m[at] = mask;
        self.len += 1;
    }
}

/// Refines `cells` to the coarsest equitable partition finer than it,
/// starting from the given splitter masks.
fn refine(g: &SmallGraph, cells: &mut Cells, seeds: &[u16]) {
    let mut queue = [0u16; 64];
    let mut tail = 0;
    for &s in seeds {
        queue[tail] = s;
        tail += 1;
    }
    let mut head = 0;
    let n = g.order();
    while head < tail && cells.len < n {
        let w = queue[head];
        head += 1;
        let mut i = 0;
        while i < cells.len {
            let x = cells.m[i];
            if x & (x - 1) == 0 {
                i += 1;
                continue;
            }
            let mut by_count = [0u16; SMALL_MAX + 1];
            let mut present = 0u32;
            let mut rest = x;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                let c = (g.row(v) & w).count_ones() as usize;
                by_count[c] |= 1 << v;
                present |= 1 << c;
                rest &= rest - 1;
            }
            if present & (present - 1) == 0 {
                i += 1;
                continue;
            }
            cells.len -= 1;
            cells.m.copy_within(i + 1..cells.len + 1, i);
            let mut at = i;
            while present != 0 {
                let c = present.trailing_zeros() as usize;
                present &= present - 1;
                cells.insert(at, by_count[c]);
                queue[tail] = by_count[c];
                tail += 1;
                at += 1;
            }
            i = at;
        }
    }
}

fn relabel(g: &SmallGraph, lab: &Perm) -> SmallGraph {
    // lab[position] = vertex; the canonical graph puts lab[i] at i
    let n = g.order();
    let mut pos = [0u8; SMALL_MAX];
    for i in 0..n {
        pos[lab[i] as usize] = i as u8;
    }
    g.permuted(&pos)
}

#[derive(Clone, Debug)]
pub struct Canon {
    /// `lab[i]` is the vertex placed at position `i` of the canonical graph.
    pub lab: Perm,
    pub graph: SmallGraph,
    /// Automorphism generators, `gen[v]` the image of `v`.
    pub generators: Vec<Perm>,
    /// Smallest vertex of each vertex's orbit under the automorphism group.
    pub orbits: [u8; SMALL_MAX],
}

impl Canon {
    /// Position of each vertex in the canonical labelling.
    pub fn positions(&self) -> Perm {
        let mut pos = [0u8; SMALL_MAX];
        for i in 0..self.graph.order() {
            pos[self.lab[i] as usize] = i as u8;
        }
        pos
    }
}

struct Leaf {
    lab: Perm,
    graph: SmallGraph,
    prefix: Perm,
    depth: usize,
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Perm>,
}

fn common_prefix(a: &Perm, alen: usize, b: &Perm, blen: usize) -> usize {
    let m = alen.min(blen);
    (0..m).find(|&i| a[i] != b[i]).unwrap_or(m)
}

fn find(parent: &mut [u8; SMALL_MAX], mut x: usize) -> usize {
    while parent[x] as usize != x {
        let p = parent[x] as usize;
        parent[x] = parent[p];
        x = p;
    }
    x
}

fn union_orbits<'p>(n: usize, gens: impl Iterator<Item = &'p Perm>) -> [u8; SMALL_MAX] {
    let mut parent = [0u8; SMALL_MAX];
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i as u8;
    }
    for gen in gens {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, gen[v] as usize));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo as u8;
            }
        }
    }
    for v in 0..n {
        parent[v] = find(&mut parent, v) as u8;
    }
    parent
}

impl Search<'_> {
    fn record(&mut self, from: &Perm, to: &Perm) {
        let mut gamma = [0u8; SMALL_MAX];
        for i in 0..self.n {
            gamma[from[i] as usize] = to[i];
        }
        if (0..self.n).any(|v| gamma[v] as usize != v) {
            debug_assert_eq!(self.g.permuted(&gamma), *self.g);
            self.gens.push(gamma);
        }
    }

    fn leaf(&mut self, cells: &Cells, prefix: &Perm, depth: usize) -> Option<usize> {
        let mut lab = [0u8; SMALL_MAX];
        for i in 0..self.n {
            lab[i] = cells.m[i].trailing_zeros() as u8;
        }
        let graph = relabel(self.g, &lab);
        let Some(first) = &self.first else {
            self.first = Some(Leaf { lab, graph, prefix: *prefix, depth });
            self.best = Some(Leaf { lab, graph, prefix: *prefix, depth });
            return None;
        };
        if graph == first.graph {
            let (flab, fp, fd) = (first.lab, first.prefix, first.depth);
            self.record(&flab, &lab);
            return Some(common_prefix(prefix, depth, &fp, fd));
        }
        let best = self.best.as_ref().expect("set with first");
        match graph.cmp(&best.graph) {
            std::cmp::Ordering::Equal => {
                let (blab, bp, bd) = (best.lab, best.prefix, best.depth);
                self.record(&blab, &lab);
                Some(common_prefix(prefix, depth, &bp, bd))
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf { lab, graph, prefix: *prefix, depth });
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn visit(&mut self, cells: &Cells, prefix: &mut Perm, depth: usize) -> Option<usize> {
        if cells.len == self.n {
            return self.leaf(cells, prefix, depth);
        }
        let mut target = usize::MAX;
        let mut size = u32::MAX;
        for i in 0..cells.len {
            let c = cells.m[i].count_ones();
            if c > 1 && c < size {
                size = c;
                target = i;
            }
        }
        let cell = cells.m[target];
        let mut explored = 0u16;
        let mut seen_gens = usize::MAX;
        let mut orbits = [0u8; SMALL_MAX];
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if explored != 0 && !self.gens.is_empty() {
                if seen_gens != self.gens.len() {
                    seen_gens = self.gens.len();
                    let fixed = &prefix[..depth];
                    orbits = union_orbits(
                        self.n,
                        self.gens.iter().filter(|g| fixed.iter().all(|&p| g[p as usize] == p)),
                    );
                }
                let mut e = explored;
                let mut dup = false;
                while e != 0 {
                    let w = e.trailing_zeros() as usize;
                    e &= e - 1;
                    if orbits[w] == orbits[v] {
                        dup = true;
                        break;
                    }
                }
                if dup {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = *cells;
            child.m[target] = 1 << v;
            child.insert(target + 1, cell & !(1 << v));
            refine(self.g, &mut child, &[1 << v]);
            prefix[depth] = v as u8;
            if let Some(k) = self.visit(&child, prefix, depth + 1) {
                if k < depth {
                    return Some(k);
                }
            }
        }
        None
    }
}

/// Canonical labelling, automorphism generators and orbits of `g`.
pub fn canonicalize(g: &SmallGraph) -> Canon {
    let n = g.order();
    let mut cells = Cells { m: [0; SMALL_MAX], len: 0 };
    if n > 0 {
        cells.m[0] = g.full_mask();
        cells.len = 1;
        refine(g, &mut cells, &[g.full_mask()]);
    }
    let mut search = Search { g, n, first: None, best: None, gens: Vec::new() };
    let mut prefix = [0u8; SMALL_MAX];
    if n > 0 {
        search.visit(&cells, &mut prefix, 0);
    }
    let (lab, graph) = match search.best {
        Some(b) => (b.lab, b.graph),
        None => ([0; SMALL_MAX], *g),
    };
    let orbits = union_orbits(n, search.gens.iter());
    Canon { lab, graph, generators: search.gens, orbits }
}

/// Orbits of the subsets of `0..n` under the group generated by `gens`:
/// one representative (the smallest mask) per orbit of nonempty subsets, in
/// increasing order.
pub(crate) fn subset_orbit_representatives(n: usize, gens: &[Perm]) -> Vec<u16> {
    let total = 1usize << n;
    let mut rep = vec![false; total];
    let mut seen = vec![false; total];
    let mut stack = Vec::new();
    for s in 1..total {
        if seen[s] {
            continue;
        }
        rep[s] = true;
        seen[s] = true;
        stack.push(s as u16);
        while let Some(t) = stack.pop() {
            for gen in gens {
                let img = map_bits(t, gen) as usize;
                if !seen[img] {
                    seen[img] = true;
                    stack.push(img as u16);
                }
            }
        }
    }
    (1..total).filter(|&s| rep[s]).map(|s| s as u16).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn small(n: usize, e: &[(usize, usize)]) -> SmallGraph {
        SmallGraph::from_graph(&Graph::new(n, e).unwrap()).unwrap()
    }

    /// Group order and orbit minima by trying every permutation; since the
    /// automorphisms form a group, the orbit of `v` is `{a(v)}`.
    fn group_order_brute(g: &SmallGraph) -> (usize, [u8; SMALL_MAX]) {
        let n = g.order();
        let mut perm: Vec<u8> = (0..n as u8).collect();
        let mut count = 0;
        let mut orb = [0u8; SMALL_MAX];
        for (i, o) in orb.iter_mut().enumerate() {
            *o = i as u8;
        }
        loop {
            if g.permuted(&perm) == *g {
                count += 1;
                for v in 0..n {
                    orb[v] = orb[v].min(perm[v]);
                }
            }
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        (count, orb)
    }

    fn group_order_from_gens(n: usize, gens: &[Perm]) -> usize {
        // closure by BFS over the generated group
        let id: Vec<u8> = (0..n as u8).collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(p) = stack.pop() {
            for g in gens {
                let q: Vec<u8> = (0..n).map(|v| g[p[v] as usize]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn relabelings_share_a_canonical_graph() {
        let p4 = small(4, &[(0, 1), (1, 2), (2, 3)]);
        let c = canonicalize(&p4).graph;
        let mut perm: Vec<u8> = (0..4).collect();
        let mut seen = 0;
        loop {
            assert_eq!(canonicalize(&p4.permuted(&perm)).graph, c);
            seen += 1;
            let Some(i) = (1..4).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
            let j = (i..4).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        assert_eq!(seen, 24);
    }

    #[test]
    fn groups_match_brute_force() {
        let cases = [
            small(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
            small(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]),
            small(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
            small(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]),
            small(5, &[]),
            small(6, &[(0, 1), (2, 3), (4, 5)]),
            small(1, &[]),
        ];
        for g in &cases {
            let c = canonicalize(g);
            let (order, orb) = group_order_brute(g);
            assert_eq!(group_order_from_gens(g.order(), &c.generators), order, "{g:?}");
            assert_eq!(&c.orbits[..g.order()], &orb[..g.order()], "{g:?}");
            assert_eq!(g.permuted(&c.positions()), c.graph);
        }
    }

    #[test]
    fn petersen_group() {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = small(10, &e);
        let c = canonicalize(&g);
        assert_eq!(group_order_from_gens(10, &c.generators), 120);
        assert!(c.orbits[..10].iter().all(|&o| o == 0));
    }

    #[test]
    fn subset_orbits_of_a_triangle() {
        let g = small(3, &[(0, 1), (1, 2), (0, 2)]);
        let c = canonicalize(&g);
        assert_eq!(subset_orbit_representatives(3, &c.generators), vec![1, 3, 7]);
        assert_eq!(subset_orbit_representatives(2, &[]), vec![1, 2, 3]);
    }
}
