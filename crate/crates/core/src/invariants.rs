//! Transmissions, eccentricities and the scalars derived from them.

use serde::{Deserialize, Serialize};

use crate::codec::encode_graph6_string;
use crate::error::{GraphError, Result};
use crate::graph::{Dist, Graph};

/// Per-vertex transmissions and eccentricities of a connected graph plus the
/// derived scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub tr: Vec<u64>,
    pub ec: Vec<u32>,
    pub wiener: u64,
    /// Wiener complexity: number of distinct transmissions.
    pub c_w: usize,
    /// Eccentric complexity: number of distinct eccentricities.
    pub c_ec: usize,
    pub diam: u32,
    pub rad: u32,
    pub tr_set: Vec<u64>,
    pub ec_set: Vec<u32>,
    pub center: Vec<usize>,
}

/// Computes transmissions and eccentricities with one BFS per vertex.
pub fn profile(g: &Graph) -> Result<InvariantProfile> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let (tr, ec) = tr_ec(g)?;
    Ok(from_vectors(tr, ec))
}

pub(crate) fn tr_ec(g: &Graph) -> Result<(Vec<u64>, Vec<u32>)> {
    if g.words() == 1 {
        small_tr_ec(g)
    } else {
        general_tr_ec(g)
    }
}

/// Builds a profile from transmission and eccentricity vectors.
pub fn from_vectors(tr: Vec<u64>, ec: Vec<u32>) -> InvariantProfile {
    let n = tr.len();
    let wiener = tr.iter().sum::<u64>() / 2;
    let mut tr_set = tr.clone();
    tr_set.sort_unstable();
    tr_set.dedup();
    let mut ec_set = ec.clone();
    ec_set.sort_unstable();
    ec_set.dedup();
    let rad = ec_set[0];
    let diam = *ec_set.last().unwrap();
    let center = (0..n).filter(|&v| ec[v] == rad).collect();
    InvariantProfile {
        n,
        c_w: tr_set.len(),
        c_ec: ec_set.len(),
        tr,
        ec,
        wiener,
        diam,
        rad,
        tr_set,
        ec_set,
        center,
    }
}

fn small_tr_ec(g: &Graph) -> Result<(Vec<u64>, Vec<u32>)> {
    let n = g.order();
    let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut tr = vec![0u64; n];
    let mut ec = vec![0u32; n];
    for s in 0..n {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut level = 0u32;
        let mut total = 0u64;
        while seen != full {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                next |= rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= !seen;
            if next == 0 {
                return Err(GraphError::Disconnected);
            }
            level += 1;
            total += level as u64 * next.count_ones() as u64;
            seen |= next;
            frontier = next;
        }
        tr[s] = total;
        ec[s] = level;
    }
    Ok((tr, ec))
}

fn general_tr_ec(g: &Graph) -> Result<(Vec<u64>, Vec<u32>)> {
    let n = g.order();
    let mut dist = vec![0 as Dist; n];
    let mut tr = vec![0u64; n];
    let mut ec = vec![0u32; n];
    for s in 0..n {
        if g.bfs_into(s, &mut dist) != n {
            return Err(GraphError::Disconnected);
        }
        tr[s] = dist.iter().map(|&d| d as u64).sum();
        ec[s] = dist.iter().copied().max().unwrap_or(0) as u32;
    }
    Ok((tr, ec))
}

/// Distance levels `L_0, L_1, ...` where `L_i` holds the vertices at distance
/// `i` from the center. Empty trailing levels are omitted.
pub fn distance_levels(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let p = profile(g)?;
    Ok(levels_from_center(g, &p.center))
}

pub(crate) fn levels_from_center(g: &Graph, center: &[usize]) -> Vec<Vec<usize>> {
    // multi-source BFS from the center
    let n = g.order();
    let mut level_of = vec![usize::MAX; n];
    let mut current: Vec<usize> = center.to_vec();
    for &c in center {
        level_of[c] = 0;
    }
    let mut levels = Vec::new();
    let mut i = 0;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &x in &current {
            for y in g.neighbors(x) {
                if level_of[y] == usize::MAX {
                    level_of[y] = i + 1;
                    next.push(y);
                }
            }
        }
        current.sort_unstable();
        levels.push(current);
        current = next;
        i += 1;
    }
    levels
}

/// Vertices at distance exactly `ec(w)` from `w`.
pub fn eccentric_set(g: &Graph, w: usize) -> Result<Vec<usize>> {
    let d = g.bfs_distances(w)?;
    let e = d.iter().copied().max().unwrap_or(0);
    Ok((0..g.order()).filter(|&u| d[u] == e).collect())
}

/// Eccentric sets of all vertices, as bitsets over `words` words.
pub(crate) fn eccentric_sets(g: &Graph) -> Result<Vec<Vec<u64>>> {
    let n = g.order();
    let words = n.div_ceil(64).max(1);
    let mut dist = vec![0 as Dist; n];
    let mut out = Vec::with_capacity(n);
    for w in 0..n {
        if g.bfs_into(w, &mut dist) != n {
            return Err(GraphError::Disconnected);
        }
        let e = dist.iter().copied().max().unwrap_or(0);
        let mut set = vec![0u64; words];
        for (u, &d) in dist.iter().enumerate() {
            if d == e {
                set[u / 64] |= 1 << (u % 64);
            }
        }
        out.push(set);
    }
    Ok(out)
}

/// One JSON-lines record per graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub graph6: String,
    pub n: usize,
    pub tr_set: Vec<u64>,
    pub ec_set: Vec<u32>,
    pub c_w: usize,
    pub c_ec: usize,
    pub diam: u32,
    pub rad: u32,
    pub wiener: u64,
}

impl ProfileRecord {
    pub fn new(g: &Graph, p: &InvariantProfile) -> ProfileRecord {
        ProfileRecord {
            graph6: encode_graph6_string(g),
            n: p.n,
            tr_set: p.tr_set.clone(),
            ec_set: p.ec_set.clone(),
            c_w: p.c_w,
            c_ec: p.c_ec,
            diam: p.diam,
            rad: p.rad,
            wiener: p.wiener,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn single_vertex() {
        let p = profile(&Graph::empty(1)).unwrap();
        assert_eq!((p.tr.clone(), p.ec.clone()), (vec![0], vec![0]));
        assert_eq!((p.c_w, p.c_ec, p.diam, p.rad), (1, 1, 0, 0));
        assert_eq!(p.center, vec![0]);
    }

    #[test]
    fn tree_with_printed_transmissions() {
        let t = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        let p = profile(&t).unwrap();
        assert_eq!(p.tr, vec![18, 13, 10, 11, 14, 19, 15]);
        assert_eq!(p.c_w, 7);
        assert_eq!(p.ec_set, vec![3, 4, 5]);
        assert_eq!(p.c_ec, 3);
        assert_eq!(p.center, vec![2, 3]);
    }

    #[test]
    fn paw_and_cycles() {
        let paw = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let p = profile(&paw).unwrap();
        assert_eq!(p.tr_set, vec![3, 4, 5]);
        assert_eq!(p.ec_set, vec![1, 2]);
        for n in 3..=30 {
            let p = profile(&cycle(n)).unwrap();
            assert_eq!(p.tr_set, vec![(n * n / 4) as u64], "C_{n}");
        }
        assert_eq!(profile(&cycle(6)).unwrap().tr[0], 9);
    }

    #[test]
    fn path_formulas() {
        let choose2 = |m: usize| (m * m.saturating_sub(1) / 2) as u64;
        for n in 1..=20 {
            let p = profile(&path(n)).unwrap();
            for i in 1..=n {
                assert_eq!(p.tr[i - 1], choose2(i) + choose2(n - i + 1));
                assert_eq!(p.ec[i - 1] as usize, (i - 1).max(n - i));
            }
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(profile(&g), Err(GraphError::Disconnected));
        assert_eq!(distance_levels(&g), Err(GraphError::Disconnected));
        assert_eq!(profile(&Graph::empty(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn levels() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(distance_levels(&star).unwrap(), vec![vec![0], vec![1, 2, 3, 4]]);
        assert_eq!(
            distance_levels(&path(5)).unwrap(),
            vec![vec![2], vec![1, 3], vec![0, 4]]
        );
    }

    #[test]
    fn eccentric_sets_examples() {
        assert_eq!(eccentric_set(&path(4), 0).unwrap(), vec![3]);
        assert_eq!(eccentric_set(&cycle(5), 0).unwrap(), vec![2, 3]);
        let mut e = vec![];
        for x in 0..8usize {
            for b in 0..3 {
                if x < x ^ (1 << b) {
                    e.push((x, x ^ (1 << b)));
                }
            }
        }
        let q3 = Graph::new(8, &e).unwrap();
        for v in 0..8 {
            assert_eq!(eccentric_set(&q3, v).unwrap(), vec![v ^ 7]);
        }
        assert_eq!(
            eccentric_set(&q3, 8),
            Err(GraphError::VertexOutOfRange { v: 8, n: 8 })
        );
    }

    #[test]
    fn general_path_agrees_with_word_path() {
        let g = cycle(70);
        let p = profile(&g).unwrap();
        assert_eq!(p.tr_set, vec![70 * 70 / 4]);
        let h = path(40);
        let (tr, ec) = general_tr_ec(&h).unwrap();
        let q = profile(&h).unwrap();
        assert_eq!((tr, ec), (q.tr, q.ec));
    }
}
