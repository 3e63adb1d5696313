//! Membership tests for the transmission- and eccentricity-based graph classes.

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::invariants::{eccentric_sets, levels_from_center, profile, InvariantProfile};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    /// All transmissions equal.
    pub transmission_regular: bool,
    /// All transmissions pairwise distinct.
    pub transmission_irregular: bool,
    /// No two transmissions are congruent modulo the order.
    pub transmission_indivisible: bool,
    /// Transmissions are `n` consecutive integers.
    pub interval_irregular: bool,
    /// Common difference of the sorted transmission set when it is an
    /// arithmetic progression; `0` when there is a single transmission.
    pub arithmetic_step: Option<u64>,
    pub self_centered: bool,
    pub k_self_centered: Option<u32>,
    /// Exactly two distinct degrees occur.
    pub bidegreed: bool,
    pub center_regular_tree: bool,
    pub ud_pairs: Vec<(usize, usize)>,
}

pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let p = profile(g)?;
    classify_with(g, &p)
}

/// Classification reusing an already computed profile of `g`.
pub fn classify_with(g: &Graph, p: &InvariantProfile) -> Result<ClassificationReport> {
    let mut r = classify_transmissions(p);
    r.self_centered = p.c_ec == 1;
    r.k_self_centered = r.self_centered.then_some(p.diam);
    r.bidegreed = is_bidegreed(g);
    r.center_regular_tree = g.is_tree() && levels_have_uniform_degree(g, &p.center);
    r.ud_pairs = if g.order() >= 2 { ud_pairs_with(g, p)? } else { Vec::new() };
    Ok(r)
}

/// The transmission-only flags, which need nothing but the profile.
pub fn classify_transmissions(p: &InvariantProfile) -> ClassificationReport {
    let n = p.n as u64;
    let irregular = p.c_w == p.n;
    let indivisible = irregular && {
        let mut seen = vec![false; p.n];
        p.tr.iter().all(|&t| !std::mem::replace(&mut seen[(t % n) as usize], true))
    };
    let interval = irregular && p.tr_set[p.n - 1] - p.tr_set[0] == n - 1;
    ClassificationReport {
        transmission_regular: p.c_w == 1,
        transmission_irregular: irregular,
        transmission_indivisible: indivisible,
        interval_irregular: interval,
        arithmetic_step: arithmetic_step(&p.tr_set),
        ..Default::default()
    }
}

/// Step of a sorted set that forms an arithmetic progression.
pub fn arithmetic_step(sorted: &[u64]) -> Option<u64> {
    match sorted {
        [] => None,
        [_] => Some(0),
        [a, b, rest @ ..] => {
            let step = b - a;
            let mut prev = *b;
            for &x in rest {
                if x - prev != step {
                    return None;
                }
                prev = x;
            }
            Some(step)
        }
    }
}

pub fn is_bidegreed(g: &Graph) -> bool {
    let mut d = g.degrees();
    d.sort_unstable();
    d.dedup();
    d.len() == 2
}

pub fn is_center_regular_tree(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    let p = profile(t)?;
    Ok(levels_have_uniform_degree(t, &p.center))
}

fn levels_have_uniform_degree(g: &Graph, center: &[usize]) -> bool {
    levels_from_center(g, center).iter().all(|level| {
        let d = g.deg(level[0]);
        level.iter().all(|&v| g.deg(v) == d)
    })
}

/// Universally diametrical pairs: `(u, v)` with `d(u, v) = diam` such that
/// every other vertex has `u` or `v` among its eccentric vertices. Sorted
/// lexicographically with `u < v`.
pub fn ud_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if g.order() < 2 {
        return Err(GraphError::TooSmall(g.order()));
    }
    let p = profile(g)?;
    ud_pairs_with(g, &p)
}

fn ud_pairs_with(g: &Graph, p: &InvariantProfile) -> Result<Vec<(usize, usize)>> {
    let n = g.order();
    let ecc = eccentric_sets(g)?;
    let has = |set: &[u64], x: usize| set[x / 64] >> (x % 64) & 1 == 1;
    let mut out = Vec::new();
    for u in 0..n {
        if p.ec[u] != p.diam {
            continue;
        }
        for v in u + 1..n {
            // diametrical: v is eccentric to u and ec(u) = diam
            if p.ec[v] != p.diam || !has(&ecc[u], v) {
                continue;
            }
            let universal = (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| has(&ecc[w], u) || has(&ecc[w], v));
            if universal {
                out.push((u, v));
            }
        }
    }
    Ok(out)
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

    fn spider_7() -> Graph {
        Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap()
    }

    #[test]
    fn steps() {
        assert_eq!(arithmetic_step(&[5]), Some(0));
        assert_eq!(arithmetic_step(&[8, 12]), Some(4));
        assert_eq!(arithmetic_step(&[7, 9, 11, 13]), Some(2));
        assert_eq!(arithmetic_step(&[3, 4, 6]), None);
        assert_eq!(arithmetic_step(&[]), None);
    }

    #[test]
    fn branched_tree_is_irregular_but_divisible() {
        let r = classify(&spider_7()).unwrap();
        assert!(r.transmission_irregular);
        assert!(!r.transmission_indivisible);
        assert!(!r.interval_irregular);
        assert!(!r.center_regular_tree);
        assert_eq!(is_center_regular_tree(&spider_7()), Ok(false));
    }

    #[test]
    fn center_regular_examples() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(is_center_regular_tree(&star), Ok(true));
        let binary = Graph::new(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(is_center_regular_tree(&binary), Ok(true));
        assert_eq!(is_center_regular_tree(&cycle(4)), Err(GraphError::NotATree));
        assert_eq!(is_center_regular_tree(&Graph::empty(1)), Ok(true));
        assert_eq!(is_center_regular_tree(&path(2)), Ok(true));
        // bicentral with unequal central degrees
        let t = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!(is_center_regular_tree(&t), Ok(false));
    }

    #[test]
    fn regular_and_self_centered() {
        let r = classify(&cycle(5)).unwrap();
        assert!(r.transmission_regular && r.self_centered);
        assert_eq!(r.k_self_centered, Some(2));
        assert_eq!(r.arithmetic_step, Some(0));
        assert!(!r.bidegreed);
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = classify(&star).unwrap();
        assert!(r.bidegreed && !r.self_centered && r.k_self_centered.is_none());
    }

    #[test]
    fn ud_pair_examples() {
        for n in 2..8 {
            assert!(ud_pairs(&path(n)).unwrap().contains(&(0, n - 1)));
        }
        // every other vertex of an even cycle sees only its own antipode
        for k in [2, 3] {
            assert!(ud_pairs(&cycle(2 * k)).unwrap().is_empty());
        }
        assert_eq!(ud_pairs(&path(2)).unwrap(), vec![(0, 1)]);
        assert_eq!(ud_pairs(&Graph::empty(1)), Err(GraphError::TooSmall(1)));
    }
}
