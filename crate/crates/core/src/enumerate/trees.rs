//! Free trees from canonical level sequences, following the constant
//! amortized time algorithm of Wright, Richmond, Odlyzko and McKay on top of
//! the Beyer-Hedetniemi successor for rooted trees.

use crate::graph::{Graph, GraphBuilder};

use super::Shard;

/// Next rooted level sequence, rewriting from position `p`.
fn next_rooted(layout: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut out = layout.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits off the leftmost subtree of the root: `(left, rest)` where `left`
/// is re-rooted one level up and `rest` keeps the root.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn is_free_canonical(layout: &[usize]) -> (bool, usize) {
    let (left, rest) = split(layout);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let valid = rh > lh
        || (rh == lh
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    (valid, left.len())
}

/// Advances `candidate` to the next level sequence that is canonical for a
/// free tree (the candidate itself if it already is).
fn next_free(mut candidate: Vec<usize>) -> Vec<usize> {
    loop {
        let (valid, p) = is_free_canonical(&candidate);
        if valid {
            return candidate;
        }
        let mut next = next_rooted(&candidate, Some(p)).expect("p >= 1");
        if candidate[p] > 2 {
            let (left, _) = split(&next);
            let h = left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (i, l) in (1..=h + 1).enumerate() {
                next[len - (h + 1) + i] = l;
            }
        }
        candidate = next;
    }
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut b = GraphBuilder::new(layout.len());
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] < level {
                b.add_edge(i, j);
                break;
            }
            stack.pop();
        }
        stack.push(i);
    }
    b.build()
}

/// Lazy stream of free trees of one order, one per isomorphism class.
pub struct Trees {
    layout: Option<Vec<usize>>,
    small: Option<Graph>,
    shard: Shard,
    index: u64,
}

impl Trees {
    pub(crate) fn new(n: usize, shard: Shard) -> Trees {
        if n <= 2 {
            let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
            return Trees {
                layout: None,
                small: Some(Graph::new(n, edges).expect("static edge list")),
                shard,
                index: 0,
            };
        }
        // the path rooted at its center
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..n.div_ceil(2));
        Trees { layout: Some(layout), small: None, shard, index: 0 }
    }

    fn next_unsharded(&mut self) -> Option<Graph> {
        if let Some(g) = self.small.take() {
            return Some(g);
        }
        let layout = next_free(self.layout.take()?);
        let g = layout_to_graph(&layout);
        self.layout = next_rooted(&layout, None);
        Some(g)
    }
}

impl Iterator for Trees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let g = self.next_unsharded()?;
            let j = self.index;
            self.index += 1;
            if j % self.shard.count as u64 == self.shard.index as u64 {
                return Some(g);
            }
        }
    }
}
