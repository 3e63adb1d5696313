//! Isomorph-free generation of connected graphs and free trees.

mod canon;
mod connected;
mod small;
mod trees;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codec::encode_graph6;
use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub use canon::{canonicalize, Canon, Perm};
pub use connected::ConnectedGraphs;
pub use small::{SmallGraph, SMALL_MAX};
pub use trees::Trees;

/// Largest order accepted for connected-graph generation.
pub const MAX_CONNECTED_ORDER: usize = 11;
/// Largest order accepted for tree generation.
pub const MAX_TREE_ORDER: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    ConnectedGraphs,
    Trees,
}

/// Partition of the search into `count` disjoint parts; this is part `index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Shard> {
        if count == 0 || index >= count {
            return Err(GraphError::BadParameter(format!("invalid shard {index}/{count}")));
        }
        Ok(Shard { index, count })
    }

    /// Part `chunk` of `chunks` of this shard, itself a shard of the whole.
    pub fn subdivide(self, chunk: usize, chunks: usize) -> Shard {
        Shard { index: self.index + self.count * chunk, count: self.count * chunks }
    }
}

impl Default for Shard {
    fn default() -> Shard {
        Shard::WHOLE
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

impl FromStr for Shard {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Shard> {
        let bad = || GraphError::BadParameter(format!("shard '{s}' is not of the form i/k"));
        let (i, k) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(i.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub mode: Mode,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub shard: Shard,
}

impl GeneratorConfig {
    pub fn connected(n: usize) -> GeneratorConfig {
        GeneratorConfig { n, mode: Mode::ConnectedGraphs, min_degree: None, max_degree: None, shard: Shard::WHOLE }
    }

    pub fn trees(n: usize) -> GeneratorConfig {
        GeneratorConfig { mode: Mode::Trees, ..GeneratorConfig::connected(n) }
    }

    pub fn with_shard(mut self, shard: Shard) -> GeneratorConfig {
        self.shard = shard;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let cap = match self.mode {
            Mode::ConnectedGraphs => MAX_CONNECTED_ORDER,
            Mode::Trees => MAX_TREE_ORDER,
        };
        if self.n == 0 || self.n > cap {
            return Err(GraphError::BadParameter(format!(
                "order {} outside 1..={cap} for {:?}",
                self.n, self.mode
            )));
        }
        Shard::new(self.shard.index, self.shard.count)?;
        if let (Some(lo), Some(hi)) = (self.min_degree, self.max_degree) {
            if lo > hi {
                return Err(GraphError::BadParameter(format!("degree bounds {lo} > {hi}")));
            }
        }
        Ok(())
    }
}

pub fn connected_graphs(cfg: &GeneratorConfig) -> Result<ConnectedGraphs> {
    cfg.validate()?;
    if cfg.mode != Mode::ConnectedGraphs {
        return Err(GraphError::BadParameter("config is not for connected graphs".into()));
    }
    Ok(ConnectedGraphs::new(cfg))
}

/// Free trees of order `cfg.n`. Degree bounds are applied as filters.
pub fn trees(cfg: &GeneratorConfig) -> Result<impl Iterator<Item = Graph> + Send> {
    cfg.validate()?;
    if cfg.mode != Mode::Trees {
        return Err(GraphError::BadParameter("config is not for trees".into()));
    }
    let (lo, hi) = (cfg.min_degree.unwrap_or(0), cfg.max_degree.unwrap_or(usize::MAX));
    Ok(Trees::new(cfg.n, cfg.shard).filter(move |t| t.degrees().iter().all(|&d| lo <= d && d <= hi)))
}

/// The generator selected by `cfg.mode`.
pub fn generate(cfg: &GeneratorConfig) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    Ok(match cfg.mode {
        Mode::ConnectedGraphs => Box::new(connected_graphs(cfg)?),
        Mode::Trees => Box::new(trees(cfg)?),
    })
}

/// Number of graphs the configuration emits.
pub fn count(cfg: &GeneratorConfig) -> Result<u64> {
    Ok(match cfg.mode {
        Mode::ConnectedGraphs => {
            let mut g = connected_graphs(cfg)?;
            let mut c = 0;
            while g.next_small().is_some() {
                c += 1;
            }
            c
        }
        Mode::Trees => trees(cfg)?.count() as u64,
    })
}

/// Byte string equal for two graphs exactly when they are isomorphic: the
/// graph6 record of the canonically relabelled graph.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let s = SmallGraph::from_graph(g)?;
    Ok(encode_graph6(&canonicalize(&s).graph.to_graph()))
}
