//! Replacement strategies: rules that pick the gadget for a PH pair.
//!
//! A strategy only sees the pair itself ([`PairView`]): the two cliques,
//! the cross adjacency between them and their weights.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::detect::CliquePair;
use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::matching::{max_independent_set, BipartiteGraph};
use crate::reduce::gadget::NonProper2Clique;

/// The subgraph induced on K1 ∪ K2, with weights.
#[derive(Clone, Debug)]
pub struct PairView {
    pub k1: Vec<usize>,
    pub k2: Vec<usize>,
    /// `adj[i][j]`: whether `k1[i]` and `k2[j]` are adjacent.
    pub adj: Vec<Vec<bool>>,
    pub w1: Vec<i64>,
    pub w2: Vec<i64>,
}

impl PairView {
    pub fn new(g: &Graph, pair: &CliquePair) -> Self {
        let k1 = pair.k1().to_vec();
        let k2 = pair.k2().to_vec();
        let adj = k1
            .iter()
            .map(|&u| k2.iter().map(|&v| g.has_edge(u, v)).collect())
            .collect();
        let w1 = k1.iter().map(|&v| g.weight(v)).collect();
        let w2 = k2.iter().map(|&v| g.weight(v)).collect();
        PairView { k1, k2, adj, w1, w2 }
    }

    /// Non-adjacent cross pairs, by local index.
    pub fn nonedges(&self) -> BipartiteGraph {
        let mut edges = Vec::new();
        for (i, row) in self.adj.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if !a {
                    edges.push((i, j));
                }
            }
        }
        BipartiteGraph::new(self.k1.len(), self.k2.len(), &edges)
    }
}

/// What a strategy recorded about its choice; needed to lift solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StrategyData {
    /// The maximum clique X of G[K1 ∪ K2] whose cross edges were kept.
    MaxClique {
        clique: Vec<usize>,
    },
    /// The one cross non-edge left out, as `[k1 vertex, k2 vertex]`.
    StableSet {
        omitted: [usize; 2],
    },
    None,
}

pub trait Strategy {
    fn name(&self) -> &'static str;

    fn build(&self, view: &PairView) -> Result<(NonProper2Clique, StrategyData)>;
}

/// Keeps only the cross edges inside one maximum clique of G[K1 ∪ K2].
/// Preserves χ and ω; colourings lift back.
#[derive(Clone, Copy, Debug, Default)]
pub struct MaxClique;

impl Strategy for MaxClique {
    fn name(&self) -> &'static str {
        "max-clique"
    }

    fn build(&self, view: &PairView) -> Result<(NonProper2Clique, StrategyData)> {
        let (keep1, keep2, _) = max_independent_set(&view.nonedges());
        let mut in1 = vec![false; view.k1.len()];
        let mut in2 = vec![false; view.k2.len()];
        keep1.iter().for_each(|&i| in1[i] = true);
        keep2.iter().for_each(|&j| in2[j] = true);
        let cross = in1.iter().map(|&a| in2.iter().map(|&b| a && b).collect()).collect();
        let mut clique: Vec<usize> = keep1
            .iter()
            .map(|&i| view.k1[i])
            .chain(keep2.iter().map(|&j| view.k2[j]))
            .collect();
        clique.sort_unstable();
        Ok((NonProper2Clique::new(cross)?, StrategyData::MaxClique { clique }))
    }
}

/// Adds every cross edge except the heaviest non-adjacent cross pair.
/// Preserves the maximum weight of a stable set.
#[derive(Clone, Copy, Debug, Default)]
pub struct StableSet;

impl Strategy for StableSet {
    fn name(&self) -> &'static str {
        "stable-set"
    }

    fn build(&self, view: &PairView) -> Result<(NonProper2Clique, StrategyData)> {
        let mut best: Option<(i64, usize, usize)> = None;
        for (i, row) in view.adj.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                let w = view.w1[i] + view.w2[j];
                if !a && best.is_none_or(|(bw, _, _)| w > bw) {
                    best = Some((w, i, j));
                }
            }
        }
        let (_, i, j) = best.ok_or_else(|| contract("pair has no cross non-edge"))?;
        let mut cross = vec![vec![true; view.k2.len()]; view.k1.len()];
        cross[i][j] = false;
        Ok((
            NonProper2Clique::new(cross)?,
            StrategyData::StableSet {
                omitted: [view.k1[i], view.k2[j]],
            },
        ))
    }
}

/// Replaces the pair by two non-adjacent single vertices.
#[derive(Clone, Copy, Debug, Default)]
pub struct Collapse;

impl Strategy for Collapse {
    fn name(&self) -> &'static str {
        "collapse"
    }

    fn build(&self, _view: &PairView) -> Result<(NonProper2Clique, StrategyData)> {
        Ok((NonProper2Clique::collapse(), StrategyData::None))
    }
}

/// The built-in strategies, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    MaxClique,
    StableSet,
    Collapse,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 3] = [StrategyKind::MaxClique, StrategyKind::StableSet, StrategyKind::Collapse];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::MaxClique => "max-clique",
            StrategyKind::StableSet => "stable-set",
            StrategyKind::Collapse => "collapse",
        }
    }
}

impl Strategy for StrategyKind {
    fn name(&self) -> &'static str {
        StrategyKind::name(*self)
    }

    fn build(&self, view: &PairView) -> Result<(NonProper2Clique, StrategyData)> {
        match self {
            StrategyKind::MaxClique => MaxClique.build(view),
            StrategyKind::StableSet => StableSet.build(view),
            StrategyKind::Collapse => Collapse.build(view),
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| contract(format!("unknown strategy `{s}`")))
    }
}
