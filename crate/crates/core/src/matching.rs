//! Hopcroft–Karp bipartite matching and its two consumers: maximum cliques in
//! a co-bipartite subgraph (through König's theorem) and the shared-colour
//! pairing used when lifting colourings.
//!
//! Visit orders are by ascending index everywhere, so results are
//! deterministic.

use std::collections::VecDeque;

use crate::error::{contract, internal, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); left];
        for &(l, r) in edges {
            assert!(l < left && r < right, "edge ({l}, {r}) out of range");
            adj[l].push(r);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        BipartiteGraph { left, right, adj }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

const FREE: usize = usize::MAX;

struct HopcroftKarp<'a> {
    g: &'a BipartiteGraph,
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    dist: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    fn run(g: &'a BipartiteGraph) -> Self {
        let mut hk = HopcroftKarp {
            g,
            mate_left: vec![FREE; g.left],
            mate_right: vec![FREE; g.right],
            dist: vec![0; g.left],
        };
        while hk.bfs() {
            for l in 0..g.left {
                if hk.mate_left[l] == FREE {
                    hk.dfs(l);
                }
            }
        }
        hk
    }

    /// Layers free left vertices at distance 0; true if some free right
    /// vertex is reachable.
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for l in 0..self.g.left {
            if self.mate_left[l] == FREE {
                self.dist[l] = 0;
                queue.push_back(l);
            } else {
                self.dist[l] = FREE;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &self.g.adj[l] {
                let m = self.mate_right[r];
                if m == FREE {
                    found = true;
                } else if self.dist[m] == FREE {
                    self.dist[m] = self.dist[l] + 1;
                    queue.push_back(m);
                }
            }
        }
        found
    }

    fn dfs(&mut self, l: usize) -> bool {
        for i in 0..self.g.adj[l].len() {
            let r = self.g.adj[l][i];
            let m = self.mate_right[r];
            if m == FREE || (self.dist[m] == self.dist[l] + 1 && self.dfs(m)) {
                self.mate_left[l] = r;
                self.mate_right[r] = l;
                return true;
            }
        }
        self.dist[l] = FREE;
        false
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate_left
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != FREE)
            .map(|(l, &r)| (l, r))
            .collect()
    }
}

/// Maximum-cardinality matching as `(left, right)` pairs sorted by left index.
pub fn max_matching(b: &BipartiteGraph) -> Vec<(usize, usize)> {
    HopcroftKarp::run(b).pairs()
}

/// A maximum independent set of `b`, as (kept left, kept right) index lists.
///
/// König: alternating reachability from the free *right* vertices yields a
/// minimum cover (R \ Z) ∪ (L ∩ Z); its complement (L \ Z) ∪ (R ∩ Z) is
/// returned. Also returns the matching size.
pub fn max_independent_set(b: &BipartiteGraph) -> (Vec<usize>, Vec<usize>, usize) {
    let hk = HopcroftKarp::run(b);
    let mut right_adj = vec![Vec::new(); b.right];
    for l in 0..b.left {
        for &r in &b.adj[l] {
            right_adj[r].push(l);
        }
    }
    let mut seen_left = vec![false; b.left];
    let mut seen_right = vec![false; b.right];
    let mut queue: VecDeque<usize> = (0..b.right).filter(|&r| hk.mate_right[r] == FREE).collect();
    for &r in &queue {
        seen_right[r] = true;
    }
    while let Some(r) = queue.pop_front() {
        for &l in &right_adj[r] {
            if seen_left[l] || hk.mate_left[l] == r {
                continue;
            }
            seen_left[l] = true;
            let next = hk.mate_left[l];
            if next != FREE && !seen_right[next] {
                seen_right[next] = true;
                queue.push_back(next);
            }
        }
    }
    let keep_left = (0..b.left).filter(|&l| !seen_left[l]).collect();
    let keep_right = (0..b.right).filter(|&r| seen_right[r]).collect();
    (keep_left, keep_right, hk.pairs().len())
}

/// Bipartite graph of the non-adjacent pairs between two vertex lists.
pub fn cross_nonedges(g: &Graph, left: &[usize], right: &[usize]) -> BipartiteGraph {
    let mut edges = Vec::new();
    for (i, &u) in left.iter().enumerate() {
        for (j, &v) in right.iter().enumerate() {
            if !g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    BipartiteGraph::new(left.len(), right.len(), &edges)
}

/// A maximum clique of G[K1 ∪ K2] for disjoint cliques `k1`, `k2`.
pub fn max_clique_co_bipartite(g: &Graph, k1: &VertexSet, k2: &VertexSet) -> Result<VertexSet> {
    if !k1.is_disjoint(k2) || !g.is_clique(k1) || !g.is_clique(k2) {
        return Err(contract("max_clique_co_bipartite needs two disjoint cliques"));
    }
    let (l, r) = (k1.to_vec(), k2.to_vec());
    let b = cross_nonedges(g, &l, &r);
    let (keep_l, keep_r, nu) = max_independent_set(&b);
    let clique = VertexSet::from_vertices(
        g.capacity(),
        keep_l.iter().map(|&i| l[i]).chain(keep_r.iter().map(|&j| r[j])),
    );
    if clique.len() + nu != l.len() + r.len() {
        return Err(internal(format!(
            "König identity failed: |X| = {}, matching = {nu}, |K1| + |K2| = {}",
            clique.len(),
            l.len() + r.len()
        )));
    }
    Ok(clique)
}

/// `k` disjoint pairs taken, in left order, from a maximum matching.
pub fn match_shared_colors(nonedges: &BipartiteGraph, k: usize) -> Result<Vec<(usize, usize)>> {
    let m = max_matching(nonedges);
    if k > m.len() {
        return Err(internal(format!(
            "need {k} disjoint non-adjacent pairs, maximum matching has {}",
            m.len()
        )));
    }
    Ok(m.into_iter().take(k).collect())
}
