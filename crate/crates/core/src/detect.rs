//! Homogeneity and properness of clique pairs, and the PH-embedding search.
//!
//! The search grows two alternating sets from a seed edge `{u, v}`:
//! X0 = {u, v}, X1 = P(X0), X2 = P(X1), ... Every PH pair holding `u, v`
//! on one side contains the even sets on that side and the odd sets on the
//! other, so the search either reaches a fixpoint P(X_{t+1}) = X_t (a PH
//! pair) or produces a non-clique (no embedding exists). Both sides only grow,
//! which bounds the number of rounds by the vertex count.
//!
//! Per-vertex neighbour counters into each side are updated only for newly
//! added vertices, so one call costs O(n²) word and counter operations.

use crate::error::{contract, internal, Result};
use crate::graph::{Graph, VertexPair, VertexSet};

/// Two non-empty, disjoint cliques of some graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliquePair {
    k1: VertexSet,
    k2: VertexSet,
}

impl CliquePair {
    pub fn new(g: &Graph, k1: VertexSet, k2: VertexSet) -> Result<Self> {
        if k1.is_empty() || k2.is_empty() {
            return Err(contract("clique pair sides must be non-empty"));
        }
        if !k1.is_disjoint(&k2) {
            return Err(contract("clique pair sides must be disjoint"));
        }
        if !k1.union(&k2).is_subset(g.live()) {
            return Err(contract("clique pair references dead or missing vertices"));
        }
        if !g.is_clique(&k1) || !g.is_clique(&k2) {
            return Err(contract("clique pair sides must be cliques"));
        }
        Ok(CliquePair { k1, k2 })
    }

    /// Builds a pair from id lists.
    pub fn from_ids(g: &Graph, k1: &[usize], k2: &[usize]) -> Result<Self> {
        let n = g.capacity();
        if k1.iter().chain(k2).any(|&v| v >= n) {
            return Err(contract("clique pair vertex out of range"));
        }
        CliquePair::new(
            g,
            VertexSet::from_vertices(n, k1.iter().copied()),
            VertexSet::from_vertices(n, k2.iter().copied()),
        )
    }

    pub(crate) fn new_unchecked(k1: VertexSet, k2: VertexSet) -> Self {
        CliquePair { k1, k2 }
    }

    pub fn k1(&self) -> &VertexSet {
        &self.k1
    }

    pub fn k2(&self) -> &VertexSet {
        &self.k2
    }

    pub fn union(&self) -> VertexSet {
        self.k1.union(&self.k2)
    }

    /// The same pair with the sides swapped.
    pub fn swapped(&self) -> CliquePair {
        CliquePair {
            k1: self.k2.clone(),
            k2: self.k1.clone(),
        }
    }
}

/// A PH pair together with the seed edge it was found from; both seed
/// vertices lie in `pair.k1()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhEmbedding {
    pub pair: CliquePair,
    pub seed: VertexPair,
}

/// Every vertex outside the pair is complete or anticomplete to each side.
pub fn is_homogeneous_pair(g: &Graph, p: &CliquePair) -> bool {
    let both = p.union();
    g.vertices()
        .filter(|&z| !both.contains(z))
        .all(|z| !g.is_proper_to(z, &p.k1) && !g.is_proper_to(z, &p.k2))
}

/// Every vertex of each side is proper to the other side.
pub fn is_proper_pair(g: &Graph, p: &CliquePair) -> bool {
    p.k1.iter().all(|u| g.is_proper_to(u, &p.k2)) && p.k2.iter().all(|u| g.is_proper_to(u, &p.k1))
}

pub fn is_ph_pair(g: &Graph, p: &CliquePair) -> bool {
    is_proper_pair(g, p) && is_homogeneous_pair(g, p)
}

/// Work done by one embedding search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Vertex scans, counter updates and bitset word operations.
    pub ops: u64,
    /// Completed growth rounds.
    pub rounds: usize,
}

/// Looks for a PH pair with `u` and `v` on the same side.
///
/// Returns `Ok(None)` when `uv` is not an edge, when `u` and `v` are not
/// mutually non-universal, or when no embedding exists.
pub fn find_ph_embedding(g: &Graph, u: usize, v: usize) -> Result<Option<PhEmbedding>> {
    find_ph_embedding_with_stats(g, u, v).map(|(e, _)| e)
}

struct Side {
    set: VertexSet,
    hits: Vec<u32>,
}

impl Side {
    fn new(n: usize) -> Self {
        Side {
            set: VertexSet::new(n),
            hits: vec![0; n],
        }
    }

    fn add(&mut self, g: &Graph, x: usize, ops: &mut u64) {
        self.set.insert(x);
        for y in g.neighborhood(x).iter() {
            self.hits[y] += 1;
            *ops += 1;
        }
    }

    /// P(set), read off the counters.
    fn proper(&self, g: &Graph, ops: &mut u64) -> VertexSet {
        let size = self.set.len() as u32;
        let mut out = VertexSet::new(g.capacity());
        for z in g.vertices() {
            *ops += 1;
            let h = self.hits[z];
            if h > 0 && h < size && !self.set.contains(z) {
                out.insert(z);
            }
        }
        out
    }
}

pub fn find_ph_embedding_with_stats(g: &Graph, u: usize, v: usize) -> Result<(Option<PhEmbedding>, SearchStats)> {
    let mut stats = SearchStats::default();
    let n = g.capacity();
    if u == v || u >= n || v >= n || !g.has_edge(u, v) || g.is_universal(u, v) || g.is_universal(v, u) {
        return Ok((None, stats));
    }
    let words = n.div_ceil(64) as u64;

    let mut sides = [Side::new(n), Side::new(n)];
    sides[0].add(g, u, &mut stats.ops);
    sides[0].add(g, v, &mut stats.ops);
    let mut current = 0;

    // Each non-final round strictly grows one side, so n rounds suffice.
    for _ in 0..n {
        let other = 1 - current;
        let next = sides[current].proper(g, &mut stats.ops);
        if !sides[other].set.is_subset(&next) {
            return Err(internal(format!(
                "embedding search for {{{u},{v}}} shrank a side: {:?} -> {:?}",
                sides[other].set, next
            )));
        }
        if next.len() == sides[other].set.len() && stats.rounds > 0 {
            let pair = CliquePair::new_unchecked(sides[0].set.clone(), sides[1].set.clone());
            let seed = VertexPair::new(u, v);
            return Ok((Some(PhEmbedding { pair, seed }), stats));
        }
        let fresh = next.difference(&sides[other].set);
        for x in fresh.iter() {
            stats.ops += words;
            if !g.covers(x, &next) {
                return Ok((None, stats));
            }
        }
        for x in fresh.iter() {
            sides[other].add(g, x, &mut stats.ops);
        }
        stats.rounds += 1;
        current = other;
    }
    Err(internal(format!(
        "embedding search for {{{u},{v}}} exceeded {n} rounds"
    )))
}

/// Shrinks a non-trivial homogeneous pair (homogeneous, with an induced C4
/// across) to a PH pair by repeatedly dropping the smallest-id vertex that
/// is not proper to the opposite side.
///
/// Returns `None` if `p` is not such a pair or a side runs empty.
pub fn trim_nth_to_ph(g: &Graph, p: &CliquePair) -> Option<CliquePair> {
    if !is_homogeneous_pair(g, p) || !g.pair_has_induced_c4(&p.k1, &p.k2) {
        return None;
    }
    let (mut k1, mut k2) = (p.k1.clone(), p.k2.clone());
    loop {
        let drop1 = k1.iter().find(|&x| !g.is_proper_to(x, &k2));
        let drop2 = k2.iter().find(|&x| !g.is_proper_to(x, &k1));
        match (drop1, drop2) {
            (None, None) => break,
            (Some(a), Some(b)) if b < a => k2.remove(b),
            (Some(a), _) => k1.remove(a),
            (None, Some(b)) => k2.remove(b),
        };
        if k1.is_empty() || k2.is_empty() {
            return None;
        }
    }
    Some(CliquePair::new_unchecked(k1, k2))
}

/// The default candidate superset of PH(G): every edge.
pub fn ph_pairs_seed_set(g: &Graph) -> Vec<VertexPair> {
    g.edges().map(|(u, v)| VertexPair::new(u, v)).collect()
}

/// Scans the edges in lexicographic order and returns the first embedding.
pub fn find_any_ph_pair(g: &Graph) -> Result<Option<PhEmbedding>> {
    for (u, v) in g.edges() {
        if let Some(e) = find_ph_embedding(g, u, v)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}
