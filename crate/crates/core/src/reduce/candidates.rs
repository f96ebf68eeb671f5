use std::fmt;

use crate::detect::CliquePair;
use crate::graph::{Graph, VertexPair, VertexSet};
use crate::reduce::operator::Placement;

/// Set of unordered vertex pairs still suspected of having a PH-embedding.
///
/// Stored as a symmetric bit matrix, so "all pairs {a, y}, a ∈ K, are
/// present" is a single subset test on row `y`.
#[derive(Clone, PartialEq, Eq)]
pub struct CandidateSet {
    rows: Vec<VertexSet>,
    len: usize,
}

impl CandidateSet {
    pub fn new(capacity: usize) -> Self {
        CandidateSet {
            rows: vec![VertexSet::new(capacity); capacity],
            len: 0,
        }
    }

    /// S = E(G).
    pub fn from_edges(g: &Graph) -> Self {
        let mut s = CandidateSet::new(g.capacity());
        for (u, v) in g.edges() {
            s.insert(VertexPair::new(u, v));
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, p: VertexPair) -> bool {
        self.rows[p.lo()].contains(p.hi())
    }

    pub fn insert(&mut self, p: VertexPair) -> bool {
        let fresh = self.rows[p.lo()].insert(p.hi());
        self.rows[p.hi()].insert(p.lo());
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, p: VertexPair) -> bool {
        let present = self.rows[p.lo()].remove(p.hi());
        self.rows[p.hi()].remove(p.lo());
        self.len -= present as usize;
        present
    }

    /// Lexicographically smallest pair.
    pub fn first(&self) -> Option<VertexPair> {
        if self.len == 0 {
            return None;
        }
        self.rows
            .iter()
            .enumerate()
            .find_map(|(u, row)| row.next_after(u).map(|v| VertexPair::new(u, v)))
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = VertexPair> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| VertexPair::new(u, v)))
    }

    fn clear_vertex(&mut self, x: usize) {
        let cap = self.capacity();
        let row = std::mem::replace(&mut self.rows[x], VertexSet::new(cap));
        for y in row.iter() {
            self.rows[y].remove(x);
        }
        self.len -= row.len();
    }
}

impl fmt::Debug for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs().map(|p| (p.lo(), p.hi()))).finish()
    }
}

/// Carries a candidate set across one reduction.
///
/// Pairs avoiding K1 ∪ K2 survive unchanged. A gadget vertex of A1 is paired
/// with an outside vertex `y` exactly when {a, y} ∈ S for every a ∈ K1, and
/// likewise for A2 with K2. Pairs inside the gadget are never kept.
pub fn reduce_candidate_set(s: &CandidateSet, pair: &CliquePair, placement: &Placement) -> CandidateSet {
    let both = pair.union();
    let mut wide = [Vec::new(), Vec::new()];
    for y in 0..s.capacity() {
        if both.contains(y) {
            continue;
        }
        for (side, k) in [pair.k1(), pair.k2()].into_iter().enumerate() {
            if k.is_subset(&s.rows[y]) {
                wide[side].push(y);
            }
        }
    }
    let mut out = s.clone();
    for x in both.iter() {
        out.clear_vertex(x);
    }
    for (side, ids) in [&placement.a1, &placement.a2].into_iter().enumerate() {
        for &a in ids {
            for &y in &wide[side] {
                out.insert(VertexPair::new(a, y));
            }
        }
    }
    out
}
