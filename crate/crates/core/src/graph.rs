//! Bit-parallel simple graphs and the elementary neighbourhood predicates.
//!
//! Adjacency rows are fixed-width bitmasks over the vertex-id space, so
//! "complete to", "anticomplete to" and "proper to" reduce to a handful of
//! word operations per query.
//!
//! Vertex ids are dense and 0-based. A graph also carries a *live* mask:
//! reductions that shrink a pair of cliques leave the freed ids dead instead
//! of renumbering the survivors, so ids stay stable across a whole reduction
//! run. Use [`Graph::compact`] to get a renumbered copy.

use std::fmt;

const WORD: usize = 64;

fn words_for(capacity: usize) -> usize {
    capacity.div_ceil(WORD)
}

/// A set of vertex ids below a fixed capacity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(capacity)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, iter: I) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of range {}", self.capacity);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Smallest member strictly greater than `v`.
    pub fn next_after(&self, v: usize) -> Option<usize> {
        let start = v + 1;
        if start >= self.capacity {
            return None;
        }
        let (mut w, b) = (start / WORD, start % WORD);
        let mut word = self.words[w] & (!0u64 << b);
        loop {
            if word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
            w += 1;
            if w >= self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a |= b);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= b);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= !b);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// An unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    lo: usize,
    hi: usize,
}

impl VertexPair {
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "a vertex pair needs two distinct vertices");
        VertexPair {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }
}

/// Simple undirected graph with optional integer vertex weights.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    live: VertexSet,
    weights: Option<Vec<i64>>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::new(n); n],
            live: VertexSet::full(n),
            weights: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Size of the id space; dead ids count towards it.
    pub fn capacity(&self) -> usize {
        self.rows.len()
    }

    /// Number of live vertices.
    pub fn order(&self) -> usize {
        self.live.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn live(&self) -> &VertexSet {
        &self.live
    }

    pub fn is_live(&self, v: usize) -> bool {
        self.live.contains(v)
    }

    pub fn vertices(&self) -> Iter<'_> {
        self.live.iter()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop on vertex {u}");
        assert!(self.is_live(u) && self.is_live(v), "edge {u}-{v} touches a dead vertex");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    /// Drops every edge at `v` and marks it dead.
    pub(crate) fn kill(&mut self, v: usize) {
        let cap = self.capacity();
        let row = std::mem::replace(&mut self.rows[v], VertexSet::new(cap));
        for u in row.iter() {
            self.rows[u].remove(v);
        }
        self.live.remove(v);
    }

    /// Marks a dead id live again, with no edges.
    pub(crate) fn revive(&mut self, v: usize) {
        debug_assert!(self.rows[v].is_empty());
        self.live.insert(v);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// N(v); never contains `v`.
    pub fn neighborhood(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Weight of `v`, 1 when the graph is unweighted.
    pub fn weight(&self, v: usize) -> i64 {
        self.weights.as_ref().map_or(1, |w| w[v])
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    /// An empty weight vector on an empty graph is stored as no weights.
    pub fn set_weights(&mut self, weights: Option<Vec<i64>>) {
        if let Some(w) = &weights {
            assert_eq!(w.len(), self.capacity(), "one weight per vertex id");
        }
        self.weights = weights.filter(|w| !w.is_empty());
    }

    pub fn with_weights(mut self, weights: Vec<i64>) -> Self {
        self.set_weights(Some(weights));
        self
    }

    pub fn weight_of<'a, I: IntoIterator<Item = &'a usize>>(&self, vertices: I) -> i64 {
        vertices.into_iter().map(|&v| self.weight(v)).sum()
    }

    /// Complement on the live vertices.
    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.capacity());
        for v in 0..self.capacity() {
            let mut row = VertexSet::new(self.capacity());
            if self.is_live(v) {
                row = self.live.difference(&self.rows[v]);
                row.remove(v);
            }
            rows.push(row);
        }
        Graph {
            rows,
            live: self.live.clone(),
            weights: self.weights.clone(),
        }
    }

    /// Renumbers live vertices to `0..order()` preserving their relative order.
    /// Returns the new graph and, for each new id, the id it came from.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let old_ids = self.live.to_vec();
        let mut new_id = vec![usize::MAX; self.capacity()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::new(old_ids.len());
        for (u, v) in self.edges() {
            g.add_edge(new_id[u], new_id[v]);
        }
        if let Some(w) = &self.weights {
            g.set_weights(Some(old_ids.iter().map(|&v| w[v]).collect()));
        }
        (g, old_ids)
    }

    /// Whether `v` is adjacent to every vertex of `set`. Vacuously true on ∅.
    ///
    /// Panics if `v ∈ set`.
    pub fn is_complete_to(&self, v: usize, set: &VertexSet) -> bool {
        assert!(!set.contains(v), "vertex {v} belongs to the tested set");
        set.is_subset(&self.rows[v])
    }

    /// Whether `v` has no neighbour in `set`. Vacuously true on ∅.
    ///
    /// Panics if `v ∈ set`.
    pub fn is_anticomplete_to(&self, v: usize, set: &VertexSet) -> bool {
        assert!(!set.contains(v), "vertex {v} belongs to the tested set");
        set.is_disjoint(&self.rows[v])
    }

    /// At least one neighbour and one non-neighbour in `clique`.
    pub fn is_proper_to(&self, v: usize, clique: &VertexSet) -> bool {
        let hits = self.rows[v].intersection_len(clique);
        hits > 0 && hits < clique.len()
    }

    /// P(K): all live vertices outside `clique` that are proper to it.
    pub fn proper_set(&self, clique: &VertexSet) -> VertexSet {
        let size = clique.len();
        let mut out = VertexSet::new(self.capacity());
        for v in self.vertices() {
            if clique.contains(v) {
                continue;
            }
            let hits = self.rows[v].intersection_len(clique);
            if hits > 0 && hits < size {
                out.insert(v);
            }
        }
        out
    }

    /// `v` is universal to `u`: adjacent to `u` and to all of N(u) \ {v}.
    pub fn is_universal(&self, v: usize, u: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.rows[u]
            .words()
            .iter()
            .zip(self.rows[v].words())
            .enumerate()
            .all(|(i, (nu, nv))| {
                let mut missing = nu & !nv;
                if i == v / WORD {
                    missing &= !(1u64 << (v % WORD));
                }
                missing == 0
            })
    }

    /// `set \ {v}` ⊆ N(v).
    pub(crate) fn covers(&self, v: usize, set: &VertexSet) -> bool {
        set.words()
            .iter()
            .zip(self.rows[v].words())
            .enumerate()
            .all(|(i, (s, r))| {
                let mut missing = s & !r;
                if i == v / WORD {
                    missing &= !(1u64 << (v % WORD));
                }
                missing == 0
            })
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.covers(v, set))
    }

    /// Whether G[S1 ∪ S2] has an induced C4 with two vertices on each side,
    /// for disjoint cliques `s1`, `s2`.
    ///
    /// Uses the chain criterion: there is no such C4 exactly when the
    /// cross-neighbourhoods N(u) ∩ S2, u ∈ S1, are totally ordered by inclusion.
    pub fn pair_has_induced_c4(&self, s1: &VertexSet, s2: &VertexSet) -> bool {
        debug_assert!(s1.is_disjoint(s2), "clique pair must be disjoint");
        debug_assert!(self.is_clique(s1) && self.is_clique(s2), "sides must be cliques");
        let mut cross: Vec<VertexSet> = s1.iter().map(|u| self.rows[u].intersection(s2)).collect();
        cross.sort_by_key(VertexSet::len);
        !cross.windows(2).all(|w| w[0].is_subset(&w[1]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("live", &self.live)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("weights", &self.weights)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    fn set(items: &[usize], n: usize) -> VertexSet {
        VertexSet::from_vertices(n, items.iter().copied())
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![3, 64, 129]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.next_after(3), Some(64));
        assert_eq!(s.next_after(64), Some(129));
        assert_eq!(s.next_after(129), None);
        assert!(s.remove(64));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(c4().neighborhood(0).to_vec(), vec![1, 2]);
        assert!(Graph::new(1).neighborhood(0).is_empty());
        assert_eq!(Graph::complete(4).neighborhood(2).to_vec(), vec![0, 1, 3]);
    }

    #[test]
    fn complete_and_anticomplete() {
        let g = c4();
        assert!(g.is_complete_to(0, &set(&[1, 2], 4)));
        assert!(g.is_anticomplete_to(0, &set(&[3], 4)));
        let empty = VertexSet::new(4);
        assert!(g.is_complete_to(0, &empty) && g.is_anticomplete_to(0, &empty));
    }

    #[test]
    #[should_panic]
    fn complete_to_rejects_member() {
        c4().is_complete_to(0, &set(&[0, 1], 4));
    }

    #[test]
    fn proper_examples() {
        let g = c4();
        assert!(g.is_proper_to(2, &set(&[0, 1], 4)));
        let mut h = Graph::new(5);
        for (u, v) in [(0, 1), (0, 2), (1, 3), (2, 3), (4, 0), (4, 1)] {
            h.add_edge(u, v);
        }
        assert!(!h.is_proper_to(4, &set(&[0, 1], 5)));
        for v in 1..4 {
            assert!(!g.is_proper_to(v, &set(&[0], 4)));
        }
    }

    #[test]
    fn proper_set_examples() {
        assert_eq!(c4().proper_set(&set(&[0, 1], 4)).to_vec(), vec![2, 3]);
        let k5 = Graph::complete(5);
        assert!(k5.proper_set(&set(&[0, 3], 5)).is_empty());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.proper_set(&set(&[0, 1], 3)).to_vec(), vec![2]);
    }

    #[test]
    fn universal_examples() {
        assert!(!c4().is_universal(1, 0));
        let k3 = Graph::complete(3);
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    assert!(k3.is_universal(v, u));
                }
            }
        }
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(star.is_universal(0, 2));
        assert!(!star.is_universal(2, 0));
    }

    #[test]
    fn clique_examples() {
        let g = c4();
        assert!(g.is_clique(&set(&[0, 1], 4)));
        assert!(!g.is_clique(&set(&[0, 3], 4)));
        assert!(g.is_clique(&VertexSet::new(4)));
    }

    #[test]
    fn induced_c4_examples() {
        let g = c4();
        assert!(g.pair_has_induced_c4(&set(&[0, 1], 4), &set(&[2, 3], 4)));
        let k4 = Graph::complete(4);
        assert!(!k4.pair_has_induced_c4(&set(&[0, 1], 4), &set(&[2, 3], 4)));
        assert!(!g.pair_has_induced_c4(&set(&[0], 4), &set(&[2], 4)));
    }

    #[test]
    fn compact_and_complement() {
        let mut g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).with_weights(vec![1, 2, 3, 4, 5]);
        g.kill(2);
        assert_eq!(g.order(), 4);
        let (h, ids) = g.compact();
        assert_eq!(ids, vec![0, 1, 3, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(h.weights().unwrap(), &[1, 2, 4, 5]);
        let c = g.complement();
        assert!(!c.is_live(2));
        assert_eq!(c.edge_count(), 6 - 2);
    }
}
