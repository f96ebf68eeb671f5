//! Exponential-time ground truth for small graphs.
//!
//! Everything here works on plain `u64` adjacency masks and re-derives the
//! definitions from scratch; none of it calls into the detection or
//! reduction code it is used to check. Runs above the configured vertex cap
//! fail with [`Error::OracleCap`] instead of truncating.

use std::collections::BTreeSet;

use crate::detect::CliquePair;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPair, VertexSet};

pub const DEFAULT_CAP: usize = 12;
pub const DEFAULT_PERFECT_CAP: usize = 11;

/// Dense bitmask copy of a small graph.
#[derive(Clone, Debug)]
struct Masks {
    live: u64,
    adj: Vec<u64>,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask of ids strictly greater than `v`.
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

fn members(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

impl Masks {
    fn new(g: &Graph, cap: usize) -> Result<Self> {
        if g.order() > cap || g.capacity() > 64 {
            let n = if g.order() > cap { g.order() } else { g.capacity() };
            return Err(Error::OracleCap { n, cap });
        }
        let mut live = 0;
        let mut adj = vec![0u64; g.capacity()];
        for v in g.vertices() {
            live |= bit(v);
            for u in g.neighborhood(v).iter() {
                adj[v] |= bit(u);
            }
        }
        Ok(Masks { live, adj })
    }

    fn complement(&self) -> Masks {
        let adj = (0..self.adj.len())
            .map(|v| {
                if self.live & bit(v) == 0 {
                    0
                } else {
                    self.live & !self.adj[v] & !bit(v)
                }
            })
            .collect();
        Masks { live: self.live, adj }
    }

    fn cliques(&self) -> Vec<u64> {
        fn grow(m: &Masks, clique: u64, cand: u64, out: &mut Vec<u64>) {
            for v in members(cand) {
                let next = clique | bit(v);
                out.push(next);
                // only extend with larger ids so each clique appears once
                grow(m, next, cand & m.adj[v] & above(v), out);
            }
        }
        let mut out = Vec::new();
        grow(self, 0, self.live, &mut out);
        out
    }

    fn proper_to(&self, v: usize, clique: u64) -> bool {
        let hits = self.adj[v] & clique;
        hits != 0 && hits != clique
    }

    fn homogeneous(&self, c1: u64, c2: u64) -> bool {
        members(self.live & !(c1 | c2)).all(|z| !self.proper_to(z, c1) && !self.proper_to(z, c2))
    }

    fn proper_pair(&self, c1: u64, c2: u64) -> bool {
        members(c1).all(|u| self.proper_to(u, c2)) && members(c2).all(|u| self.proper_to(u, c1))
    }

    /// a, b ∈ c1 and c, d ∈ c2 with ac, bd edges and ad, bc non-edges.
    fn cross_c4(&self, c1: u64, c2: u64) -> bool {
        for a in members(c1) {
            for b in members(c1) {
                for c in members(c2 & self.adj[a] & !self.adj[b]) {
                    if members(c2 & self.adj[b] & !self.adj[a]).any(|d| d != c) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// `v` universal to `u`.
    fn universal(&self, v: usize, u: usize) -> bool {
        self.adj[u] & bit(v) != 0 && self.adj[u] & !bit(v) & !self.adj[v] == 0
    }

    fn clique_pairs(&self, min_side: u32) -> Vec<(u64, u64)> {
        let cliques: Vec<u64> = self
            .cliques()
            .into_iter()
            .filter(|c| c.count_ones() >= min_side)
            .collect();
        let mut out = Vec::new();
        for (i, &c1) in cliques.iter().enumerate() {
            for &c2 in &cliques[i + 1..] {
                if c1 & c2 == 0 {
                    out.push(canonical(c1, c2));
                }
            }
        }
        out
    }
}

/// Orders a pair so the side with the smallest vertex comes first.
fn canonical(c1: u64, c2: u64) -> (u64, u64) {
    if c1.trailing_zeros() < c2.trailing_zeros() {
        (c1, c2)
    } else {
        (c2, c1)
    }
}

fn to_pair(g: &Graph, (c1, c2): (u64, u64)) -> CliquePair {
    let n = g.capacity();
    CliquePair::new_unchecked(
        VertexSet::from_vertices(n, members(c1)),
        VertexSet::from_vertices(n, members(c2)),
    )
}

/// Vertex-count caps for the oracle runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
    pub perfect_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_CAP,
            perfect_cap: DEFAULT_PERFECT_CAP,
        }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap, perfect_cap: cap }
    }

    /// All PH pairs, each once, the side holding the smallest id first.
    pub fn ph_pairs(&self, g: &Graph) -> Result<Vec<CliquePair>> {
        let m = Masks::new(g, self.cap)?;
        let mut found: Vec<(u64, u64)> = m
            .clique_pairs(2)
            .into_iter()
            .filter(|&(c1, c2)| m.proper_pair(c1, c2) && m.homogeneous(c1, c2) && m.cross_c4(c1, c2))
            .collect();
        found.sort_unstable();
        Ok(found.into_iter().map(|p| to_pair(g, p)).collect())
    }

    /// PH(G): adjacent, mutually non-universal pairs lying on one side of a PH pair.
    pub fn ph_seed_pairs(&self, g: &Graph) -> Result<BTreeSet<VertexPair>> {
        let m = Masks::new(g, self.cap)?;
        let mut out = BTreeSet::new();
        for pair in self.ph_pairs(g)? {
            for side in [pair.k1(), pair.k2()] {
                let ids = side.to_vec();
                for (i, &u) in ids.iter().enumerate() {
                    for &v in &ids[i + 1..] {
                        if !m.universal(u, v) && !m.universal(v, u) {
                            out.insert(VertexPair::new(u, v));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Homogeneous clique pairs that are not complete to each other and have
    /// no induced C4 across.
    pub fn c4_free_homogeneous_pairs(&self, g: &Graph) -> Result<Vec<CliquePair>> {
        let m = Masks::new(g, self.cap)?;
        let mut found: Vec<(u64, u64)> = m
            .clique_pairs(1)
            .into_iter()
            .filter(|&(c1, c2)| {
                let complete = members(c1).all(|u| m.adj[u] & c2 == c2);
                !complete && !m.cross_c4(c1, c2) && m.homogeneous(c1, c2)
            })
            .collect();
        found.sort_unstable();
        Ok(found.into_iter().map(|p| to_pair(g, p)).collect())
    }

    /// An optimal colouring, indexed by vertex id; colours are `0..χ`.
    pub fn coloring(&self, g: &Graph) -> Result<Vec<usize>> {
        let m = Masks::new(g, self.cap)?;
        let mut order: Vec<usize> = members(m.live).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(m.adj[v].count_ones()));

        fn place(m: &Masks, order: &[usize], k: usize, colors: &mut [usize]) -> bool {
            let Some((&v, rest)) = order.split_first() else {
                return true;
            };
            let used = members(m.adj[v])
                .filter(|&u| colors[u] != usize::MAX)
                .fold(0u64, |acc, u| acc | bit(colors[u]));
            // colour c+1 only after c has been used somewhere, to skip symmetric branches
            let max_used = colors.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
            for c in 0..k.min(max_used + 1) {
                if used & bit(c) == 0 {
                    colors[v] = c;
                    if place(m, rest, k, colors) {
                        return true;
                    }
                    colors[v] = usize::MAX;
                }
            }
            false
        }

        for k in 0..=order.len() {
            let mut colors = vec![usize::MAX; g.capacity()];
            if place(&m, &order, k, &mut colors) {
                for c in &mut colors {
                    if *c == usize::MAX {
                        *c = 0;
                    }
                }
                return Ok(colors);
            }
        }
        unreachable!("n colours always suffice")
    }

    pub fn chromatic(&self, g: &Graph) -> Result<usize> {
        let colors = self.coloring(g)?;
        Ok(g.vertices().map(|v| colors[v]).collect::<BTreeSet<_>>().len())
    }

    /// ω(G).
    pub fn clique(&self, g: &Graph) -> Result<usize> {
        let m = Masks::new(g, self.cap)?;
        fn best(m: &Masks, cand: u64, size: u32, record: &mut u32) {
            if cand == 0 {
                *record = (*record).max(size);
                return;
            }
            if size + cand.count_ones() <= *record {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            best(m, cand & m.adj[v], size + 1, record);
            best(m, cand & !bit(v), size, record);
        }
        let mut record = 0;
        best(&m, m.live, 0, &mut record);
        Ok(record as usize)
    }

    /// A maximum weight stable set and its weight.
    pub fn mwss(&self, g: &Graph) -> Result<(Vec<usize>, i64)> {
        let m = Masks::new(g, self.cap)?;
        let w: Vec<i64> = (0..g.capacity()).map(|v| g.weight(v)).collect();
        fn best(m: &Masks, w: &[i64], cand: u64) -> (u64, i64) {
            if cand == 0 {
                return (0, 0);
            }
            let v = cand.trailing_zeros() as usize;
            let skip = best(m, w, cand & !bit(v));
            let (set, val) = best(m, w, cand & !m.adj[v] & !bit(v));
            if val + w[v] > skip.1 {
                (set | bit(v), val + w[v])
            } else {
                skip
            }
        }
        let (set, val) = best(&m, &w, m.live);
        Ok((members(set).collect(), val))
    }

    /// No induced odd cycle of length ≥ 5 in G or its complement.
    pub fn is_perfect(&self, g: &Graph) -> Result<bool> {
        let m = Masks::new(g, self.perfect_cap)?;
        Ok(!has_long_odd_hole(&m) && !has_long_odd_hole(&m.complement()))
    }
}

/// Searches induced paths s = p0, p1, ... with every vertex above `s`,
/// closing back to `s` for a chordless cycle.
fn has_long_odd_hole(m: &Masks) -> bool {
    fn extend(m: &Masks, s: usize, path: &mut Vec<usize>, on_path: u64) -> bool {
        let last = *path.last().expect("path starts at s");
        let interior = on_path & !bit(s) & !bit(last);
        for w in members(m.adj[last] & m.live & above(s) & !on_path) {
            if m.adj[w] & interior != 0 {
                continue;
            }
            if path.len() > 1 && m.adj[w] & bit(s) != 0 {
                // closes a chordless cycle through s
                let len = path.len() + 1;
                if len >= 5 && len % 2 == 1 {
                    return true;
                }
                continue;
            }
            path.push(w);
            if extend(m, s, path, on_path | bit(w)) {
                return true;
            }
            path.pop();
        }
        false
    }
    members(m.live).any(|s| extend(m, s, &mut vec![s], bit(s)))
}

pub fn brute_force_ph_pairs(g: &Graph) -> Result<Vec<CliquePair>> {
    Oracle::default().ph_pairs(g)
}

pub fn brute_force_ph_seed_pairs(g: &Graph) -> Result<BTreeSet<VertexPair>> {
    Oracle::default().ph_seed_pairs(g)
}

pub fn brute_force_chromatic(g: &Graph) -> Result<usize> {
    Oracle::default().chromatic(g)
}

pub fn brute_force_clique(g: &Graph) -> Result<usize> {
    Oracle::default().clique(g)
}

pub fn brute_force_mwss(g: &Graph) -> Result<(Vec<usize>, i64)> {
    Oracle::default().mwss(g)
}

pub fn is_perfect_small(g: &Graph) -> Result<bool> {
    Oracle::default().is_perfect(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn ph_pairs_examples() {
        let pairs = brute_force_ph_pairs(&c4()).unwrap();
        let sides: Vec<_> = pairs.iter().map(|p| (p.k1().to_vec(), p.k2().to_vec())).collect();
        assert_eq!(sides, vec![(vec![0, 1], vec![2, 3]), (vec![0, 2], vec![1, 3])]);
        assert!(brute_force_ph_pairs(&Graph::cycle(5)).unwrap().is_empty());
        assert!(brute_force_ph_pairs(&Graph::complete(4)).unwrap().is_empty());
    }

    #[test]
    fn seed_pair_examples() {
        let seeds: Vec<_> = brute_force_ph_seed_pairs(&c4()).unwrap().into_iter().collect();
        let edges: Vec<_> = c4().edges().map(|(u, v)| VertexPair::new(u, v)).collect();
        assert_eq!(seeds, edges);
        assert!(brute_force_ph_seed_pairs(&Graph::cycle(5)).unwrap().is_empty());
        assert!(brute_force_ph_seed_pairs(&Graph::complete(3)).unwrap().is_empty());
    }

    #[test]
    fn invariants_of_small_graphs() {
        assert_eq!(brute_force_chromatic(&c4()).unwrap(), 2);
        assert_eq!(brute_force_clique(&c4()).unwrap(), 2);
        assert_eq!(brute_force_chromatic(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(brute_force_chromatic(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(brute_force_chromatic(&Graph::new(3)).unwrap(), 1);
        assert_eq!(brute_force_chromatic(&Graph::new(0)).unwrap(), 0);
        assert_eq!(brute_force_mwss(&c4()).unwrap().1, 2);
        let w = c4().with_weights(vec![1, 5, 5, 1]);
        assert_eq!(brute_force_mwss(&w).unwrap(), (vec![1, 2], 10));
    }

    #[test]
    fn perfection_examples() {
        assert!(is_perfect_small(&c4()).unwrap());
        assert!(!is_perfect_small(&Graph::cycle(5)).unwrap());
        assert!(!is_perfect_small(&Graph::cycle(7).complement()).unwrap());
        assert!(is_perfect_small(&Graph::cycle(6)).unwrap());
        assert!(is_perfect_small(&Graph::complete(6)).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::new(13);
        assert!(matches!(brute_force_clique(&g), Err(Error::OracleCap { .. })));
        assert!(Oracle::with_cap(13).clique(&g).is_ok());
        assert!(matches!(
            is_perfect_small(&Graph::new(12)),
            Err(Error::OracleCap { .. })
        ));
    }
}
