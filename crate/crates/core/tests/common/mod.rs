//! Generators and brute-force helpers shared by the integration tests.
//!
//! Everything here works on plain adjacency data read off the graph, so it
//! does not lean on the predicates it is used to check.

#![allow(dead_code)]

use phpairs::corpus::{planted_ph_graph, random_graph, rng};
use phpairs::{Graph, VertexSet};
use proptest::prelude::*;
use rand::Rng;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

/// Arbitrary graphs on `lo..=hi` vertices; half of them carry a planted PH pair.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    let plain = (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    });
    let planted = (lo.max(4)..=hi.max(4), 0.0f64..1.0, any::<u64>())
        .prop_map(|(n, p, seed)| planted_ph_graph(n, p, &mut rng(seed)));
    prop_oneof![plain, planted]
}

pub fn weighted(g: Graph, seed: u64) -> Graph {
    let mut r = rng(seed);
    let w = (0..g.capacity()).map(|_| r.gen_range(1..=10)).collect();
    g.with_weights(w)
}

pub fn adj(g: &Graph, u: usize, v: usize) -> bool {
    u != v && g.neighborhood(u).contains(v)
}

pub fn set(n: usize, items: impl IntoIterator<Item = usize>) -> VertexSet {
    VertexSet::from_vertices(n, items)
}

/// Greedy clique from the vertices in `order`, skipping anything in `avoid`.
pub fn greedy_clique(g: &Graph, order: &[usize], avoid: &VertexSet) -> VertexSet {
    let mut k: Vec<usize> = Vec::new();
    for &v in order {
        if v < g.capacity() && !avoid.contains(v) && !k.contains(&v) && k.iter().all(|&u| adj(g, u, v)) {
            k.push(v);
        }
    }
    set(g.capacity(), k)
}

/// Induced C4 a-b-d-c-a with a, b in `s1` and c, d in `s2`, by scanning quadruples.
pub fn has_c4_by_scan(g: &Graph, s1: &VertexSet, s2: &VertexSet) -> bool {
    let (a1, a2) = (s1.to_vec(), s2.to_vec());
    for &a in &a1 {
        for &b in &a1 {
            for &c in &a2 {
                for &d in &a2 {
                    if a != b && c != d && adj(g, a, c) && adj(g, b, d) && !adj(g, a, d) && !adj(g, b, c) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// `v` universal to `u` inside the subgraph induced by `within`.
pub fn universal_within(g: &Graph, within: &VertexSet, v: usize, u: usize) -> bool {
    adj(g, u, v) && within.iter().all(|w| w == v || w == u || !adj(g, u, w) || adj(g, v, w))
}

/// Maximum matching size by exhaustive search.
pub fn brute_matching(left: usize, edges: &[(usize, usize)]) -> usize {
    fn go(l: usize, left: usize, edges: &[(usize, usize)], used: &mut Vec<usize>) -> usize {
        if l == left {
            return 0;
        }
        let mut best = go(l + 1, left, edges, used);
        for &(a, b) in edges {
            if a == l && !used.contains(&b) {
                used.push(b);
                best = best.max(1 + go(l + 1, left, edges, used));
                used.pop();
            }
        }
        best
    }
    go(0, left, edges, &mut Vec::new())
}

/// The subgraph induced by `keep`, renumbered.
pub fn induced(g: &Graph, keep: &VertexSet) -> Graph {
    let ids = keep.to_vec();
    let mut h = Graph::new(ids.len());
    for (i, &u) in ids.iter().enumerate() {
        for (j, &v) in ids.iter().enumerate().skip(i + 1) {
            if adj(g, u, v) {
                h.add_edge(i, j);
            }
        }
    }
    if g.weights().is_some() {
        h.set_weights(Some(ids.iter().map(|&v| g.weight(v)).collect()));
    }
    h
}

/// Graphs for the corpus-driven criteria: `count` graphs with `n` in
/// `lo..=hi` and densities cycling through 0.2..0.8; odd positions carry a
/// planted PH pair.
pub fn corpus(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    phpairs::corpus::mixed_corpus(count, lo, hi, seed)
}

pub fn plain_random(n: usize, p: f64, seed: u64) -> Graph {
    random_graph(n, p, &mut rng(seed))
}
