//! Seeded graph generators for tests, examples and the CLI.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p).
pub fn random_graph<R: Rng>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random graph with a planted proper homogeneous pair of cliques.
///
/// Two cliques of 2 or 3 vertices get a random cross pattern in which every
/// vertex has a neighbour and a non-neighbour on the other side; each
/// remaining vertex is complete or anticomplete to each clique at random,
/// and edges among the remaining vertices follow `density`. Vertex ids are
/// shuffled. Needs `n >= 4`.
pub fn planted_ph_graph<R: Rng>(n: usize, density: f64, rng: &mut R) -> Graph {
    assert!(n >= 4, "a planted pair needs at least four vertices");
    let s1 = rng.gen_range(2..=3.min(n - 2));
    let s2 = rng.gen_range(2..=3.min(n - s1));
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let k1 = &ids[..s1];
    let k2 = &ids[s1..s1 + s2];
    let rest = &ids[s1 + s2..];

    let mut g = Graph::new(n);
    for side in [k1, k2] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                g.add_edge(u, v);
            }
        }
    }
    let cross = loop {
        let m: Vec<Vec<bool>> = (0..s1).map(|_| (0..s2).map(|_| rng.gen_bool(0.5)).collect()).collect();
        let rows_ok = m.iter().all(|r| r.iter().any(|&b| b) && r.iter().any(|&b| !b));
        let cols_ok = (0..s2).all(|j| m.iter().any(|r| r[j]) && m.iter().any(|r| !r[j]));
        if rows_ok && cols_ok {
            break m;
        }
    };
    for (i, &u) in k1.iter().enumerate() {
        for (j, &v) in k2.iter().enumerate() {
            if cross[i][j] {
                g.add_edge(u, v);
            }
        }
    }
    for &x in rest {
        for side in [k1, k2] {
            if rng.gen_bool(0.5) {
                for &v in side {
                    g.add_edge(x, v);
                }
            }
        }
    }
    for (i, &u) in rest.iter().enumerate() {
        for &v in &rest[i + 1..] {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Integer weights drawn uniformly from `lo..=hi`.
pub fn random_weights<R: Rng>(g: &Graph, lo: i64, hi: i64, rng: &mut R) -> Vec<i64> {
    (0..g.capacity()).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// Densities 0.2, 0.3, ..., 0.8.
pub const DENSITIES: [f64; 7] = [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];

/// `count` graphs with `n` drawn from `n_min..=n_max`, cycling through
/// [`DENSITIES`]; every other graph carries a planted PH pair.
pub fn mixed_corpus(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(n_min..=n_max);
            let p = DENSITIES[i % DENSITIES.len()];
            if i % 2 == 1 && n >= 4 {
                planted_ph_graph(n, p, &mut rng)
            } else {
                random_graph(n, p, &mut rng)
            }
        })
        .collect()
}

fn to_masks(g: &Graph) -> Vec<u32> {
    (0..g.capacity())
        .map(|v| g.neighborhood(v).iter().fold(0u32, |m, u| m | (1 << u)))
        .collect()
}

/// Canonical code: vertices are ordered by a refinement invariant, and the
/// adjacency bits are minimised over all orders that respect it.
fn canonical_code(adj: &[u32]) -> (Vec<(u32, Vec<u32>)>, u64) {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let inv: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let slots: Vec<&(u32, Vec<u32>)> = order.iter().map(|&v| &inv[v]).collect();

    fn assign(
        adj: &[u32],
        inv: &[(u32, Vec<u32>)],
        slots: &[&(u32, Vec<u32>)],
        placed: &mut Vec<usize>,
        used: u32,
        best: &mut u64,
    ) {
        let pos = placed.len();
        if pos == slots.len() {
            let mut code = 0u64;
            for j in 1..pos {
                for i in 0..j {
                    code = code << 1 | u64::from(adj[placed[i]] >> placed[j] & 1);
                }
            }
            *best = (*best).min(code);
            return;
        }
        for v in 0..adj.len() {
            if used >> v & 1 == 0 && &inv[v] == slots[pos] {
                placed.push(v);
                assign(adj, inv, slots, placed, used | 1 << v, best);
                placed.pop();
            }
        }
    }

    let mut best = u64::MAX;
    assign(adj, &inv, &slots, &mut Vec::with_capacity(n), 0, &mut best);
    let mut sorted_inv = inv;
    sorted_inv.sort();
    (sorted_inv, best)
}

/// One graph per isomorphism class on `n` vertices, `n <= 8`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to 8 vertices");
    if n == 0 {
        return vec![Graph::new(0)];
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for base in nonisomorphic_graphs(n - 1) {
        for nbrs in 0u32..(1 << (n - 1)) {
            let mut g = Graph::new(n);
            for (u, v) in base.edges() {
                g.add_edge(u, v);
            }
            for u in 0..n - 1 {
                if nbrs >> u & 1 == 1 {
                    g.add_edge(u, n - 1);
                }
            }
            if seen.insert(canonical_code(&to_masks(&g))) {
                out.push(g);
            }
        }
    }
    out
}
