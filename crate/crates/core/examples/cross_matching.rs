//! Bipartite matching on the cross non-edges of two cliques, and the
//! maximum clique of their union that it yields.

use phpairs::matching::{cross_nonedges, max_clique_co_bipartite, max_matching};
use phpairs::{Graph, VertexSet};

fn main() -> phpairs::Result<()> {
    // K1 = {0,1,2}, K2 = {3,4,5}; cross edges form a staircase.
    let mut g = Graph::new(6);
    for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
        g.add_edge(u, v);
    }
    for (u, v) in [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (2, 3)] {
        g.add_edge(u, v);
    }
    let nonedges = cross_nonedges(&g, &[0, 1, 2], &[3, 4, 5]);
    let m = max_matching(&nonedges);
    println!("cross non-edges: {}, maximum matching {m:?}", nonedges.edge_count());

    let k1 = VertexSet::from_vertices(6, [0, 1, 2]);
    let k2 = VertexSet::from_vertices(6, [3, 4, 5]);
    let x = max_clique_co_bipartite(&g, &k1, &k2)?;
    println!("maximum clique {:?}, size {} = 6 - {}", x.to_vec(), x.len(), m.len());
    Ok(())
}
