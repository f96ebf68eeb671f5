//! Search for a PH pair around each edge of a graph with a planted pair.

use phpairs::corpus::{planted_ph_graph, rng};
use phpairs::{find_ph_embedding_with_stats, is_ph_pair};

fn main() -> phpairs::Result<()> {
    let g = planted_ph_graph(12, 0.4, &mut rng(7));
    println!("graph: {} vertices, {} edges", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let (found, stats) = find_ph_embedding_with_stats(&g, u, v)?;
        if let Some(e) = found {
            assert!(is_ph_pair(&g, &e.pair));
            println!(
                "seed {{{u},{v}}}: K1 = {:?}, K2 = {:?} ({} rounds, {} ops)",
                e.pair.k1().to_vec(),
                e.pair.k2().to_vec(),
                stats.rounds,
                stats.ops
            );
        }
    }
    Ok(())
}
