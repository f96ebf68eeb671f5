//! The collapse strategy replaces each PH pair by two non-adjacent vertices,
//! which exposes the coarse structure of the graph.

use phpairs::corpus::{planted_ph_graph, rng};
use phpairs::{eliminate_all, Collapse};

fn main() -> phpairs::Result<()> {
    let g = planted_ph_graph(12, 0.3, &mut rng(11));
    let (reduced, trace) = eliminate_all(&g, &Collapse)?;
    for (i, step) in trace.steps().iter().enumerate() {
        println!(
            "step {i}: {:?} | {:?} -> {:?} | {:?}",
            step.pair.k1().to_vec(),
            step.pair.k2().to_vec(),
            step.placement.a1,
            step.placement.a2
        );
    }
    println!(
        "|V| {} -> {}, |E| {} -> {}",
        g.order(),
        reduced.order(),
        g.edge_count(),
        reduced.edge_count()
    );
    let (compact, ids) = reduced.compact();
    println!(
        "compact ids map to original ids {ids:?}; {} edges",
        compact.edge_count()
    );
    Ok(())
}
