//! Eliminate all PH pairs with the max-clique strategy, colour the reduced
//! graph optimally and lift the colouring back.

use phpairs::corpus::{planted_ph_graph, rng};
use phpairs::reduce::{color_count, is_proper_coloring};
use phpairs::{eliminate_all, lift_coloring, MaxClique, Oracle};

fn main() -> phpairs::Result<()> {
    let g = planted_ph_graph(11, 0.5, &mut rng(28));
    let (reduced, trace) = eliminate_all(&g, &MaxClique)?;
    println!(
        "q = {}, |E| {} -> {}",
        trace.len(),
        g.edge_count(),
        reduced.edge_count()
    );

    let oracle = Oracle::default();
    let coloring = oracle.coloring(&reduced)?;
    let lifted = lift_coloring(&trace, &coloring)?;
    assert!(is_proper_coloring(&g, &lifted));
    println!(
        "chi(reduced) = {}, lifted colouring uses {}, chi(original) = {}",
        color_count(&reduced, &coloring),
        color_count(&g, &lifted),
        oracle.chromatic(&g)?
    );
    Ok(())
}
