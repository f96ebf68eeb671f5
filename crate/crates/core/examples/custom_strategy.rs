//! Plug a custom gadget into the elimination loop. This one keeps only the
//! cross edges of the first vertex of K1.

use phpairs::corpus::{planted_ph_graph, rng};
use phpairs::reduce::{PairView, StrategyData};
use phpairs::{eliminate_all, find_any_ph_pair, NonProper2Clique, Strategy};

struct FirstRow;

impl Strategy for FirstRow {
    fn name(&self) -> &'static str {
        "first-row"
    }

    fn build(&self, view: &PairView) -> phpairs::Result<(NonProper2Clique, StrategyData)> {
        let mut cross = vec![vec![false; view.k2.len()]; view.k1.len()];
        cross[0] = view.adj[0].clone();
        Ok((NonProper2Clique::new(cross)?, StrategyData::None))
    }
}

fn main() -> phpairs::Result<()> {
    let g = planted_ph_graph(12, 0.5, &mut rng(5));
    let (reduced, trace) = eliminate_all(&g, &FirstRow)?;
    assert!(find_any_ph_pair(&reduced)?.is_none());
    println!(
        "{}: q = {}, |E| {} -> {}",
        trace.strategy(),
        trace.len(),
        g.edge_count(),
        reduced.edge_count()
    );
    Ok(())
}
