//! Weighted stable sets survive the stable-set strategy; a maximum one of
//! the reduced graph lifts to a maximum one of the input.

use phpairs::corpus::{planted_ph_graph, random_weights, rng};
use phpairs::reduce::is_stable_set;
use phpairs::{eliminate_all, lift_stable_set, Oracle, StableSet};

fn main() -> phpairs::Result<()> {
    let mut r = rng(3);
    let mut g = planted_ph_graph(10, 0.5, &mut r);
    let weights = random_weights(&g, 1, 10, &mut r);
    g.set_weights(Some(weights));

    let (reduced, trace) = eliminate_all(&g, &StableSet)?;
    let oracle = Oracle::default();
    let (best, weight) = oracle.mwss(&reduced)?;
    let lifted = lift_stable_set(&trace, &best)?;
    assert!(is_stable_set(&g, &lifted));
    println!("q = {}", trace.len());
    println!("reduced optimum {weight} at {best:?}");
    println!("lifted {lifted:?} with weight {}", g.weight_of(&lifted));
    println!("input optimum {}", oracle.mwss(&g)?.1);
    Ok(())
}
