//! Serialize a reduction trace to JSON, read it back and replay every step.

use phpairs::corpus::{planted_ph_graph, rng};
use phpairs::{eliminate_all, MaxClique, ReductionTrace};

fn main() -> phpairs::Result<()> {
    let g = planted_ph_graph(11, 0.5, &mut rng(36));
    let (reduced, trace) = eliminate_all(&g, &MaxClique)?;
    let json = trace.to_json();
    println!("trace: {} steps, {} bytes of JSON", trace.len(), json.len());

    let back = ReductionTrace::from_json(&json)?;
    assert_eq!(back.to_json(), json);
    for (i, gi) in back.graphs()?.iter().enumerate() {
        println!("G^{i}: {} vertices, {} edges", gi.order(), gi.edge_count());
    }
    assert_eq!(back.final_graph(), &reduced);
    Ok(())
}
