//! Drive the elimination loop one step at a time and watch the candidate
//! set. On this graph the first max-clique reduction creates PH pairs whose
//! seed edges had already been dropped, so they are searched again.

use phpairs::reduce::StepOutcome;
use phpairs::{parse_dimacs, Eliminator, MaxClique};

fn main() -> phpairs::Result<()> {
    let g = parse_dimacs(include_str!("../data/regrowth7.col"))?;
    let mut e = Eliminator::new(&g, &MaxClique);
    loop {
        let before = e.candidates().len();
        let outcome = e.step()?;
        if outcome == StepOutcome::Finished {
            break;
        }
        println!(
            "{outcome:?}: |S| {before} -> {}, |E| = {}, restored so far {}",
            e.candidates().len(),
            e.graph().edge_count(),
            e.stats().restored
        );
    }
    let stats = e.stats();
    println!(
        "{} reductions, {} iterations, {} ops",
        stats.reductions,
        stats.iterations,
        stats.total_ops()
    );
    Ok(())
}
