//! Shrink a homogeneous pair with an induced C4 across to a PH pair.

use phpairs::{is_ph_pair, trim_nth_to_ph, CliquePair, Graph};

fn main() -> phpairs::Result<()> {
    // 0-1-3-2 is an induced C4; vertex 4 joins K1 and sees all of K2.
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]);
    let pair = CliquePair::from_ids(&g, &[0, 1, 4], &[2, 3])?;
    println!(
        "start: K1 = {:?}, K2 = {:?}, PH: {}",
        pair.k1().to_vec(),
        pair.k2().to_vec(),
        is_ph_pair(&g, &pair)
    );
    let trimmed = trim_nth_to_ph(&g, &pair).expect("non-trivial homogeneous pair");
    println!(
        "trimmed: K1 = {:?}, K2 = {:?}, PH: {}",
        trimmed.k1().to_vec(),
        trimmed.k2().to_vec(),
        is_ph_pair(&g, &trimmed)
    );
    Ok(())
}
