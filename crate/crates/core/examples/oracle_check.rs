//! Cross-check the embedding search against exhaustive enumeration on
//! small graphs, half of them with a planted PH pair.

use phpairs::corpus::mixed_corpus;
use phpairs::{find_ph_embedding, Oracle, VertexPair};

fn main() -> phpairs::Result<()> {
    let oracle = Oracle::default();
    for (i, g) in mixed_corpus(6, 8, 10, 1).iter().enumerate() {
        let expected = oracle.ph_seed_pairs(g)?;
        let mut found = std::collections::BTreeSet::new();
        for (u, v) in g.edges() {
            if find_ph_embedding(g, u, v)?.is_some() {
                found.insert(VertexPair::new(u, v));
            }
        }
        assert_eq!(found, expected);
        println!(
            "graph {i}: {} vertices, {} edges, {} PH pairs, {} seed edges, chi {}, omega {}, perfect {}",
            g.order(),
            g.edge_count(),
            oracle.ph_pairs(g)?.len(),
            expected.len(),
            oracle.chromatic(g)?,
            oracle.clique(g)?,
            oracle.is_perfect(g)?
        );
    }
    Ok(())
}
