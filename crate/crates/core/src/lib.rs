//! Proper homogeneous pairs of cliques: detection, elimination, and lifting
//! solutions of the reduced graph back to the input.
//!
//! ```
//! use phpairs::{eliminate_all, Graph, MaxClique};
//!
//! let c4 = Graph::cycle(4);
//! let (reduced, trace) = eliminate_all(&c4, &MaxClique).unwrap();
//! assert_eq!(trace.len(), 1);
//! assert_eq!(reduced.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
//! ```

pub mod corpus;
pub mod detect;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod matching;
pub mod oracles;
pub mod reduce;
pub mod solution;

pub use detect::{
    find_any_ph_pair, find_ph_embedding, find_ph_embedding_with_stats, is_homogeneous_pair, is_ph_pair, is_proper_pair,
    ph_pairs_seed_set, trim_nth_to_ph, CliquePair, PhEmbedding, SearchStats,
};
pub use dimacs::{parse_dimacs, read_dimacs_file, write_dimacs};
pub use error::{Error, Result};
pub use graph::{Graph, VertexPair, VertexSet};
pub use oracles::Oracle;
pub use reduce::{
    eliminate_all, lift_coloring, lift_stable_set, ph_reduce, reduce_candidate_set, CandidateSet, Collapse, Eliminator,
    MaxClique, NonProper2Clique, Placement, ReductionStep, ReductionTrace, StableSet, Strategy, StrategyKind,
};
