//! Mapping solutions of the reduced graph back to the input graph.
//!
//! Colourings and stable sets are indexed by vertex id of the graph they
//! belong to; entries at dead ids are ignored.

use std::collections::BTreeSet;

use crate::error::{internal, Error, Result};
use crate::graph::Graph;
use crate::matching::{cross_nonedges, match_shared_colors};
use crate::reduce::engine::{ReductionStep, ReductionTrace};

pub fn is_proper_coloring(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.capacity() && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

/// Distinct colours used on live vertices.
pub fn color_count(g: &Graph, coloring: &[usize]) -> usize {
    g.vertices().map(|v| coloring[v]).collect::<BTreeSet<_>>().len()
}

pub fn is_stable_set(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&v| v < g.capacity() && g.is_live(v))
        && set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

fn require(trace: &ReductionTrace, strategy: &str, kind: &str) -> Result<()> {
    if trace.strategy() == strategy {
        Ok(())
    } else {
        Err(Error::StrategyMismatch {
            strategy: trace.strategy().to_string(),
            kind: kind.to_string(),
        })
    }
}

/// Recolours K1 ∪ K2 of G^i from a colouring of G^{i+1}.
///
/// A1 = K1 and A2 = K2 as vertex sets. Colours of A1 stay on K1 and colours
/// of A2 on K2; every colour used on both sides is put on a non-adjacent
/// cross pair taken from a maximum matching of the cross non-edges.
fn lift_step(gi: &Graph, step: &ReductionStep, coloring: &mut [usize]) -> Result<()> {
    let k1 = step.pair.k1().to_vec();
    let k2 = step.pair.k2().to_vec();
    if step.placement.a1 != k1 || step.placement.a2 != k2 {
        return Err(internal("colouring lift needs gadgets that keep both cliques"));
    }
    let c1: BTreeSet<usize> = k1.iter().map(|&v| coloring[v]).collect();
    let c2: BTreeSet<usize> = k2.iter().map(|&v| coloring[v]).collect();
    if c1.len() != k1.len() || c2.len() != k2.len() {
        return Err(internal("gadget cliques are not rainbow-coloured"));
    }
    let shared: Vec<usize> = c1.intersection(&c2).copied().collect();
    let pairs = match_shared_colors(&cross_nonedges(gi, &k1, &k2), shared.len())?;

    let mut done1 = vec![false; k1.len()];
    let mut done2 = vec![false; k2.len()];
    for (&color, &(i, j)) in shared.iter().zip(&pairs) {
        coloring[k1[i]] = color;
        coloring[k2[j]] = color;
        done1[i] = true;
        done2[j] = true;
    }
    let rest1 = c1.difference(&c2);
    for (i, &color) in (0..k1.len()).filter(|&i| !done1[i]).zip(rest1) {
        coloring[k1[i]] = color;
    }
    let rest2 = c2.difference(&c1);
    for (j, &color) in (0..k2.len()).filter(|&j| !done2[j]).zip(rest2) {
        coloring[k2[j]] = color;
    }
    Ok(())
}

/// Turns a proper colouring of G^q into one of G^0 with the same colours.
///
/// Only traces built with the max-clique strategy can be lifted.
pub fn lift_coloring(trace: &ReductionTrace, coloring: &[usize]) -> Result<Vec<usize>> {
    require(trace, "max-clique", "coloring")?;
    if !is_proper_coloring(trace.final_graph(), coloring) {
        return Err(Error::InvalidSolution(
            "not a proper colouring of the reduced graph".into(),
        ));
    }
    let graphs = trace.graphs()?;
    let mut out = coloring.to_vec();
    for (i, step) in trace.steps().iter().enumerate().rev() {
        lift_step(&graphs[i], step, &mut out)?;
    }
    let g0 = trace.original();
    if !is_proper_coloring(g0, &out) {
        return Err(internal("lifted colouring is not proper"));
    }
    if color_count(g0, &out) != color_count(trace.final_graph(), coloring) {
        return Err(internal("lifted colouring changed the number of colours"));
    }
    Ok(out)
}

/// Maps a stable set of G^q back to G^0. The weight is unchanged.
///
/// Only traces built with the stable-set strategy can be lifted.
pub fn lift_stable_set(trace: &ReductionTrace, set: &[usize]) -> Result<Vec<usize>> {
    require(trace, "stable-set", "stable set")?;
    if !is_stable_set(trace.final_graph(), set) {
        return Err(Error::InvalidSolution("not a stable set of the reduced graph".into()));
    }
    let mut out = set.to_vec();
    for step in trace.steps().iter().rev() {
        let k1 = step.pair.k1().to_vec();
        let k2 = step.pair.k2().to_vec();
        for v in &mut out {
            if let Some(j) = step.placement.a1.iter().position(|a| a == v) {
                *v = k1[j];
            } else if let Some(j) = step.placement.a2.iter().position(|a| a == v) {
                *v = k2[j];
            }
        }
    }
    out.sort_unstable();
    let g0 = trace.original();
    if !is_stable_set(g0, &out) {
        return Err(internal("lifted set is not stable"));
    }
    if g0.weight_of(&out) != trace.final_graph().weight_of(set) {
        return Err(internal("lifted stable set changed weight"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::engine::eliminate_all;
    use crate::reduce::strategy::{Collapse, MaxClique, StableSet};

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn lifts_two_coloring_of_c4() {
        let (_, trace) = eliminate_all(&c4(), &MaxClique).unwrap();
        // G^1 has edges 01 and 23
        let lifted = lift_coloring(&trace, &[0, 1, 0, 1]).unwrap();
        assert_eq!(lifted, vec![0, 1, 1, 0]);
        assert!(is_proper_coloring(&c4(), &lifted));
    }

    #[test]
    fn identity_lift_when_nothing_reduced() {
        let c5 = Graph::cycle(5);
        let (_, trace) = eliminate_all(&c5, &MaxClique).unwrap();
        assert_eq!(lift_coloring(&trace, &[0, 1, 0, 1, 2]).unwrap(), vec![0, 1, 0, 1, 2]);
    }

    #[test]
    fn rainbow_coloring_lifts() {
        let (_, trace) = eliminate_all(&c4(), &MaxClique).unwrap();
        let lifted = lift_coloring(&trace, &[3, 1, 4, 2]).unwrap();
        assert!(is_proper_coloring(&c4(), &lifted));
        assert_eq!(color_count(&c4(), &lifted), 4);
    }

    #[test]
    fn rejects_improper_input_and_wrong_strategy() {
        let (_, trace) = eliminate_all(&c4(), &MaxClique).unwrap();
        assert!(matches!(
            lift_coloring(&trace, &[0, 0, 1, 1]),
            Err(Error::InvalidSolution(_))
        ));
        let (_, collapsed) = eliminate_all(&c4(), &Collapse).unwrap();
        assert!(matches!(
            lift_coloring(&collapsed, &[0, 0, 0, 0]),
            Err(Error::StrategyMismatch { .. })
        ));
        assert!(matches!(
            lift_stable_set(&trace, &[]),
            Err(Error::StrategyMismatch { .. })
        ));
    }

    #[test]
    fn stable_set_examples() {
        let (gq, trace) = eliminate_all(&c4(), &StableSet).unwrap();
        assert!(is_stable_set(&gq, &[0, 3]));
        assert_eq!(lift_stable_set(&trace, &[0, 3]).unwrap(), vec![0, 3]);
        assert!(lift_stable_set(&trace, &[]).unwrap().is_empty());

        // vertex 4 is isolated and never part of a reduced pair
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let (_, trace) = eliminate_all(&g, &StableSet).unwrap();
        assert_eq!(lift_stable_set(&trace, &[4]).unwrap(), vec![4]);
    }
}
