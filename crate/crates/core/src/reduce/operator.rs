use serde::{Deserialize, Serialize};

use crate::detect::{is_ph_pair, CliquePair};
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::reduce::gadget::NonProper2Clique;

/// Where each gadget label landed in the reduced graph: `a1[j]` is the id of
/// the j-th vertex of A1.
///
/// Labels reuse the smallest ids of the clique they replace, so A1 lands on
/// a prefix of sorted K1 and A2 on a prefix of sorted K2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
}

impl Placement {
    pub fn for_pair(pair: &CliquePair, gadget: &NonProper2Clique) -> Self {
        Placement {
            a1: pair.k1().iter().take(gadget.a1()).collect(),
            a2: pair.k2().iter().take(gadget.a2()).collect(),
        }
    }
}

/// Replaces the PH pair `pair` of `g` by `gadget`.
///
/// An outside vertex becomes adjacent to all of A1 when it was complete to
/// K1 and to all of A2 when it was complete to K2. Edges among outside
/// vertices are untouched. Gadget vertices keep the weight of the id they
/// reuse; ids of K1 ∪ K2 not reused become dead.
pub fn ph_reduce(g: &Graph, pair: &CliquePair, gadget: &NonProper2Clique) -> Result<(Graph, Placement)> {
    if !is_ph_pair(g, pair) {
        return Err(contract("ph_reduce needs a proper homogeneous pair"));
    }
    reduce_unchecked(g, pair, gadget)
}

pub(crate) fn reduce_unchecked(g: &Graph, pair: &CliquePair, gadget: &NonProper2Clique) -> Result<(Graph, Placement)> {
    if gadget.a1() > pair.k1().len() || gadget.a2() > pair.k2().len() {
        return Err(contract(format!(
            "gadget sides {}x{} exceed clique sides {}x{}",
            gadget.a1(),
            gadget.a2(),
            pair.k1().len(),
            pair.k2().len()
        )));
    }
    let both = pair.union();
    let outside: Vec<usize> = g.vertices().filter(|&x| !both.contains(x)).collect();
    let to_a1: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| g.is_complete_to(x, pair.k1()))
        .collect();
    let to_a2: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| g.is_complete_to(x, pair.k2()))
        .collect();

    let placement = Placement::for_pair(pair, gadget);
    let mut out = g.clone();
    for v in both.iter() {
        out.kill(v);
    }
    for &v in placement.a1.iter().chain(&placement.a2) {
        out.revive(v);
    }

    for side in [&placement.a1, &placement.a2] {
        for (i, &x) in side.iter().enumerate() {
            for &y in &side[i + 1..] {
                out.add_edge(x, y);
            }
        }
    }
    for (i, &x) in placement.a1.iter().enumerate() {
        for (j, &y) in placement.a2.iter().enumerate() {
            if gadget.cross(i, j) {
                out.add_edge(x, y);
            }
        }
    }
    for (targets, side) in [(&to_a1, &placement.a1), (&to_a2, &placement.a2)] {
        for &x in targets {
            for &a in side {
                out.add_edge(x, a);
            }
        }
    }
    Ok((out, placement))
}
