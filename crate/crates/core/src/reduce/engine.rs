//! The elimination loop.
//!
//! Starting from S = E(G), repeatedly take the lexicographically smallest
//! candidate pair. If it has a PH-embedding, replace that pair of cliques by
//! the strategy's gadget and carry S across the reduction; otherwise drop
//! the pair from S.
//!
//! Carrying S across a reduction can miss new PH pairs when one side of the
//! gadget is uniform towards the other: G' may then gain a pair holding all
//! of one gadget side and none of the other, whose seeds were dropped
//! earlier. After such a reduction every edge outside S is re-tested and
//! put back if it now has an embedding.
//!
//! Without a restore |S| strictly shrinks every round. A restore only
//! follows max-clique or collapse gadgets, and those reductions always
//! remove edges, so there are still at most |E(G)| reductions.

use crate::detect::{find_ph_embedding_with_stats, CliquePair};
use crate::error::{internal, Result};
use crate::graph::{Graph, VertexPair};
use crate::reduce::candidates::{reduce_candidate_set, CandidateSet};
use crate::reduce::gadget::NonProper2Clique;
use crate::reduce::operator::{reduce_unchecked, Placement};
use crate::reduce::strategy::{PairView, Strategy, StrategyData};

/// One PH reduction G^i → G^{i+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// The PH pair of G^i that was replaced.
    pub pair: CliquePair,
    pub gadget: NonProper2Clique,
    pub placement: Placement,
    pub data: StrategyData,
}

impl ReductionStep {
    /// Replays this step on G^i.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let (next, placement) = reduce_unchecked(g, &self.pair, &self.gadget)?;
        if placement != self.placement {
            return Err(internal("replayed placement differs from the recorded one"));
        }
        Ok(next)
    }
}

/// Everything needed to map solutions of G^q back to G^0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub(crate) strategy: String,
    pub(crate) original: Graph,
    pub(crate) steps: Vec<ReductionStep>,
    pub(crate) final_graph: Graph,
}

impl ReductionTrace {
    pub fn strategy(&self) -> &str {
        &self.strategy
    }

    pub fn original(&self) -> &Graph {
        &self.original
    }

    pub fn final_graph(&self) -> &Graph {
        &self.final_graph
    }

    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    /// Number of reductions, q.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// G^0, ..., G^q, rebuilt from the original graph.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.original.clone());
        for step in &self.steps {
            let next = step.apply(out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }
}

/// Counters for one elimination run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Loop iterations (reductions plus discarded pairs).
    pub iterations: usize,
    pub reductions: usize,
    /// Work inside embedding searches.
    pub search_ops: u64,
    /// Pairs put back into S after a reduction created new embeddings.
    pub restored: usize,
    /// Estimated word operations spent rebuilding graphs and candidate sets.
    pub rebuild_ops: u64,
}

impl EngineStats {
    pub fn total_ops(&self) -> u64 {
        self.search_ops + self.rebuild_ops
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    /// A pair of cliques was replaced; the index of the new step.
    Reduced(usize),
    /// The candidate had no PH-embedding and was dropped.
    Discarded(VertexPair),
    Finished,
}

/// Step-by-step driver for the elimination loop.
pub struct Eliminator<'s> {
    strategy: &'s dyn Strategy,
    original: Graph,
    graph: Graph,
    candidates: CandidateSet,
    steps: Vec<ReductionStep>,
    stats: EngineStats,
    edge_budget: usize,
}

impl<'s> Eliminator<'s> {
    pub fn new(g: &Graph, strategy: &'s dyn Strategy) -> Self {
        // No induced C4 is possible below four vertices or without edges.
        let candidates = if g.order() < 4 || g.edge_count() == 0 {
            CandidateSet::new(g.capacity())
        } else {
            CandidateSet::from_edges(g)
        };
        Eliminator {
            strategy,
            original: g.clone(),
            graph: g.clone(),
            candidates,
            steps: Vec::new(),
            stats: EngineStats::default(),
            edge_budget: g.edge_count(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn step(&mut self) -> Result<StepOutcome> {
        let Some(seed) = self.candidates.first() else {
            return Ok(StepOutcome::Finished);
        };
        let before = self.candidates.len();
        self.stats.iterations += 1;
        let (found, search) = find_ph_embedding_with_stats(&self.graph, seed.lo(), seed.hi())?;
        self.stats.search_ops += search.ops;

        let Some(embedding) = found else {
            self.candidates.remove(seed);
            return Ok(StepOutcome::Discarded(seed));
        };

        let pair = embedding.pair;
        let view = PairView::new(&self.graph, &pair);
        let (gadget, data) = self.strategy.build(&view)?;
        let (next, placement) = reduce_unchecked(&self.graph, &pair, &gadget)?;
        let mut candidates = reduce_candidate_set(&self.candidates, &pair, &placement);
        let restored = if gadget.has_uniform_side() {
            self.restore_candidates(&next, &mut candidates)?
        } else {
            0
        };

        let n = self.graph.capacity() as u64;
        let words = n.div_ceil(64);
        let touched = pair.k1().len() as u64 + pair.k2().len() as u64;
        self.stats.rebuild_ops += 3 * n * words + 2 * touched * n;

        let edges_dropped = next.edge_count() < self.graph.edge_count();
        if candidates.len() >= before && !(restored > 0 && edges_dropped) {
            return Err(internal(format!(
                "candidate set did not shrink: {before} -> {}",
                candidates.len()
            )));
        }
        if self.steps.len() >= self.edge_budget {
            return Err(internal(format!("more than |E| = {} reductions", self.edge_budget)));
        }
        self.graph = next;
        self.candidates = candidates;
        self.steps.push(ReductionStep {
            pair,
            gadget,
            placement,
            data,
        });
        self.stats.reductions += 1;
        Ok(StepOutcome::Reduced(self.steps.len() - 1))
    }

    /// Re-tests every edge of `g` missing from `s` and puts back those that
    /// now have a PH-embedding. Returns how many came back.
    fn restore_candidates(&mut self, g: &Graph, s: &mut CandidateSet) -> Result<usize> {
        let missing: Vec<VertexPair> = g
            .edges()
            .map(|(u, v)| VertexPair::new(u, v))
            .filter(|&p| !s.contains(p))
            .collect();
        let mut restored = 0;
        for p in missing {
            let (found, search) = find_ph_embedding_with_stats(g, p.lo(), p.hi())?;
            self.stats.search_ops += search.ops;
            if found.is_some() {
                s.insert(p);
                restored += 1;
            }
        }
        self.stats.restored += restored;
        Ok(restored)
    }

    pub fn run(mut self) -> Result<(ReductionTrace, EngineStats)> {
        while self.step()? != StepOutcome::Finished {}
        let trace = ReductionTrace {
            strategy: self.strategy.name().to_string(),
            original: self.original,
            steps: self.steps,
            final_graph: self.graph,
        };
        Ok((trace, self.stats))
    }
}

/// Runs the elimination loop to completion and returns G^q with its trace.
pub fn eliminate_all(g: &Graph, strategy: &dyn Strategy) -> Result<(Graph, ReductionTrace)> {
    let (trace, _) = Eliminator::new(g, strategy).run()?;
    Ok((trace.final_graph.clone(), trace))
}
