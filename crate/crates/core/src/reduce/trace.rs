//! JSON form of a [`ReductionTrace`].
//!
//! Field names are fixed by `schema/trace.schema.json`. All vertex ids are
//! 0-based ids of the original graph's id space; `final_vertices` lists the
//! live ids of G^q in the order used when the reduced graph is written out
//! (new id `i` is `final_vertices[i]`).

use serde::{Deserialize, Serialize};

use crate::detect::{is_ph_pair, CliquePair};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduce::engine::{ReductionStep, ReductionTrace};
use crate::reduce::gadget::NonProper2Clique;
use crate::reduce::operator::{reduce_unchecked, Placement};
use crate::reduce::strategy::StrategyData;

pub const TRACE_FORMAT: &str = "phpairs-trace";
pub const TRACE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    pub format: String,
    pub version: u32,
    pub strategy: String,
    pub original: GraphDocument,
    pub steps: Vec<StepDocument>,
    pub final_vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dead: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDocument {
    pub k1: Vec<usize>,
    pub k2: Vec<usize>,
    /// Gadget cross matrix, one `0`/`1` string per A1 vertex.
    pub cross: Vec<String>,
    pub placement: Placement,
    pub strategy: String,
    pub data: StrategyData,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            n: g.capacity(),
            dead: (0..g.capacity()).filter(|&v| !g.is_live(v)).collect(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            weights: g.weights().map(<[i64]>::to_vec),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let bad = |msg: String| Error::Trace(msg);
        let mut g = Graph::new(self.n);
        for &[u, v] in &self.edges {
            if u >= self.n || v >= self.n || u == v {
                return Err(bad(format!("bad edge [{u}, {v}]")));
            }
            g.add_edge(u, v);
        }
        for &v in &self.dead {
            if v >= self.n || g.degree(v) > 0 {
                return Err(bad(format!("bad dead vertex {v}")));
            }
            g.kill(v);
        }
        if let Some(w) = &self.weights {
            if w.len() != self.n {
                return Err(bad("weights length differs from n".into()));
            }
        }
        g.set_weights(self.weights.clone());
        Ok(g)
    }
}

impl ReductionTrace {
    pub fn to_document(&self) -> TraceDocument {
        TraceDocument {
            format: TRACE_FORMAT.to_string(),
            version: TRACE_VERSION,
            strategy: self.strategy.clone(),
            original: GraphDocument::from_graph(&self.original),
            steps: self
                .steps
                .iter()
                .map(|s| StepDocument {
                    k1: s.pair.k1().to_vec(),
                    k2: s.pair.k2().to_vec(),
                    cross: s.gadget.to_row_strings(),
                    placement: s.placement.clone(),
                    strategy: self.strategy.clone(),
                    data: s.data.clone(),
                })
                .collect(),
            final_vertices: self.final_graph.live().to_vec(),
        }
    }

    /// Rebuilds a trace, replaying and checking every step.
    pub fn from_document(doc: &TraceDocument) -> Result<Self> {
        if doc.format != TRACE_FORMAT || doc.version != TRACE_VERSION {
            return Err(Error::Trace(format!(
                "unsupported trace format {} v{}",
                doc.format, doc.version
            )));
        }
        let original = doc.original.to_graph()?;
        let mut g = original.clone();
        let mut steps = Vec::with_capacity(doc.steps.len());
        for (i, s) in doc.steps.iter().enumerate() {
            let bad = |msg: &str| Error::Trace(format!("step {i}: {msg}"));
            if s.strategy != doc.strategy {
                return Err(bad("strategy differs from the trace strategy"));
            }
            if s.k1.iter().chain(&s.k2).any(|&v| v >= g.capacity()) {
                return Err(bad("vertex out of range"));
            }
            let pair = CliquePair::from_ids(&g, &s.k1, &s.k2).map_err(|e| bad(&e.to_string()))?;
            if !is_ph_pair(&g, &pair) {
                return Err(bad("recorded pair is not proper and homogeneous"));
            }
            let gadget = NonProper2Clique::from_row_strings(&s.cross).map_err(|e| bad(&e.to_string()))?;
            let (next, placement) = reduce_unchecked(&g, &pair, &gadget).map_err(|e| bad(&e.to_string()))?;
            if placement != s.placement {
                return Err(bad("placement does not match replay"));
            }
            steps.push(ReductionStep {
                pair,
                gadget,
                placement,
                data: s.data.clone(),
            });
            g = next;
        }
        if g.live().to_vec() != doc.final_vertices {
            return Err(Error::Trace("final_vertices do not match replay".into()));
        }
        Ok(ReductionTrace {
            strategy: doc.strategy.clone(),
            original,
            steps,
            final_graph: g,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("trace serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TraceDocument = serde_json::from_str(text)?;
        ReductionTrace::from_document(&doc)
    }
}
