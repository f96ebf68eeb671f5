//! DIMACS `.col` reader and writer.
//!
//! Accepted lines: `c ...` comments, one `p edge <n> <m>` header, `e <u> <v>`
//! edges and `n <v> <w>` vertex weights. Ids are 1-based on disk. Duplicate
//! and reversed edge lines collapse to one edge; the edge count in the header
//! is informational.
//!
//! The canonical form written by [`write_dimacs`] is the header, then one
//! weight line per vertex when the graph is weighted, then edge lines with
//! `u < v` in lexicographic order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} `{tok}`")))
}

fn vertex(tok: Option<&str>, line: usize, n: Option<usize>) -> Result<usize> {
    let v: usize = parse_num(tok, line, "vertex id")?;
    if let Some(n) = n {
        if v == 0 || v > n {
            return Err(err(line, format!("vertex {v} out of range 1..={n}")));
        }
    }
    Ok(v)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut weights: Option<Vec<i64>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        let n = graph.as_ref().map(Graph::capacity);
        match kind {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(err(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(err(line, format!("malformed header, expected `p edge`, got {other:?}"))),
                }
                let n: usize = parse_num(toks.next(), line, "vertex count")?;
                let _m: usize = parse_num(toks.next(), line, "edge count")?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let u = vertex(toks.next(), line, n)?;
                let v = vertex(toks.next(), line, n)?;
                if u == v {
                    return Err(err(line, format!("self-loop on vertex {u}")));
                }
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err(line, "edge line before `p edge` header"))?;
                g.add_edge(u - 1, v - 1);
            }
            "n" => {
                let n = n.ok_or_else(|| err(line, "weight line before `p edge` header"))?;
                let v = vertex(toks.next(), line, Some(n))?;
                let w: i64 = parse_num(toks.next(), line, "weight")?;
                weights.get_or_insert_with(|| vec![1; n])[v - 1] = w;
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(err(line, "trailing tokens"));
        }
    }

    let mut g = graph.ok_or_else(|| err(0, "missing `p edge` header"))?;
    g.set_weights(weights);
    Ok(g)
}

/// Canonical DIMACS text. Dead vertices are dropped and the rest renumbered.
pub fn write_dimacs(g: &Graph) -> String {
    if g.order() < g.capacity() {
        return write_dimacs(&g.compact().0);
    }
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.capacity(), g.edge_count());
    if let Some(w) = g.weights() {
        for (v, w) in w.iter().enumerate() {
            let _ = writeln!(out, "n {} {}", v + 1, w);
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn read_dimacs_file(path: impl AsRef<std::path::Path>) -> Result<Graph> {
    parse_dimacs(&std::fs::read_to_string(path)?)
}
