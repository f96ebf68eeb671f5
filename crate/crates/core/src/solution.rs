//! Plain-text solution files.
//!
//! A colouring file has one `vertex color` line per vertex, a stable-set file
//! one vertex per line. Vertices are 1-indexed in files and 0-based in
//! memory. Blank lines and lines starting with `c` are skipped.

use crate::error::{Error, Result};

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let parse = |msg: String| Error::Parse { line, msg };
    let v: usize = tok.parse().map_err(|_| parse(format!("bad vertex `{tok}`")))?;
    if v == 0 || v > n {
        return Err(parse(format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

/// Reads a colouring of an `n`-vertex graph. Every vertex must appear once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = vec![None; n];
    for (line, l) in lines(text) {
        let parse = |msg: String| Error::Parse { line, msg };
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [v, c] = toks[..] else {
            return Err(parse("expected `vertex color`".into()));
        };
        let v = vertex(line, v, n)?;
        let c: usize = c.parse().map_err(|_| parse(format!("bad colour `{c}`")))?;
        if out[v].replace(c).is_some() {
            return Err(parse(format!("vertex {} coloured twice", v + 1)));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::InvalidSolution(format!("vertex {} has no colour", v + 1))))
        .collect()
}

pub fn write_coloring(coloring: &[usize]) -> String {
    coloring
        .iter()
        .enumerate()
        .map(|(v, c)| format!("{} {c}\n", v + 1))
        .collect()
}

/// Reads a stable set of an `n`-vertex graph, sorted and free of repeats.
pub fn parse_stable_set(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (line, l) in lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [v] = toks[..] else {
            return Err(Error::Parse {
                line,
                msg: "expected one vertex".into(),
            });
        };
        out.push(vertex(line, v, n)?);
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSolution("repeated vertex".into()));
    }
    Ok(out)
}

pub fn write_stable_set(set: &[usize]) -> String {
    set.iter().map(|v| format!("{}\n", v + 1)).collect()
}

/// Moves a colouring of a compacted graph onto the ids it came from.
/// Ids not in `ids` get colour 0.
pub fn expand_coloring(coloring: &[usize], ids: &[usize], capacity: usize) -> Vec<usize> {
    let mut out = vec![0; capacity];
    for (&c, &v) in coloring.iter().zip(ids) {
        out[v] = c;
    }
    out
}
