use crate::error::{contract, Error, Result};

/// Replacement gadget: two cliques A1 (rows) and A2 (columns) with a cross
/// adjacency matrix that is not all-true and has no induced C4 across.
///
/// No induced C4 is equivalent to the rows being totally ordered by
/// inclusion, which is what [`NonProper2Clique::new`] checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonProper2Clique {
    cross: Vec<Vec<bool>>,
}

impl NonProper2Clique {
    pub fn new(cross: Vec<Vec<bool>>) -> Result<Self> {
        let cols = cross.first().map_or(0, Vec::len);
        if cross.is_empty() || cols == 0 {
            return Err(contract("gadget sides must be non-empty"));
        }
        if cross.iter().any(|r| r.len() != cols) {
            return Err(contract("gadget cross matrix is ragged"));
        }
        if cross.iter().flatten().all(|&b| b) {
            return Err(contract("gadget sides are complete to each other"));
        }
        let mut rows: Vec<&Vec<bool>> = cross.iter().collect();
        rows.sort_by_key(|r| r.iter().filter(|&&b| b).count());
        let chain = rows.windows(2).all(|w| w[0].iter().zip(w[1]).all(|(&a, &b)| !a || b));
        if !chain {
            return Err(contract("gadget has an induced C4 across its cliques"));
        }
        Ok(NonProper2Clique { cross })
    }

    /// Two single vertices, not adjacent.
    pub fn collapse() -> Self {
        NonProper2Clique {
            cross: vec![vec![false]],
        }
    }

    pub fn a1(&self) -> usize {
        self.cross.len()
    }

    pub fn a2(&self) -> usize {
        self.cross[0].len()
    }

    pub fn cross(&self, i: usize, j: usize) -> bool {
        self.cross[i][j]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.cross
    }

    pub fn is_anticomplete(&self) -> bool {
        self.cross.iter().flatten().all(|&b| !b)
    }

    /// Whether every row is constant or every column is constant.
    ///
    /// Only such gadgets let a reduction create a PH pair that holds one
    /// whole side of the gadget while the other side stays outside it.
    pub fn has_uniform_side(&self) -> bool {
        let rows = self.cross.iter().all(|r| r.iter().all(|&b| b == r[0]));
        let cols = (0..self.a2()).all(|j| self.cross.iter().all(|r| r[j] == self.cross[0][j]));
        rows || cols
    }

    /// Rows as `0`/`1` strings.
    pub fn to_row_strings(&self) -> Vec<String> {
        self.cross
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }

    pub fn from_row_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cross = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::Trace(format!("bad cross matrix digit `{other}`"))),
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        NonProper2Clique::new(cross)
    }
}
