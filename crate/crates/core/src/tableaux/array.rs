use serde::{Deserialize, Serialize};

use super::diagram::{Cell, Diagram, Sign};
use super::partition::Partition;
use crate::qtcore::{HalfInt, Monomial, VarLabel};

/// Order-reversing array of non-negative integers over a diagram, stored in
/// the diagram's row-major cell order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PPartitionArray {
    values: Vec<u32>,
}

impl PPartitionArray {
    pub fn new(values: Vec<u32>) -> Self {
        Self { values }
    }

    /// Builds from row lists (as printed: row `i` starts at column 1, or at
    /// column `i` for shifted shapes).
    pub fn from_rows(diagram: &Diagram, rows: &[Vec<u32>]) -> Option<Self> {
        let flat: Vec<u32> = rows.iter().flatten().copied().collect();
        if flat.len() != diagram.len() {
            return None;
        }
        let arr = Self { values: flat };
        arr.is_order_reversing(diagram).then_some(arr)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn total(&self) -> u32 {
        self.values.iter().sum()
    }

    pub fn rows(&self, diagram: &Diagram) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (c, &v) in diagram.cells().iter().zip(&self.values) {
            let r = (c.i - 1) as usize;
            if rows.len() <= r {
                rows.resize(r + 1, Vec::new());
            }
            rows[r].push(v);
        }
        rows
    }

    /// Entry at `(k, l)`, or `None` outside the diagram.
    pub fn get(&self, diagram: &Diagram, k: i32, l: i32) -> Option<u32> {
        diagram.index_of(Cell::new(k, l)).map(|x| self.values[x])
    }

    /// Entry with the out-of-range convention: any `k <= 0` or `l <= 0`
    /// (and `k > l` for shifted shapes) reads as 0.
    pub fn entry(&self, diagram: &Diagram, k: i32, l: i32) -> u32 {
        if k <= 0 || l <= 0 || (diagram.is_shifted() && k > l) {
            return 0;
        }
        self.get(diagram, k, l)
            .expect("cells up and to the left of a diagram cell are in the diagram")
    }

    pub fn is_order_reversing(&self, diagram: &Diagram) -> bool {
        diagram.cells().iter().zip(&self.values).all(|(c, &v)| {
            [Cell::new(c.i + 1, c.j), Cell::new(c.i, c.j + 1)]
                .iter()
                .all(|&n| diagram.index_of(n).is_none_or(|x| self.values[x] >= v))
        })
    }

    /// `z^{tr(σ)} = prod z_{j-i}^{σ(i,j)}`.
    pub fn trace_monomial(&self, diagram: &Diagram) -> Monomial {
        Monomial::from_factors(
            diagram
                .cells()
                .iter()
                .zip(&self.values)
                .filter(|(_, &v)| v > 0)
                .map(|(c, &v)| (VarLabel::Int(c.content()), HalfInt::from_int(v as i32))),
        )
    }

    /// `k`-th trace of a shifted array, `(…, σ_{2,k+2}, σ_{1,k+1})`, read from
    /// the south-east end (zeros dropped).
    pub fn trace(&self, diagram: &Diagram, k: i32) -> Partition {
        let mut seq = Vec::new();
        let mut i = 1;
        while let Some(v) = self.get(diagram, i, i + k) {
            seq.push(v);
            i += 1;
        }
        seq.reverse();
        Partition::from_padded(seq).expect("diagonals of a reverse plane partition decrease SE to NW")
    }

    pub fn profile(&self, diagram: &Diagram) -> Partition {
        self.trace(diagram, 0)
    }
}

/// Profile `σ[0]` and traces `σ[k]`, `0 <= k <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileData {
    pub traces: Vec<Partition>,
}

impl ProfileData {
    pub fn profile(&self) -> &Partition {
        &self.traces[0]
    }

    /// Checks `σ[k-1] ≻ σ[k]` for `ε_k = +` and `σ[k-1] ≺ σ[k]` for `ε_k = -`.
    pub fn interlaces(&self, eps: &[Sign]) -> bool {
        eps.iter().enumerate().all(|(k, s)| {
            let (prev, next) = (&self.traces[k], &self.traces[k + 1]);
            match s {
                Sign::Plus => prev.interlaces_above(next),
                Sign::Minus => next.interlaces_above(prev),
            }
        })
    }
}

pub fn traces_and_profile(sigma: &PPartitionArray, diagram: &Diagram, n: u32) -> ProfileData {
    ProfileData {
        traces: (0..=n as i32).map(|k| sigma.trace(diagram, k)).collect(),
    }
}
