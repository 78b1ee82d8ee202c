//! Equitable partitions and their quotient matrices.

use serde::{Deserialize, Serialize};

use super::{eigen_sym, DenseMatrix, Spectrum, SymMatrix};
use crate::error::{Error, Result};

/// Absolute tolerance for the constant-row-sum check.
pub const EQUITABLE_TOL: f64 = 1e-10;

/// Ordered, disjoint, non-empty blocks covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range for n = {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { blocks })
    }

    /// Every vertex in its own block.
    pub fn singletons(n: usize) -> Self {
        Partition { blocks: (0..n).map(|v| vec![v]).collect() }
    }

    /// All vertices in one block.
    pub fn single_block(n: usize) -> Self {
        Partition { blocks: vec![(0..n).collect()] }
    }

    /// Consecutive index ranges of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let block: Vec<usize> = (start..start + s).collect();
                start += s;
                block
            })
            .collect();
        Self::new(start, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Number of vertices covered.
    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// `k × k` matrix of block row sums `c_ij`. Fails unless every row of every
/// block pair has the same sum (within [`EQUITABLE_TOL`]).
pub fn quotient_matrix(m: &SymMatrix, p: &Partition) -> Result<DenseMatrix> {
    if p.order() != m.dim() {
        return Err(Error::SizeMismatch(format!(
            "partition covers {} vertices, matrix has dimension {}",
            p.order(),
            m.dim()
        )));
    }
    let k = p.len();
    let mut q = DenseMatrix::zeros(k, k);
    for (bi, rows) in p.blocks().iter().enumerate() {
        for (bj, cols) in p.blocks().iter().enumerate() {
            let row_sum = |r: usize| cols.iter().map(|&c| m.get(r, c)).sum::<f64>();
            let first = row_sum(rows[0]);
            for &r in &rows[1..] {
                let s = row_sum(r);
                if (s - first).abs() > EQUITABLE_TOL {
                    return Err(Error::NotEquitable {
                        block_row: bi,
                        block_col: bj,
                        row_a: rows[0],
                        row_b: r,
                        sum_a: first,
                        sum_b: s,
                    });
                }
            }
            q[(bi, bj)] = first;
        }
    }
    Ok(q)
}

/// Eigenvalues of the quotient matrix.
///
/// For a symmetric base matrix, `n_i c_ij = n_j c_ji`, so `S Q S⁻¹` with
/// `S = diag(√n_i)` is symmetric and has the same spectrum as `Q`.
pub fn quotient_spectrum(m: &SymMatrix, p: &Partition) -> Result<Spectrum> {
    let q = quotient_matrix(m, p)?;
    let sizes = p.sizes();
    let sym = SymMatrix::from_fn(q.rows(), |i, j| {
        let ratio = (sizes[i] as f64 / sizes[j] as f64).sqrt();
        0.5 * (q[(i, j)] * ratio + q[(j, i)] / ratio)
    });
    eigen_sym(&sym)
}
