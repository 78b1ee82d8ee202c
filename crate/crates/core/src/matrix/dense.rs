use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Row-major dense real matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, entries: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::SizeMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
        }
        Ok(DenseMatrix { rows: rows.len(), cols, entries: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, factor: f64) -> Self {
        DenseMatrix { entries: self.entries.iter().map(|x| x * factor).collect(), ..*self }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

/// Kronecker product: block `(i, j)` of the result is `a[i][j] * b`.
pub fn kronecker(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (p, q) = (b.rows, b.cols);
    DenseMatrix::from_fn(a.rows * p, a.cols * q, |r, c| a[(r / p, c / q)] * b[(r % p, c % q)])
}

/// Square matrix with `m[i][j] == m[j][i]` bit-for-bit.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SymMatrix(DenseMatrix);

impl SymMatrix {
    /// Evaluates `f` on the upper triangle and mirrors it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                m[(i, j)] = x;
                m[(j, i)] = x;
            }
        }
        SymMatrix(m)
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix(DenseMatrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix(DenseMatrix::identity(n))
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::try_from(DenseMatrix::from_rows(rows)?)
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn into_dense(self) -> DenseMatrix {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn scale(&self, factor: f64) -> Self {
        SymMatrix(self.0.scale(factor))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.0.add(&other.0).map(SymMatrix)
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.frobenius_norm()
    }

    /// Principal submatrix on the given (ordered) indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]))
    }

    /// Principal submatrix with row and column `v` removed.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| i != v).collect();
        self.principal_submatrix(&keep)
    }
}

impl TryFrom<DenseMatrix> for SymMatrix {
    type Error = Error;

    fn try_from(m: DenseMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::SizeMismatch(format!("{}x{} matrix is not square", m.rows, m.cols)));
        }
        for i in 0..m.rows {
            for j in i + 1..m.cols {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix(m))
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    // Integer-valued entries keep every product exact, so the algebraic
    // identities below can be asserted with `==`.
    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = DenseMatrix> {
        proptest::collection::vec(-5i32..=5, rows * cols)
            .prop_map(move |v| DenseMatrix::from_fn(rows, cols, |i, j| f64::from(v[i * cols + j])))
    }

    #[test]
    fn kronecker_block_layout() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = DenseMatrix::from_rows(&[vec![0.0, 5.0, 1.0]]).unwrap();
        let k = kronecker(&a, &b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
        assert_eq!(k.row(0), &[0.0, 5.0, 1.0, 0.0, 10.0, 2.0]);
        assert_eq!(k.row(1), &[0.0, 15.0, 3.0, 0.0, 20.0, 4.0]);
    }

    #[test]
    fn kronecker_identity_and_zero() {
        assert_eq!(kronecker(&DenseMatrix::identity(2), &DenseMatrix::identity(3)), DenseMatrix::identity(6));
        let a = DenseMatrix::from_rows(&[vec![1.0, -2.0], vec![0.5, 4.0]]).unwrap();
        let z = DenseMatrix::zeros(2, 2);
        assert_eq!(kronecker(&a, &z), DenseMatrix::zeros(4, 4));
        assert_eq!(kronecker(&z, &a), DenseMatrix::zeros(4, 4));
    }

    #[test]
    fn symmetric_construction() {
        let bad = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        assert_eq!(SymMatrix::try_from(bad), Err(Error::NotSymmetric { row: 0, col: 1 }));
        let rect = DenseMatrix::zeros(2, 3);
        assert!(matches!(SymMatrix::try_from(rect), Err(Error::SizeMismatch(_))));
        let m = SymMatrix::from_fn(3, |i, j| (i * 3 + j) as f64);
        assert_eq!(m.get(2, 0), m.get(0, 2));
        let d = m.delete_vertex(1);
        assert_eq!(d.as_dense().to_rows(), vec![vec![0.0, 2.0], vec![2.0, 8.0]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(DenseMatrix::from_rows(&[vec![1.0], vec![1.0, 2.0]]).is_err());
    }

    proptest! {
        #[test]
        fn kronecker_algebra(
            a in arb_matrix(2, 2), b in arb_matrix(2, 2), c in arb_matrix(2, 2), d in arb_matrix(2, 2),
            lambda in -4i32..=4,
        ) {
            let l = f64::from(lambda);
            // scalar factors
            prop_assert_eq!(kronecker(&a.scale(l), &b), kronecker(&a, &b).scale(l));
            prop_assert_eq!(kronecker(&a, &b.scale(l)), kronecker(&a, &b).scale(l));
            // transpose
            prop_assert_eq!(kronecker(&a, &b).transpose(), kronecker(&a.transpose(), &b.transpose()));
            // associativity
            prop_assert_eq!(kronecker(&kronecker(&a, &b), &c), kronecker(&a, &kronecker(&b, &c)));
            // bilinearity
            prop_assert_eq!(kronecker(&a.add(&b).unwrap(), &c), kronecker(&a, &c).add(&kronecker(&b, &c)).unwrap());
            prop_assert_eq!(kronecker(&a, &b.add(&c).unwrap()), kronecker(&a, &b).add(&kronecker(&a, &c)).unwrap());
            // mixed product
            let lhs = kronecker(&a, &b).matmul(&kronecker(&c, &d)).unwrap();
            let rhs = kronecker(&a.matmul(&c).unwrap(), &b.matmul(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kronecker_mixed_product_rectangular(a in arb_matrix(2, 3), b in arb_matrix(1, 2), c in arb_matrix(3, 2), d in arb_matrix(2, 2)) {
            let lhs = kronecker(&a, &b).matmul(&kronecker(&c, &d)).unwrap();
            let rhs = kronecker(&a.matmul(&c).unwrap(), &b.matmul(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
