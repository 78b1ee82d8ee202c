//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each rotation annihilates one off-diagonal pair; sweeps visit every pair in
//! row order. Iteration stops once the off-diagonal Frobenius norm drops below
//! `1e-13 * max(1, ||M||_F)`.

use super::{DenseMatrix, Spectrum, SymMatrix};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Eigenvalues sorted descending, with the matching orthonormal eigenvectors
/// as the columns of `vectors` when requested.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Option<DenseMatrix>,
}

impl SymEigen {
    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_values(self.values.iter().copied())
    }

    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> Option<Vec<f64>> {
        let q = self.vectors.as_ref()?;
        Some((0..q.rows()).map(|i| q[(i, k)]).collect())
    }
}

fn off_diagonal_norm(a: &DenseMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += 2.0 * a[(i, j)] * a[(i, j)];
        }
    }
    sum.sqrt()
}

fn jacobi(m: &SymMatrix, want_vectors: bool) -> Result<SymEigen> {
    let n = m.dim();
    let mut a = m.as_dense().clone();
    let mut q = want_vectors.then(|| DenseMatrix::identity(n));
    let threshold = OFF_DIAGONAL_TOL * m.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for r in p + 1..n {
                let apr = a[(p, r)];
                if apr == 0.0 {
                    continue;
                }
                let theta = (a[(r, r)] - a[(p, p)]) / (2.0 * apr);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akr) = (a[(k, p)], a[(k, r)]);
                    a[(k, p)] = c * akp - s * akr;
                    a[(k, r)] = s * akp + c * akr;
                }
                for k in 0..n {
                    let (apk, ark) = (a[(p, k)], a[(r, k)]);
                    a[(p, k)] = c * apk - s * ark;
                    a[(r, k)] = s * apk + c * ark;
                }
                a[(p, r)] = 0.0;
                a[(r, p)] = 0.0;
                if let Some(q) = q.as_mut() {
                    for k in 0..n {
                        let (qkp, qkr) = (q[(k, p)], q[(k, r)]);
                        q[(k, p)] = c * qkp - s * qkr;
                        q[(k, r)] = s * qkp + c * qkr;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = q.map(|q| DenseMatrix::from_fn(n, n, |i, k| q[(i, order[k])]));
    Ok(SymEigen { values, vectors })
}

/// Eigenvalues only, sorted descending.
pub fn eigen_sym_values(m: &SymMatrix) -> Result<Vec<f64>> {
    jacobi(m, false).map(|e| e.values)
}

/// Eigenvalues grouped into a [`Spectrum`].
pub fn eigen_sym(m: &SymMatrix) -> Result<Spectrum> {
    jacobi(m, false).map(|e| e.spectrum())
}

/// Eigenvalues and orthonormal eigenvectors.
pub fn eigen_sym_full(m: &SymMatrix) -> Result<SymEigen> {
    jacobi(m, true)
}
