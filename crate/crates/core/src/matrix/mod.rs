//! Dense real matrices and the spectral kernels built on them: the graph
//! matrices `A`, `D`, `L_α`, `A_α`, a cyclic Jacobi eigensolver, characteristic
//! polynomials and equitable-partition quotients.

mod dense;
mod eigen;
mod graph_matrices;
mod poly;
mod quotient;
mod spectrum;

pub use dense::{kronecker, DenseMatrix, SymMatrix};
pub use eigen::{eigen_sym, eigen_sym_full, eigen_sym_values, SymEigen, MAX_SWEEPS};
pub use graph_matrices::{
    a_alpha_matrix, adjacency_matrix, degree_matrix, l_alpha_matrix, AlphaParam,
};
pub use poly::{char_poly, RealPoly};
pub use quotient::{quotient_matrix, quotient_spectrum, Partition, EQUITABLE_TOL};
pub use spectrum::{Eigenvalue, Spectrum, GROUPING_TOL};
