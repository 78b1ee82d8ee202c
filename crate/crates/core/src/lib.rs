//! Spectra of `L_α(G) = αD(G) + (α − 1)A(G)` under graph operations and for
//! several graph families, checked against a dense symmetric eigensolver.
//!
//! - [`graph`]: simple graphs, named families, operations, twins.
//! - [`matrix`]: `A`, `D`, `L_α`, `A_α`, Jacobi eigensolver, characteristic
//!   polynomials, equitable quotients.
//! - [`theorems`]: closed-form spectra and characteristic polynomials.
//! - [`verify`]: runs every closed form against the eigensolver over α-grids.

pub mod error;
pub mod graph;
pub mod matrix;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
