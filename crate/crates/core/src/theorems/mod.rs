//! Closed-form `L_α` spectra and characteristic polynomials.
//!
//! Functions named `spec_*` / `charpoly_*` take the inputs the formula needs
//! (orders, degrees, factor spectra). The `*_of` wrappers take graphs, check
//! the hypotheses (regularity, connectivity) and compute those inputs.

mod basic;
mod families;
mod operations;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{adjacency_matrix, eigen_sym_values, RealPoly, Spectrum};

pub use basic::{
    spec_complete, spec_complete_bipartite, spec_regular_shift, spec_star, twin_eigenvalues,
    TwinEigenvalue,
};
pub use families::{
    charpoly_splitting_regular, charpoly_splitting_regular_of, core_satellite_printed_check,
    h_graph_partition, h_graph_quotient, h_graph_theta, h_graph_theta_check, kk_graph_partition,
    kk_graph_printed_check, kk_graph_printed_poly, kk_graph_quotient, pineapple_partition,
    pineapple_printed_check, pineapple_printed_poly, pineapple_quotient, spec_core_satellite,
    spec_h_graph, spec_kk_graph, spec_pineapple, splitting_factors, BlockQuotient, PrintedCheck,
};
pub use operations::{
    charpoly_coalescence, charpoly_coalescence_of, eigenpairs_orthogonal_to_ones,
    join_lifted_eigs, spec_cartesian, spec_direct_regular, spec_direct_regular_of,
    spec_direct_subset, spec_direct_subset_of, spec_join_regular, spec_join_regular_of,
    spec_strong_regular, spec_strong_regular_of, spec_strong_subset, spec_strong_subset_of,
    spec_union, EigenPair, ORTHOGONALITY_TOL,
};

/// Identifies a closed form (or a structural spectral property).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Complete,
    CompleteBipartite,
    Star,
    RegularShift,
    Twins,
    Union,
    JoinLifted,
    JoinRegular,
    Cartesian,
    DirectSubset,
    DirectRegular,
    StrongSubset,
    StrongRegular,
    Coalescence,
    Splitting,
    Pineapple,
    HGraph,
    KkGraph,
    CoreSatellite,
    Quotient,
    BipartiteEquiv,
    Nonnegativity,
}

impl TheoremId {
    pub const ALL: [TheoremId; 22] = [
        TheoremId::Complete,
        TheoremId::CompleteBipartite,
        TheoremId::Star,
        TheoremId::RegularShift,
        TheoremId::Twins,
        TheoremId::Union,
        TheoremId::JoinLifted,
        TheoremId::JoinRegular,
        TheoremId::Cartesian,
        TheoremId::DirectSubset,
        TheoremId::DirectRegular,
        TheoremId::StrongSubset,
        TheoremId::StrongRegular,
        TheoremId::Coalescence,
        TheoremId::Splitting,
        TheoremId::Pineapple,
        TheoremId::HGraph,
        TheoremId::KkGraph,
        TheoremId::CoreSatellite,
        TheoremId::Quotient,
        TheoremId::BipartiteEquiv,
        TheoremId::Nonnegativity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Complete => "complete",
            TheoremId::CompleteBipartite => "complete-bipartite",
            TheoremId::Star => "star",
            TheoremId::RegularShift => "regular-shift",
            TheoremId::Twins => "twins",
            TheoremId::Union => "union",
            TheoremId::JoinLifted => "join-lifted",
            TheoremId::JoinRegular => "join-regular",
            TheoremId::Cartesian => "cartesian",
            TheoremId::DirectSubset => "direct-subset",
            TheoremId::DirectRegular => "direct-regular",
            TheoremId::StrongSubset => "strong-subset",
            TheoremId::StrongRegular => "strong-regular",
            TheoremId::Coalescence => "coalescence",
            TheoremId::Splitting => "splitting",
            TheoremId::Pineapple => "pineapple",
            TheoremId::HGraph => "h-graph",
            TheoremId::KkGraph => "kk-graph",
            TheoremId::CoreSatellite => "core-satellite",
            TheoremId::Quotient => "quotient",
            TheoremId::BipartiteEquiv => "bipartite-equiv",
            TheoremId::Nonnegativity => "nonnegativity",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown theorem '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremOutput {
    Spectrum(Spectrum),
    /// Predicted eigenvalues (subset theorems).
    Values(Vec<f64>),
    /// Predicted eigenvalues with lower bounds on their multiplicity.
    Bounded(Vec<(f64, usize)>),
    Polynomial(RealPoly),
}

/// What a closed form produced for one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremResult {
    pub theorem: TheoremId,
    pub output: TheoremOutput,
    /// True when the output covers only part of the spectrum.
    pub subset_only: bool,
}

/// Degree `k` and adjacency eigenvalues (descending) of a regular graph.
pub fn regular_adjacency(g: &Graph) -> Result<(usize, Vec<f64>)> {
    let k = g
        .regular_degree()
        .ok_or_else(|| Error::NotRegular(format!(" (order {}, degrees {:?})", g.order(), g.degrees())))?;
    Ok((k, eigen_sym_values(&adjacency_matrix(g))?))
}

/// Checks that `spec_a` looks like the adjacency spectrum of a `k`-regular graph
/// of order `n`: right length, largest eigenvalue `k`.
pub(crate) fn check_regular_spectrum(k: usize, n: usize, spec_a: &[f64]) -> Result<()> {
    if spec_a.len() != n {
        return Err(Error::SizeMismatch(format!(
            "adjacency spectrum has {} values, expected {n}",
            spec_a.len()
        )));
    }
    match spec_a.first() {
        Some(&top) if (top - k as f64).abs() > 1e-8 * (k as f64).max(1.0) => Err(Error::NotRegular(
            format!(": largest adjacency eigenvalue {top} differs from degree {k}"),
        )),
        _ => Ok(()),
    }
}

/// Eigenvalues of `[[a, b], [c, d]]` (descending) when `bc >= 0`.
pub(crate) fn eig2(a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
    let mean = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b * c).max(0.0).sqrt();
    (mean + half_gap, mean - half_gap)
}

pub(crate) fn reject_alpha_one(alpha: crate::matrix::AlphaParam, what: &'static str) -> Result<()> {
    if alpha.value() >= 1.0 {
        Err(Error::AlphaBoundary(what))
    } else {
        Ok(())
    }
}
