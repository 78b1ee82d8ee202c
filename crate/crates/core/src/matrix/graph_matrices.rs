use std::fmt;

use serde::Serialize;

use super::SymMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Convex parameter `α ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub const ZERO: AlphaParam = AlphaParam(0.0);
    pub const HALF: AlphaParam = AlphaParam(0.5);
    pub const ONE: AlphaParam = AlphaParam(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(AlphaParam(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `steps` evenly spaced values from `start` to `end` inclusive, each
    /// computed as `start + i * (end - start) / (steps - 1)`.
    pub fn grid(start: f64, end: f64, steps: usize) -> Result<Vec<AlphaParam>> {
        if steps < 2 {
            return Err(Error::ParameterOutOfRange(format!("grid needs at least 2 steps, got {steps}")));
        }
        let (a, b) = (Self::new(start)?, Self::new(end)?);
        if a.0 >= b.0 {
            return Err(Error::ParameterOutOfRange(format!("grid start {start} must be below end {end}")));
        }
        let last = (steps - 1) as f64;
        Ok((0..steps)
            .map(|i| if i + 1 == steps { b } else { AlphaParam(a.0 + (b.0 - a.0) * i as f64 / last) })
            .collect())
    }

    /// `{0, 0.1, ..., 1.0}` computed as `i / 10` so every point is the nearest double.
    pub fn tenths() -> Vec<AlphaParam> {
        (0..=10).map(|i| AlphaParam(f64::from(i) / 10.0)).collect()
    }
}

impl TryFrom<f64> for AlphaParam {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn combine(g: &Graph, degree_weight: f64, edge_weight: f64) -> SymMatrix {
    SymMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            degree_weight * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            edge_weight
        } else {
            0.0
        }
    })
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    combine(g, 0.0, 1.0)
}

pub fn degree_matrix(g: &Graph) -> SymMatrix {
    combine(g, 1.0, 0.0)
}

/// `L_α(G) = αD(G) + (α − 1)A(G)`.
pub fn l_alpha_matrix(g: &Graph, alpha: AlphaParam) -> SymMatrix {
    combine(g, alpha.0, alpha.0 - 1.0)
}

/// `A_α(G) = αD(G) + (1 − α)A(G)`.
pub fn a_alpha_matrix(g: &Graph, alpha: AlphaParam) -> SymMatrix {
    combine(g, alpha.0, 1.0 - alpha.0)
}
