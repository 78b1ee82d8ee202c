use serde::{Deserialize, Serialize};

use super::ops::{join, union};
use super::Graph;
use crate::error::{Error, Result};

/// The named families with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    /// `K_n`.
    Complete { n: usize },
    /// `P_n`: edges `{i, i+1}`.
    Path { n: usize },
    /// `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// `K_{p,q}`: part one is `0..p`, part two is `p..p+q`.
    CompleteBipartite { p: usize, q: usize },
    /// `K_{1,n-1}` with the center at vertex 0.
    Star { n: usize },
    /// Edgeless graph on `n` vertices.
    Empty { n: usize },
}

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

pub fn make_named(family: Family) -> Result<Graph> {
    match family {
        Family::Complete { n } => Ok(Graph::from_pairs(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
        )),
        Family::Path { n } => Ok(Graph::from_pairs(n, (1..n).map(|v| (v - 1, v)))),
        Family::Cycle { n } => {
            if n < 3 {
                return Err(out_of_range(format!("cycle requires n >= 3, got {n}")));
            }
            Ok(Graph::from_pairs(n, (0..n).map(|v| (v, (v + 1) % n))))
        }
        Family::CompleteBipartite { p, q } => {
            if p == 0 || q == 0 {
                return Err(out_of_range(format!(
                    "complete bipartite requires p, q >= 1, got ({p}, {q})"
                )));
            }
            Ok(Graph::from_pairs(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)))))
        }
        Family::Star { n } => {
            if n < 2 {
                return Err(out_of_range(format!("star requires n >= 2, got {n}")));
            }
            Ok(Graph::from_pairs(n, (1..n).map(|v| (0, v))))
        }
        Family::Empty { n } => Ok(Graph::empty(n)),
    }
}

fn clique_pairs(offset: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (offset + u, offset + v)))
}

/// Pineapple `K_p^q`: clique on `0..p`, pendants `p..p+q` hung on vertex 0.
pub fn make_pineapple(p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 1 {
        return Err(out_of_range(format!("pineapple requires p >= 3, q >= 1, got ({p}, {q})")));
    }
    let pairs = clique_pairs(0, p).chain((p..p + q).map(|w| (0, w)));
    Ok(Graph::from_pairs(p + q, pairs))
}

fn check_two_clique(name: &str, n: usize, l: usize) -> Result<()> {
    if n < 3 || l < 1 || l > n {
        return Err(out_of_range(format!("{name} requires n >= 3 and 1 <= l <= n, got ({n}, {l})")));
    }
    Ok(())
}

/// `H_n^l`: two copies of `K_n` (`0..n`, `n..2n`) with matching edges `{i, n+i}` for `i < l`.
pub fn make_h_graph(n: usize, l: usize) -> Result<Graph> {
    check_two_clique("H graph", n, l)?;
    let pairs = clique_pairs(0, n).chain(clique_pairs(n, n)).chain((0..l).map(|i| (i, n + i)));
    Ok(Graph::from_pairs(2 * n, pairs))
}

/// `KK_n^l`: two copies of `K_n` with hub vertex 0 joined to `n..n+l`.
pub fn make_kk_graph(n: usize, l: usize) -> Result<Graph> {
    check_two_clique("KK graph", n, l)?;
    let pairs = clique_pairs(0, n).chain(clique_pairs(n, n)).chain((n..n + l).map(|w| (0, w)));
    Ok(Graph::from_pairs(2 * n, pairs))
}

/// Core-satellite graph `K_c ∨ ηK_s`.
pub fn make_core_satellite(c: usize, s: usize, eta: usize) -> Result<Graph> {
    if c < 1 || s < 1 || eta < 2 {
        return Err(out_of_range(format!(
            "core-satellite requires c >= 1, s >= 1, eta >= 2, got ({c}, {s}, {eta})"
        )));
    }
    let core = make_named(Family::Complete { n: c })?;
    let satellite = make_named(Family::Complete { n: s })?;
    let satellites = (1..eta).fold(satellite.clone(), |acc, _| union(&acc, &satellite));
    Ok(join(&core, &satellites))
}

/// Splitting graph `S(G)`: vertex `v + n` is the shadow of `v`, adjacent to `N_G(v)`.
pub fn make_splitting(g: &Graph) -> Graph {
    let n = g.order();
    let shadows = g.edges().iter().flat_map(|&(u, v)| [(u + n, v), (v + n, u)]);
    Graph::from_pairs(2 * n, g.edges().iter().copied().chain(shadows))
}
