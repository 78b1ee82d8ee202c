use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    make_core_satellite, make_h_graph, make_kk_graph, make_named, make_pineapple, Family, Graph,
};

/// A serializable recipe for a test graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphSpec {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    CompleteBipartite { p: usize, q: usize },
    Star { n: usize },
    Empty { n: usize },
    Pineapple { p: usize, q: usize },
    HGraph { n: usize, l: usize },
    KkGraph { n: usize, l: usize },
    CoreSatellite { c: usize, s: usize, eta: usize },
    Edges { n: usize, edges: Vec<(usize, usize)> },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphSpec::Complete { n } => make_named(Family::Complete { n }),
            GraphSpec::Path { n } => make_named(Family::Path { n }),
            GraphSpec::Cycle { n } => make_named(Family::Cycle { n }),
            GraphSpec::CompleteBipartite { p, q } => make_named(Family::CompleteBipartite { p, q }),
            GraphSpec::Star { n } => make_named(Family::Star { n }),
            GraphSpec::Empty { n } => make_named(Family::Empty { n }),
            GraphSpec::Pineapple { p, q } => make_pineapple(p, q),
            GraphSpec::HGraph { n, l } => make_h_graph(n, l),
            GraphSpec::KkGraph { n, l } => make_kk_graph(n, l),
            GraphSpec::CoreSatellite { c, s, eta } => make_core_satellite(c, s, eta),
            GraphSpec::Edges { n, ref edges } => Graph::new(n, edges.iter().copied()),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphSpec::Edges { n: g.order(), edges: g.edges().to_vec() }
    }
}

impl From<Family> for GraphSpec {
    fn from(f: Family) -> Self {
        match f {
            Family::Complete { n } => GraphSpec::Complete { n },
            Family::Path { n } => GraphSpec::Path { n },
            Family::Cycle { n } => GraphSpec::Cycle { n },
            Family::CompleteBipartite { p, q } => GraphSpec::CompleteBipartite { p, q },
            Family::Star { n } => GraphSpec::Star { n },
            Family::Empty { n } => GraphSpec::Empty { n },
        }
    }
}

/// Short labels: `k5`, `p3`, `c4`, `k3,2`, `star5`, `empty3`, `pineapple5,3`,
/// `h4,2`, `kk4,2`, `theta3,2,3`. Edge-list specs print as `g<n>m<m>`.
impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete { n } => write!(f, "k{n}"),
            GraphSpec::Path { n } => write!(f, "p{n}"),
            GraphSpec::Cycle { n } => write!(f, "c{n}"),
            GraphSpec::CompleteBipartite { p, q } => write!(f, "k{p},{q}"),
            GraphSpec::Star { n } => write!(f, "star{n}"),
            GraphSpec::Empty { n } => write!(f, "empty{n}"),
            GraphSpec::Pineapple { p, q } => write!(f, "pineapple{p},{q}"),
            GraphSpec::HGraph { n, l } => write!(f, "h{n},{l}"),
            GraphSpec::KkGraph { n, l } => write!(f, "kk{n},{l}"),
            GraphSpec::CoreSatellite { c, s, eta } => write!(f, "theta{c},{s},{eta}"),
            GraphSpec::Edges { n, edges } => write!(f, "g{n}m{}", edges.len()),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParameterOutOfRange(format!("unrecognized graph name '{s}'"));
        let lower = s.trim().to_ascii_lowercase();
        let split = lower.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (name, rest) = lower.split_at(split);
        let nums: Vec<usize> = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        Ok(match (name, nums.as_slice()) {
            ("k", &[n]) => GraphSpec::Complete { n },
            ("k", &[p, q]) => GraphSpec::CompleteBipartite { p, q },
            ("p", &[n]) => GraphSpec::Path { n },
            ("c", &[n]) => GraphSpec::Cycle { n },
            ("star", &[n]) => GraphSpec::Star { n },
            ("empty", &[n]) => GraphSpec::Empty { n },
            ("pineapple", &[p, q]) => GraphSpec::Pineapple { p, q },
            ("h", &[n, l]) => GraphSpec::HGraph { n, l },
            ("kk", &[n, l]) => GraphSpec::KkGraph { n, l },
            ("theta", &[c, s, eta]) => GraphSpec::CoreSatellite { c, s, eta },
            _ => return Err(bad()),
        })
    }
}
