//! Binary graph operations. The second operand is relabeled after the first;
//! product vertex `(i, j)` lives at index `i * n2 + j`.

use super::{Graph, VertexId};
use crate::error::{Error, Result};

fn shifted(h: &Graph, offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    h.edges().iter().map(move |&(u, v)| (u + offset, v + offset))
}

/// Disjoint union `G ∪ H`.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.order();
    Graph::from_pairs(n1 + h.order(), g.edges().iter().copied().chain(shifted(h, n1)))
}

/// Join `G ∨ H`: the union plus every edge between the two vertex sets.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.order(), h.order());
    let cross = (0..n1).flat_map(move |u| (n1..n1 + n2).map(move |v| (u, v)));
    Graph::from_pairs(n1 + n2, g.edges().iter().copied().chain(shifted(h, n1)).chain(cross))
}

fn cartesian_pairs(g: &Graph, h: &Graph) -> Vec<(usize, usize)> {
    let (n1, n2) = (g.order(), h.order());
    let mut pairs = Vec::with_capacity(n1 * h.size() + n2 * g.size());
    for i in 0..n1 {
        for &(a, b) in h.edges() {
            pairs.push((i * n2 + a, i * n2 + b));
        }
    }
    for &(a, b) in g.edges() {
        for j in 0..n2 {
            pairs.push((a * n2 + j, b * n2 + j));
        }
    }
    pairs
}

fn direct_pairs(g: &Graph, h: &Graph) -> Vec<(usize, usize)> {
    let n2 = h.order();
    let mut pairs = Vec::with_capacity(2 * g.size() * h.size());
    for &(a, b) in g.edges() {
        for &(c, d) in h.edges() {
            pairs.push((a * n2 + c, b * n2 + d));
            pairs.push((a * n2 + d, b * n2 + c));
        }
    }
    pairs
}

/// Cartesian product `G × H`.
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    Graph::from_pairs(g.order() * h.order(), cartesian_pairs(g, h))
}

/// Direct (tensor) product `G ⊙ H`.
pub fn direct(g: &Graph, h: &Graph) -> Graph {
    Graph::from_pairs(g.order() * h.order(), direct_pairs(g, h))
}

/// Strong product `G ⊗ H`, whose edges are the cartesian and direct edges together.
pub fn strong(g: &Graph, h: &Graph) -> Graph {
    let mut pairs = cartesian_pairs(g, h);
    pairs.extend(direct_pairs(g, h));
    Graph::from_pairs(g.order() * h.order(), pairs)
}

/// Coalescence `G · H` identifying `u ∈ G` with `v ∈ H`.
///
/// The merged vertex is placed at index 0, followed by `V(G) \ {u}` and then
/// `V(H) \ {v}`, each in their original order.
pub fn coalesce(g: &Graph, u: VertexId, h: &Graph, v: VertexId) -> Result<Graph> {
    let (n1, n2) = (g.order(), h.order());
    if u.0 >= n1 {
        return Err(Error::InvalidVertex { vertex: u.0, order: n1 });
    }
    if v.0 >= n2 {
        return Err(Error::InvalidVertex { vertex: v.0, order: n2 });
    }
    let map_g = |x: usize| match x.cmp(&u.0) {
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => x + 1,
        std::cmp::Ordering::Greater => x,
    };
    let map_h = |y: usize| match y.cmp(&v.0) {
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => n1 + y,
        std::cmp::Ordering::Greater => n1 + y - 1,
    };
    let pairs = g
        .edges()
        .iter()
        .map(|&(a, b)| (map_g(a), map_g(b)))
        .chain(h.edges().iter().map(|&(a, b)| (map_h(a), map_h(b))));
    Ok(Graph::from_pairs(n1 + n2 - 1, pairs))
}
