use std::collections::BTreeMap;

use serde::Serialize;

use super::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwinKind {
    /// Equal closed neighborhoods `N[u] = N[v]`.
    TrueTwin,
    /// Nonadjacent with equal open neighborhoods `N(u) = N(v)`.
    FalseTwin,
}

/// A maximal class of pairwise twin vertices (at least two members).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub kind: TwinKind,
    pub vertices: Vec<VertexId>,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub degrees: Vec<usize>,
    /// Common degree when the graph is regular.
    pub regular: Option<usize>,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub connected: bool,
    pub twin_classes: Vec<TwinClass>,
}

impl StructuralReport {
    pub fn is_regular(&self) -> bool {
        self.regular.is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

fn classes_by_key<K: Ord>(g: &Graph, kind: TwinKind, key: impl Fn(usize) -> K) -> Vec<TwinClass> {
    let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        groups.entry(key(v)).or_default().push(v);
    }
    groups
        .into_values()
        .filter(|members| members.len() >= 2)
        .map(|members| TwinClass {
            kind,
            degree: g.degree(members[0]),
            vertices: members.into_iter().map(VertexId).collect(),
        })
        .collect()
}

/// Maximal true-twin and false-twin classes, ordered by smallest member.
pub fn twin_classes(g: &Graph) -> Vec<TwinClass> {
    let closed = |v: usize| {
        let mut nb = g.neighbors(v).to_vec();
        let pos = nb.partition_point(|&w| w < v);
        nb.insert(pos, v);
        nb
    };
    let open = |v: usize| g.neighbors(v).to_vec();
    let mut classes = classes_by_key(g, TwinKind::TrueTwin, closed);
    classes.extend(classes_by_key(g, TwinKind::FalseTwin, open));
    classes.sort_by_key(|c| c.vertices[0]);
    classes
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    StructuralReport {
        degrees: g.degrees(),
        regular: g.regular_degree(),
        bipartition: g.bipartition(),
        connected: g.is_connected(),
        twin_classes: twin_classes(g),
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::graph::{make_named, make_pineapple, Family};

    #[test]
    fn cycle_five() {
        let r = structural_report(&make_named(Family::Cycle { n: 5 }).unwrap());
        assert_eq!(r.regular, Some(2));
        assert!(!r.is_bipartite());
        assert!(r.connected);
        assert!(r.twin_classes.is_empty());
    }

    #[test]
    fn star_leaves_are_false_twins() {
        let r = structural_report(&make_named(Family::Star { n: 5 }).unwrap());
        assert_eq!(r.twin_classes.len(), 1);
        let c = &r.twin_classes[0];
        assert_eq!(c.kind, TwinKind::FalseTwin);
        assert_eq!(c.vertices.len(), 4);
        assert_eq!(c.degree, 1);
    }

    #[test]
    fn complete_graph_is_one_true_twin_class() {
        let r = structural_report(&make_named(Family::Complete { n: 4 }).unwrap());
        assert_eq!(r.twin_classes.len(), 1);
        assert_eq!(r.twin_classes[0].kind, TwinKind::TrueTwin);
        assert_eq!(r.twin_classes[0].vertices.len(), 4);
        assert_eq!(r.twin_classes[0].degree, 3);
    }

    #[test]
    fn pineapple_twins() {
        let r = structural_report(&make_pineapple(5, 3).unwrap());
        let kinds: Vec<_> = r.twin_classes.iter().map(|c| (c.kind, c.vertices.len(), c.degree)).collect();
        assert_eq!(kinds, vec![(TwinKind::TrueTwin, 4, 4), (TwinKind::FalseTwin, 3, 1)]);
    }

    #[test]
    fn isolated_vertices_are_false_twins() {
        let r = structural_report(&Graph::empty(3));
        assert_eq!(r.twin_classes.len(), 1);
        assert_eq!(r.twin_classes[0].kind, TwinKind::FalseTwin);
        assert_eq!(r.twin_classes[0].degree, 0);
    }

    fn true_twins(g: &Graph, u: usize, v: usize) -> bool {
        g.has_edge(u, v)
            && (0..g.order()).filter(|&w| w != u && w != v).all(|w| g.has_edge(u, w) == g.has_edge(v, w))
    }

    fn false_twins(g: &Graph, u: usize, v: usize) -> bool {
        !g.has_edge(u, v) && (0..g.order()).all(|w| g.has_edge(u, w) == g.has_edge(v, w))
    }

    #[test]
    fn classes_match_pairwise_definition_exhaustively() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let pairs: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let g = Graph::new(n, pairs).unwrap();
            let classes = twin_classes(&g);
            let class_of = |v: usize| {
                classes.iter().find(|c| c.vertices.contains(&VertexId(v))).map(|c| (c.kind, c.vertices[0]))
            };
            for u in 0..n {
                for v in u + 1..n {
                    let expected = if true_twins(&g, u, v) {
                        Some(TwinKind::TrueTwin)
                    } else if false_twins(&g, u, v) {
                        Some(TwinKind::FalseTwin)
                    } else {
                        None
                    };
                    let (cu, cv) = (class_of(u), class_of(v));
                    let reported = match (cu, cv) {
                        (Some(a), Some(b)) if a == b => Some(a.0),
                        _ => None,
                    };
                    assert_eq!(reported, expected, "pair ({u}, {v}) in {:?}", g.edges());
                }
            }
            for c in &classes {
                assert!(c.vertices.iter().all(|v| g.degree(v.0) == c.degree));
            }
        }
    }
}
