use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GraphSpec, VerificationCase};
use crate::graph::Graph;
use crate::theorems::TheoremId;

pub const CORPUS_SEED: u64 = 0x5eed_1a1f;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).expect("generated edges are canonical")
}

/// Random recursive tree: vertex `i` attaches to a uniform earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::new(n, edges).expect("generated edges are canonical")
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(CORPUS_SEED.wrapping_add(stream))
}

fn spec(s: &str) -> GraphSpec {
    s.parse().expect("corpus labels are valid")
}

fn pair(t: TheoremId, g: &str, h: &str) -> VerificationCase {
    VerificationCase::new(t, spec(g)).with_h(spec(h))
}

const REGULAR: [&str; 8] = ["k2", "k3", "k4", "k5", "c3", "c4", "c5", "c6"];

/// Cases covering every closed form and structural property; randomized
/// graphs come from fixed seeds, so the corpus is identical on every run.
pub fn default_corpus() -> Vec<VerificationCase> {
    use TheoremId::*;
    let mut cases = Vec::new();

    for n in 2..=12 {
        cases.push(VerificationCase::new(Complete, GraphSpec::Complete { n }));
    }
    for p in 1..=8 {
        for q in 1..=p {
            cases.push(VerificationCase::new(CompleteBipartite, GraphSpec::CompleteBipartite { p, q }));
        }
    }
    for n in 2..=9 {
        cases.push(VerificationCase::new(Star, GraphSpec::Star { n }));
    }
    for g in ["k1", "k4", "c3", "c5", "c8", "k3,3", "h4,4"] {
        cases.push(VerificationCase::new(RegularShift, spec(g)));
    }

    // Union and cartesian hold for arbitrary pairs.
    let mut r = rng(1);
    let mut arbitrary: Vec<GraphSpec> = ["p3", "star4", "pineapple3,1", "k3", "c4", "empty2"].map(spec).to_vec();
    arbitrary.extend((0..3).map(|_| GraphSpec::from_graph(&random_graph(&mut r, 5, 0.5))));
    for (i, g) in arbitrary.iter().enumerate() {
        let h = &arbitrary[(i + 1) % arbitrary.len()];
        for t in [Union, Cartesian] {
            let case = VerificationCase::new(t, g.clone()).with_h(h.clone());
            // Random members are labeled by order and size only.
            let id = format!("{}#{i}", case.id);
            cases.push(case.with_id(id));
        }
    }
    for (i, g) in REGULAR.iter().enumerate() {
        for h in &REGULAR[i..] {
            for t in [JoinRegular, DirectRegular, StrongRegular] {
                cases.push(pair(t, g, h));
            }
        }
    }
    for g in ["p3", "p4", "star5", "pineapple4,2", "k3", "c4"] {
        for h in ["k1", "k2", "c3", "c4", "k4"] {
            cases.push(pair(JoinLifted, g, h));
            cases.push(pair(DirectSubset, g, h));
            cases.push(pair(StrongSubset, g, h));
        }
    }

    // Coalescence over fixed-seed random pairs.
    let grid = vec![0.0, 0.25, 0.5, 0.75];
    let mut r = rng(2);
    for i in 0..20 {
        let (n1, n2) = (r.gen_range(4..=7), r.gen_range(4..=7));
        let g = random_graph(&mut r, n1, 0.5);
        let h = random_graph(&mut r, n2, 0.5);
        let (u, v) = (r.gen_range(0..n1), r.gen_range(0..n2));
        cases.push(
            VerificationCase::new(Coalescence, GraphSpec::from_graph(&g))
                .with_h(GraphSpec::from_graph(&h))
                .with_anchors(u, v)
                .with_grid(grid.clone())
                .with_id(format!("coalescence/random{i}")),
        );
    }

    for n in 2..=6 {
        cases.push(VerificationCase::new(Splitting, GraphSpec::Complete { n }));
    }
    for n in 3..=8 {
        cases.push(VerificationCase::new(Splitting, GraphSpec::Cycle { n }));
    }

    for p in 3..=6 {
        for q in 1..=4 {
            cases.push(VerificationCase::new(Pineapple, GraphSpec::Pineapple { p, q }));
        }
    }
    for n in 3..=6 {
        for l in 1..n {
            cases.push(VerificationCase::new(HGraph, GraphSpec::HGraph { n, l }));
        }
        for l in 1..=n {
            cases.push(VerificationCase::new(KkGraph, GraphSpec::KkGraph { n, l }));
        }
    }
    for c in 1..=3 {
        for s in 1..=3 {
            for eta in [2, 3] {
                cases.push(VerificationCase::new(CoreSatellite, GraphSpec::CoreSatellite { c, s, eta }));
            }
        }
    }
    for g in ["pineapple5,3", "h5,2", "kk5,3", "kk4,4", "theta3,2,3", "k3,2", "star6", "c6", "k5"] {
        cases.push(VerificationCase::new(Quotient, spec(g)));
    }

    // Twins: random graphs plus families with large twin classes.
    let mut r = rng(3);
    for i in 0..20 {
        let n = r.gen_range(4..=7);
        let g = GraphSpec::from_graph(&random_graph(&mut r, n, 0.5));
        cases.push(VerificationCase::new(Twins, g).with_id(format!("twins/random{i}")));
    }
    for g in ["k3", "k5", "k7", "star4", "star7", "pineapple3,3", "pineapple5,4", "k3,3", "theta2,2,3"] {
        cases.push(VerificationCase::new(Twins, spec(g)));
    }

    // Bipartite equivalence: trees and even cycles, odd cycles as negatives.
    let mut r = rng(4);
    for n in 2..=10 {
        cases.push(VerificationCase::new(BipartiteEquiv, GraphSpec::Path { n }));
        let tree = GraphSpec::from_graph(&random_tree(&mut r, n));
        cases.push(VerificationCase::new(BipartiteEquiv, tree).with_id(format!("bipartite-equiv/tree{n}")));
    }
    for n in (4..=10).step_by(2) {
        cases.push(VerificationCase::new(BipartiteEquiv, GraphSpec::Cycle { n }));
    }
    for n in (3..=9).step_by(2) {
        cases.push(VerificationCase::new(BipartiteEquiv, GraphSpec::Cycle { n }));
    }

    // Nonnegativity on connected graphs up to order 8.
    let upper: Vec<f64> = (5..=10).map(|i| f64::from(i) / 10.0).collect();
    let mut r = rng(5);
    let mut connected = 0;
    while connected < 20 {
        let n = r.gen_range(4..=8);
        let g = random_graph(&mut r, n, 0.5);
        if g.is_connected() {
            cases.push(
                VerificationCase::new(Nonnegativity, GraphSpec::from_graph(&g))
                    .with_grid(upper.clone())
                    .with_id(format!("nonnegativity/random{connected}")),
            );
            connected += 1;
        }
    }
    for g in ["k8", "c7", "p8", "star8", "pineapple4,4", "kk4,2", "theta2,2,3"] {
        cases.push(VerificationCase::new(Nonnegativity, spec(g)).with_grid(upper.clone()));
    }
    cases
}
