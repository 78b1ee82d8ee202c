use serde::Serialize;

use super::{check_regular_spectrum, eig2, regular_adjacency, reject_alpha_one};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{
    char_poly, eigen_sym_values, AlphaParam, DenseMatrix, Partition, RealPoly, Spectrum, SymMatrix,
};

/// Agreement threshold for the printed-formula cross-checks.
const PRINTED_TOL: f64 = 1e-8;

/// The `x² + bx + c` factors of the splitting-graph characteristic polynomial,
/// one per adjacency eigenvalue of the `k`-regular base graph.
pub fn splitting_factors(k: usize, spec_a: &[f64], alpha: AlphaParam) -> Result<Vec<RealPoly>> {
    check_regular_spectrum(k, spec_a.len(), spec_a)?;
    let (a, kf) = (alpha.value(), k as f64);
    Ok(spec_a
        .iter()
        .map(|&l| {
            RealPoly::from_descending(&[
                1.0,
                -3.0 * a * kf - (a - 1.0) * l,
                2.0 * a * a * kf * kf + (a - 1.0) * a * kf * l - (a - 1.0) * (a - 1.0) * l * l,
            ])
        })
        .collect())
}

/// Characteristic polynomial of `L_α(S(G))` for a `k`-regular `G` with
/// adjacency spectrum `spec_a`.
pub fn charpoly_splitting_regular(k: usize, spec_a: &[f64], alpha: AlphaParam) -> Result<RealPoly> {
    Ok(splitting_factors(k, spec_a, alpha)?
        .iter()
        .fold(RealPoly::constant(1.0), |acc, f| &acc * f))
}

pub fn charpoly_splitting_regular_of(g: &Graph, alpha: AlphaParam) -> Result<RealPoly> {
    let (k, spec_a) = regular_adjacency(g)?;
    charpoly_splitting_regular(k, &spec_a, alpha)
}

/// Quotient of an equitable partition given by block sizes and row sums
/// `sums[i][j]` (what one vertex of block `i` sees in block `j`).
///
/// A block may have size zero; it then contributes its diagonal entry as a
/// formal eigenvalue and is decoupled from the others.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockQuotient {
    pub sizes: Vec<usize>,
    pub sums: DenseMatrix,
}

impl BlockQuotient {
    pub fn matrix(&self) -> &DenseMatrix {
        &self.sums
    }

    /// Eigenvalues (descending) via the symmetrization `diag(√n_i)`.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let sizes = &self.sizes;
        let sym = SymMatrix::from_fn(sizes.len(), |i, j| {
            if i == j {
                self.sums[(i, i)]
            } else if sizes[i] == 0 || sizes[j] == 0 {
                0.0
            } else {
                self.sums[(i, j)] * (sizes[i] as f64 / sizes[j] as f64).sqrt()
            }
        });
        eigen_sym_values(&sym)
    }

    pub fn char_poly(&self) -> Result<RealPoly> {
        char_poly(&self.sums)
    }
}

fn block_quotient(sizes: Vec<usize>, rows: &[Vec<f64>]) -> Result<BlockQuotient> {
    Ok(BlockQuotient { sizes, sums: DenseMatrix::from_rows(rows)? })
}

fn range(start: usize, end: usize) -> Vec<usize> {
    (start..end).collect()
}

/// Outcome of evaluating a formula exactly as printed against the quotient
/// computation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrintedCheck {
    pub formula: &'static str,
    pub printed: Vec<f64>,
    pub derived: Vec<f64>,
    pub max_deviation: f64,
    pub agrees: bool,
}

impl PrintedCheck {
    fn new(formula: &'static str, printed: Vec<f64>, derived: Vec<f64>) -> Self {
        let max_deviation = printed
            .iter()
            .zip(&derived)
            .map(|(p, d)| (p - d).abs() / d.abs().max(1.0))
            .fold(if printed.len() == derived.len() { 0.0 } else { f64::INFINITY }, f64::max);
        PrintedCheck { formula, printed, derived, max_deviation, agrees: max_deviation <= PRINTED_TOL }
    }
}

fn check_pineapple(p: usize, q: usize) -> Result<()> {
    if p < 3 || q < 1 {
        return Err(Error::ParameterOutOfRange(format!("pineapple needs p >= 3, q >= 1, got ({p}, {q})")));
    }
    Ok(())
}

/// Clique vertices other than the attachment vertex, the attachment vertex,
/// the pendants.
pub fn pineapple_partition(p: usize, q: usize) -> Result<Partition> {
    check_pineapple(p, q)?;
    Partition::new(p + q, vec![range(1, p), vec![0], range(p, p + q)])
}

pub fn pineapple_quotient(p: usize, q: usize, alpha: AlphaParam) -> Result<BlockQuotient> {
    check_pineapple(p, q)?;
    let (a, pf, qf) = (alpha.value(), p as f64, q as f64);
    block_quotient(
        vec![p - 1, 1, q],
        &[
            vec![a * (pf - 1.0) + (a - 1.0) * (pf - 2.0), a - 1.0, 0.0],
            vec![(pf - 1.0) * (a - 1.0), (pf + qf - 1.0) * a, qf * (a - 1.0)],
            vec![0.0, a - 1.0, a],
        ],
    )
}

/// `α^(q−1)`, `(α(p−2)+1)^(p−2)` and the three quotient eigenvalues.
pub fn spec_pineapple(p: usize, q: usize, alpha: AlphaParam) -> Result<Spectrum> {
    reject_alpha_one(alpha, "pineapple spectrum requires alpha < 1")?;
    let a = alpha.value();
    let quotient = pineapple_quotient(p, q, alpha)?.eigenvalues()?;
    Ok(Spectrum::from_groups(
        [(a, q - 1), (a * (p as f64 - 2.0) + 1.0, p - 2)]
            .into_iter()
            .chain(quotient.into_iter().map(|x| (x, 1))),
    ))
}

/// The cubic with the coefficients exactly as printed.
pub fn pineapple_printed_poly(p: usize, q: usize, alpha: AlphaParam) -> RealPoly {
    let (a, p, q) = (alpha.value(), p as f64, q as f64);
    let (a2, a3) = (a * a, a * a * a);
    RealPoly::from_descending(&[
        1.0,
        -3.0 * a * p - a * q + 4.0 * a + p - 2.0,
        2.0 * a3 * p * p - 6.0 * a2 * p + 4.0 * a2 - a * p * p + 2.0 * a2 * p * q - 4.0 * a2 * q
            + 5.0 * a * p
            - 4.0 * a
            - a * p * q
            + 4.0 * a * q
            - p
            - q
            + 1.0,
        2.0 * a3 * p * q - 3.0 * a3 * q - 5.0 * a2 * p * q + 8.0 * a2 * q + 4.0 * a * p * q
            - 7.0 * a * q
            - p * q
            + 2.0 * q,
    ])
}

/// Printed cubic against the characteristic polynomial of the quotient.
pub fn pineapple_printed_check(p: usize, q: usize, alpha: AlphaParam) -> Result<PrintedCheck> {
    let derived = pineapple_quotient(p, q, alpha)?.char_poly()?;
    Ok(PrintedCheck::new(
        "pineapple cubic",
        pineapple_printed_poly(p, q, alpha).descending(),
        derived.descending(),
    ))
}

fn check_h(n: usize, l: usize) -> Result<()> {
    if n < 3 || l < 1 || l >= n {
        return Err(Error::ParameterOutOfRange(format!("H graph needs n >= 3, 1 <= l < n, got ({n}, {l})")));
    }
    Ok(())
}

/// Unmatched vertices of copy one, matched vertices of copy one, their
/// partners in copy two, unmatched vertices of copy two.
pub fn h_graph_partition(n: usize, l: usize) -> Result<Partition> {
    check_h(n, l)?;
    Partition::new(2 * n, vec![range(l, n), range(0, l), range(n, n + l), range(n + l, 2 * n)])
}

pub fn h_graph_quotient(n: usize, l: usize, alpha: AlphaParam) -> Result<BlockQuotient> {
    check_h(n, l)?;
    let (a, nf, lf) = (alpha.value(), n as f64, l as f64);
    let b11 = a * nf + (a - 1.0) * (lf - 1.0);
    let b22 = a * (nf - 1.0) + (a - 1.0) * (nf - lf - 1.0);
    let (c, m) = (a - 1.0, nf - lf);
    block_quotient(
        vec![n - l, l, l, n - l],
        &[
            vec![b22, lf * c, 0.0, 0.0],
            vec![m * c, b11, c, 0.0],
            vec![0.0, c, b11, m * c],
            vec![0.0, 0.0, lf * c, b22],
        ],
    )
}

/// `θ_1..θ_4` from the printed radicals, in printed order.
pub fn h_graph_theta(n: usize, l: usize, alpha: AlphaParam) -> Result<[f64; 4]> {
    check_h(n, l)?;
    let (a, n, l) = (alpha.value(), n as f64, l as f64);
    let a2 = a * a;
    let r1 = (8.0 * a2 * l + a2 * n * n - 4.0 * a2 * n + 4.0 * a2 - 12.0 * a * l - 2.0 * a * n * n
        + 6.0 * a * n
        - 4.0 * a
        + 4.0 * l
        + n * n
        - 2.0 * n
        + 1.0)
        .max(0.0)
        .sqrt();
    let r2 = (a2 * n * n + 4.0 * a * l - 2.0 * a * n * n - 2.0 * a * n - 4.0 * l + n * n + 2.0 * n + 1.0)
        .max(0.0)
        .sqrt();
    let c1 = 1.5 * a * n - a - 0.5 * n + 0.5;
    let c2 = 1.5 * a * n - 2.0 * a - 0.5 * n + 1.5;
    Ok([c1 - 0.5 * r1, c1 + 0.5 * r1, c2 - 0.5 * r2, c2 + 0.5 * r2])
}

/// Printed `θ` values against the quotient eigenvalues (both sorted descending).
pub fn h_graph_theta_check(n: usize, l: usize, alpha: AlphaParam) -> Result<PrintedCheck> {
    let mut theta = h_graph_theta(n, l, alpha)?.to_vec();
    theta.sort_by(|x, y| y.total_cmp(x));
    Ok(PrintedCheck::new("H graph theta radicals", theta, h_graph_quotient(n, l, alpha)?.eigenvalues()?))
}

/// `(nα)^(l−1)`, `(α(n−2)+1)^(2n−2l−2)`, `(α(n−2)+2)^(l−1)` and `θ_1..θ_4`.
pub fn spec_h_graph(n: usize, l: usize, alpha: AlphaParam) -> Result<Spectrum> {
    check_h(n, l)?;
    reject_alpha_one(alpha, "H graph spectrum requires alpha < 1")?;
    let (a, nf) = (alpha.value(), n as f64);
    let theta = h_graph_theta(n, l, alpha)?;
    Ok(Spectrum::from_groups(
        [
            (nf * a, l - 1),
            (a * (nf - 2.0) + 1.0, 2 * n - 2 * l - 2),
            (a * (nf - 2.0) + 2.0, l - 1),
        ]
        .into_iter()
        .chain(theta.into_iter().map(|x| (x, 1))),
    ))
}

fn check_kk(n: usize, l: usize) -> Result<()> {
    if n < 3 || l < 1 || l > n {
        return Err(Error::ParameterOutOfRange(format!("KK graph needs n >= 3, 1 <= l <= n, got ({n}, {l})")));
    }
    Ok(())
}

/// Hub, the rest of its copy, the hub's neighbors in copy two, the remaining
/// vertices of copy two (omitted when `l = n`).
pub fn kk_graph_partition(n: usize, l: usize) -> Result<Partition> {
    check_kk(n, l)?;
    let mut blocks = vec![vec![0], range(1, n), range(n, n + l)];
    if l < n {
        blocks.push(range(n + l, 2 * n));
    }
    Partition::new(2 * n, blocks)
}

/// Always 4×4; when `l = n` the last block is empty.
pub fn kk_graph_quotient(n: usize, l: usize, alpha: AlphaParam) -> Result<BlockQuotient> {
    check_kk(n, l)?;
    let (a, nf, lf) = (alpha.value(), n as f64, l as f64);
    let c = a - 1.0;
    block_quotient(
        vec![1, n - 1, l, n - l],
        &[
            vec![(nf + lf - 1.0) * a, (nf - 1.0) * c, lf * c, 0.0],
            vec![c, (nf - 1.0) * a + c * (nf - 2.0), 0.0, 0.0],
            vec![c, 0.0, nf * a + c * (lf - 1.0), (nf - lf) * c],
            vec![0.0, 0.0, lf * c, (nf - 1.0) * a + c * (nf - lf - 1.0)],
        ],
    )
}

/// `(α(n−2)+1)^(2n−l−3)`, `(α(n−1)+1)^(l−1)` and the four quotient eigenvalues.
pub fn spec_kk_graph(n: usize, l: usize, alpha: AlphaParam) -> Result<Spectrum> {
    check_kk(n, l)?;
    reject_alpha_one(alpha, "KK graph spectrum requires alpha < 1")?;
    let (a, nf) = (alpha.value(), n as f64);
    let quotient = kk_graph_quotient(n, l, alpha)?.eigenvalues()?;
    Ok(Spectrum::from_groups(
        [(a * (nf - 2.0) + 1.0, 2 * n - l - 3), (a * (nf - 1.0) + 1.0, l - 1)]
            .into_iter()
            .chain(quotient.into_iter().map(|x| (x, 1))),
    ))
}

/// The quartic with the coefficients `C_0..C_4` exactly as printed.
pub fn kk_graph_printed_poly(n: usize, l: usize, alpha: AlphaParam) -> RealPoly {
    let (a, n, l) = (alpha.value(), n as f64, l as f64);
    let (a2, a3, a4) = (a * a, a * a * a, a * a * a * a);
    let (n2, n3, n4, l2) = (n * n, n * n * n, n * n * n * n, l * l);
    let c3 = 2.0 * n3 - 6.0 * n2 + 6.0 * n - 2.0 - a * l + 7.0 * a + 2.0 * l;
    let c2 = n2 - 6.0 * n + 6.0
        + a * (13.0 * n2 - 31.0 * n + 18.0)
        + l * (5.0 * a * n - 8.0 * a + l - 2.0 * n + 2.0);
    let c1 = -2.0 * n2 + 6.0 * n - 4.0
        + a * (19.0 * n2 - 38.0 * n + 21.0)
        + l * (-34.0 * a * n + 34.0 * a - 2.0 * l + 3.0)
        + 10.0 * a * n3
        - 52.0 * a * n2
        + 78.0 * a * n
        - 36.0 * a
        + 26.0 * a * l * n
        - 20.0 * a * l
        + l2;
    let c0 = 4.0 * a4 * l * n3 - 20.0 * a4 * l * n2 + 32.0 * a4 * l * n - 16.0 * a4 * l
        + 4.0 * a4 * n4
        - 20.0 * a4 * n3
        + 36.0 * a4 * n2
        - 28.0 * a4 * n
        + 8.0 * a4
        - 4.0 * a3 * l2 * n
        + 6.0 * a3 * l2
        - 4.0 * a3 * l * n3
        + 34.0 * a3 * l * n2
        - 70.0 * a3 * l * n
        + 40.0 * a3 * l
        - 4.0 * a3 * n4
        + 28.0 * a3 * n3
        - 64.0 * a3 * n2
        + 60.0 * a3 * n
        - 20.0 * a3
        + 8.0 * a2 * l2 * n
        - 13.0 * a2 * l2
        + a2 * l * n3
        - 22.0 * a2 * l * n2
        + 57.0 * a2 * l * n
        - 36.0 * a2 * l
        + a2 * n4
        - 13.0 * a2 * n3
        + 41.0 * a2 * n2
        - 47.0 * a2 * n
        + 18.0 * a2
        - 5.0 * a * l2 * n
        + 9.0 * a * l2
        + 7.0 * a * l * n2
        - 21.0 * a * l * n
        + 14.0 * a * l
        + 2.0 * a * n3
        - 11.0 * a * n2
        + 16.0 * a * n
        - 7.0 * a
        + l2 * n
        - 2.0 * l2
        - l * n2
        + 3.0 * l * n
        - 2.0 * l
        + n2
        - 2.0 * n
        + 1.0;
    RealPoly::from_descending(&[1.0, c3, c2, c1, c0])
}

/// Printed quartic against the characteristic polynomial of the 4×4 quotient.
pub fn kk_graph_printed_check(n: usize, l: usize, alpha: AlphaParam) -> Result<PrintedCheck> {
    let derived = kk_graph_quotient(n, l, alpha)?.char_poly()?;
    Ok(PrintedCheck::new(
        "KK graph quartic",
        kk_graph_printed_poly(n, l, alpha).descending(),
        derived.descending(),
    ))
}

fn check_core_satellite(c: usize, s: usize, eta: usize) -> Result<()> {
    if c < 1 || s < 1 || eta < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "core-satellite needs c >= 1, s >= 1, eta >= 2, got ({c}, {s}, {eta})"
        )));
    }
    Ok(())
}

/// `K_c ∨ ηK_s`: the two eigenvalues of the join quotient, then
/// `(α(c−1+ηs) − (α−1))^(c−1)`, `(α(s−1+c) + (α−1)(s−1))^(η−1)` and
/// `(α(s−1+c) − (α−1))^(ηs−η)`.
pub fn spec_core_satellite(c: usize, s: usize, eta: usize, alpha: AlphaParam) -> Result<Spectrum> {
    check_core_satellite(c, s, eta)?;
    let a = alpha.value();
    let (cf, sf, ef) = (c as f64, s as f64, eta as f64);
    let (k, r, n1, n2) = (cf - 1.0, sf - 1.0, cf, ef * sf);
    let (m1, m2) = eig2((2.0 * k + n2) * a - k, (a - 1.0) * n2, (a - 1.0) * n1, (2.0 * r + n1) * a - r);
    Ok(Spectrum::from_groups([
        (m1, 1),
        (m2, 1),
        (a * (k + n2) - (a - 1.0), c - 1),
        (a * (r + n1) + (a - 1.0) * r, eta - 1),
        (a * (r + n1) - (a - 1.0), eta * s - eta),
    ]))
}

/// The core eigenvalue read literally as `α(c−1) + ηs + (α−1)(−1)`, against
/// `α(c−1+ηs) − (α−1)`.
pub fn core_satellite_printed_check(c: usize, s: usize, eta: usize, alpha: AlphaParam) -> Result<PrintedCheck> {
    check_core_satellite(c, s, eta)?;
    let a = alpha.value();
    let (cf, n2) = (c as f64, (eta * s) as f64);
    Ok(PrintedCheck::new(
        "core-satellite core eigenvalue",
        vec![a * (cf - 1.0) + n2 - (a - 1.0)],
        vec![a * (cf - 1.0 + n2) - (a - 1.0)],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        make_core_satellite, make_h_graph, make_kk_graph, make_named, make_pineapple,
        make_splitting, Family,
    };
    use crate::matrix::{eigen_sym, l_alpha_matrix, quotient_matrix};
    use crate::theorems::spec_star;

    fn alpha(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    fn below_one() -> Vec<AlphaParam> {
        AlphaParam::tenths().into_iter().filter(|a| a.value() < 1.0).collect()
    }

    fn oracle(g: &Graph, a: AlphaParam) -> Spectrum {
        eigen_sym(&l_alpha_matrix(g, a)).unwrap()
    }

    fn assert_close(a: &Spectrum, b: &Spectrum, tol: f64) {
        let (va, vb) = (a.values(), b.values());
        assert_eq!(va.len(), vb.len(), "{a:?} vs {b:?}");
        for (x, y) in va.iter().zip(&vb) {
            assert!((x - y).abs() <= tol * x.abs().max(1.0), "{va:?} vs {vb:?}");
        }
    }

    fn degree_spectrum(g: &Graph) -> Spectrum {
        Spectrum::from_values(g.degrees().into_iter().map(|d| d as f64))
    }

    #[test]
    fn splitting_examples() {
        let p = charpoly_splitting_regular(1, &[1.0, -1.0], AlphaParam::ONE).unwrap();
        assert!(p.max_relative_coefficient_error(&RealPoly::from_roots(&[2.0, 2.0, 1.0, 1.0])) < 1e-14);

        let f = splitting_factors(1, &[1.0, -1.0], AlphaParam::ZERO).unwrap();
        assert_eq!(f[0], RealPoly::from_descending(&[1.0, 1.0, -1.0]));
        assert_eq!(f[1], RealPoly::from_descending(&[1.0, -1.0, -1.0]));
        let p4 = make_named(Family::Path { n: 4 }).unwrap();
        let p = charpoly_splitting_regular(1, &[1.0, -1.0], AlphaParam::ZERO).unwrap();
        for l in oracle(&p4, AlphaParam::ZERO).values() {
            assert!(p.relative_residual(l) < 1e-12);
        }

        for g in [
            make_named(Family::Cycle { n: 4 }).unwrap(),
            make_named(Family::Complete { n: 4 }).unwrap(),
            make_named(Family::Cycle { n: 5 }).unwrap(),
        ] {
            let s = make_splitting(&g);
            for a in AlphaParam::tenths() {
                let p = charpoly_splitting_regular_of(&g, a).unwrap();
                assert_eq!(p.degree(), 2 * g.order());
                assert!(p.is_monic());
                let want = char_poly(l_alpha_matrix(&s, a).as_dense()).unwrap();
                assert!(p.max_relative_coefficient_error(&want) < 1e-8, "{p} vs {want}");
            }
        }
        let p3 = make_named(Family::Path { n: 3 }).unwrap();
        assert!(matches!(charpoly_splitting_regular_of(&p3, AlphaParam::HALF), Err(Error::NotRegular(_))));
    }

    #[test]
    fn quotients_match_graph_partitions() {
        for a in [0.0, 0.3, 0.5, 0.85, 1.0].map(alpha) {
            for (p, q) in [(3, 1), (4, 2), (5, 3)] {
                let g = make_pineapple(p, q).unwrap();
                let want = quotient_matrix(&l_alpha_matrix(&g, a), &pineapple_partition(p, q).unwrap()).unwrap();
                assert!(pineapple_quotient(p, q, a).unwrap().matrix().max_abs_diff(&want) < 1e-12);
            }
            for (n, l) in [(3, 1), (4, 2), (5, 4)] {
                let g = make_h_graph(n, l).unwrap();
                let want = quotient_matrix(&l_alpha_matrix(&g, a), &h_graph_partition(n, l).unwrap()).unwrap();
                assert!(h_graph_quotient(n, l, a).unwrap().matrix().max_abs_diff(&want) < 1e-12);
            }
            for (n, l) in [(3, 1), (4, 2), (5, 4)] {
                let g = make_kk_graph(n, l).unwrap();
                let want = quotient_matrix(&l_alpha_matrix(&g, a), &kk_graph_partition(n, l).unwrap()).unwrap();
                assert!(kk_graph_quotient(n, l, a).unwrap().matrix().max_abs_diff(&want) < 1e-12);
            }
        }
        assert_eq!(kk_graph_partition(4, 4).unwrap().len(), 3);
    }

    #[test]
    fn pineapple_matches_oracle() {
        for a in below_one() {
            for p in 3..7 {
                for q in 1..5 {
                    let g = make_pineapple(p, q).unwrap();
                    let s = spec_pineapple(p, q, a).unwrap();
                    assert_eq!(s.order(), p + q);
                    assert_close(&s, &oracle(&g, a), 1e-8);
                    assert!(s.count_near(a.value(), 1e-8) >= q - 1);
                }
            }
        }
        assert_eq!(spec_pineapple(4, 2, AlphaParam::ONE), Err(Error::AlphaBoundary("pineapple spectrum requires alpha < 1")));
        assert!(matches!(spec_pineapple(2, 2, AlphaParam::HALF), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(spec_pineapple(3, 0, AlphaParam::HALF), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn pineapple_printed_cubic_only_holds_at_zero() {
        for (p, q) in [(3, 1), (4, 2), (6, 3)] {
            let zero = pineapple_printed_check(p, q, AlphaParam::ZERO).unwrap();
            assert!(zero.agrees, "{zero:?}");
            let half = pineapple_printed_check(p, q, AlphaParam::HALF).unwrap();
            assert!(!half.agrees, "{half:?}");
        }
    }

    #[test]
    fn h_graph_matches_oracle() {
        for a in below_one() {
            for n in 3..7 {
                for l in 1..n {
                    let g = make_h_graph(n, l).unwrap();
                    let s = spec_h_graph(n, l, a).unwrap();
                    assert_eq!(s.order(), 2 * n);
                    assert_close(&s, &oracle(&g, a), 1e-8);
                    let check = h_graph_theta_check(n, l, a).unwrap();
                    assert!(check.agrees, "{check:?}");
                }
            }
        }
        let q = h_graph_quotient(4, 2, alpha(0.35)).unwrap();
        let theta: f64 = h_graph_theta(4, 2, alpha(0.35)).unwrap().iter().sum();
        assert!((theta - q.matrix().trace()).abs() < 1e-10);
        assert!(matches!(spec_h_graph(4, 4, AlphaParam::HALF), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(spec_h_graph(4, 2, AlphaParam::ONE), Err(Error::AlphaBoundary(_))));
    }

    #[test]
    fn h_graph_alpha_one_limit() {
        // θ and the fixed parts evaluated at α = 1 give the degree multiset.
        let (n, l) = (5, 2);
        let mut values: Vec<f64> = h_graph_theta(n, l, AlphaParam::ONE).unwrap().to_vec();
        values.extend(vec![n as f64; 2 * (l - 1)]);
        values.extend(vec![(n - 1) as f64; 2 * n - 2 * l - 2]);
        assert_close(
            &Spectrum::from_values(values),
            &degree_spectrum(&make_h_graph(n, l).unwrap()),
            1e-12,
        );
    }

    #[test]
    fn kk_graph_matches_oracle() {
        for a in below_one() {
            for n in 3..7 {
                for l in 1..=n {
                    let g = make_kk_graph(n, l).unwrap();
                    let s = spec_kk_graph(n, l, a).unwrap();
                    assert_eq!(s.order(), 2 * n);
                    assert_close(&s, &oracle(&g, a), 1e-8);
                }
            }
        }
        let a = alpha(0.25);
        assert_close(&spec_kk_graph(4, 4, a).unwrap(), &oracle(&make_kk_graph(4, 4).unwrap(), a), 1e-8);
        assert!(matches!(spec_kk_graph(3, 4, a), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(spec_kk_graph(3, 2, AlphaParam::ONE), Err(Error::AlphaBoundary(_))));
    }

    #[test]
    fn kk_graph_alpha_one_limit() {
        let (n, l) = (5, 3);
        let q = kk_graph_quotient(n, l, AlphaParam::ONE).unwrap().eigenvalues().unwrap();
        let mut values = q;
        values.extend(vec![(n - 1) as f64; 2 * n - l - 3]);
        values.extend(vec![n as f64; l - 1]);
        assert_close(
            &Spectrum::from_values(values),
            &degree_spectrum(&make_kk_graph(n, l).unwrap()),
            1e-12,
        );
    }

    #[test]
    fn kk_graph_printed_quartic_disagrees() {
        let check = kk_graph_printed_check(4, 2, AlphaParam::HALF).unwrap();
        assert!(!check.agrees);
        // The trace of the quotient fixes the x³ coefficient.
        let q = kk_graph_quotient(4, 2, AlphaParam::HALF).unwrap();
        assert!((check.derived[1] + q.matrix().trace()).abs() < 1e-12);
    }

    #[test]
    fn core_satellite_matches_oracle() {
        for a in AlphaParam::tenths() {
            for (c, s, eta) in [(1, 1, 2), (2, 1, 2), (3, 2, 3), (2, 3, 2), (1, 4, 3)] {
                let g = make_core_satellite(c, s, eta).unwrap();
                let spec = spec_core_satellite(c, s, eta, a).unwrap();
                assert_eq!(spec.order(), c + eta * s);
                assert_close(&spec, &oracle(&g, a), 1e-8);
            }
            assert_close(&spec_core_satellite(1, 1, 4, a).unwrap(), &spec_star(5, a).unwrap(), 1e-12);
        }
        let g = make_core_satellite(3, 2, 3).unwrap();
        assert_close(&spec_core_satellite(3, 2, 3, AlphaParam::ONE).unwrap(), &degree_spectrum(&g), 1e-12);
        assert!(matches!(spec_core_satellite(2, 2, 1, AlphaParam::HALF), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn core_satellite_printed_term_needs_grouping() {
        assert!(!core_satellite_printed_check(3, 2, 3, AlphaParam::HALF).unwrap().agrees);
        assert!(core_satellite_printed_check(3, 2, 3, AlphaParam::ONE).unwrap().agrees);
    }

    #[test]
    fn block_quotient_with_empty_block() {
        let q = kk_graph_quotient(3, 3, alpha(0.4)).unwrap();
        let vals = q.eigenvalues().unwrap();
        assert_eq!(vals.len(), 4);
        assert!(vals.iter().any(|v| (v - (0.4 + 1.0)).abs() < 1e-12));
    }
}
