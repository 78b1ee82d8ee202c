use serde::Serialize;

use super::{check_regular_spectrum, eig2, regular_adjacency};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::matrix::{
    char_poly, eigen_sym, eigen_sym_full, l_alpha_matrix, AlphaParam, RealPoly, Spectrum,
    SymMatrix, GROUPING_TOL,
};

/// Largest `|⟨x, 1⟩| / (‖x‖ √n)` accepted as "orthogonal to the all-ones vector".
pub const ORTHOGONALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

pub fn spec_union(sg: &Spectrum, sh: &Spectrum) -> Spectrum {
    sg.union(sh)
}

/// Eigenpairs of `m` whose eigenvectors are orthogonal to the all-ones vector.
///
/// Within each eigenspace the projection of `1` is removed, so an eigenspace
/// of dimension `d` contributes `d` pairs if it is already orthogonal to `1`
/// and `d − 1` otherwise.
pub fn eigenpairs_orthogonal_to_ones(m: &SymMatrix) -> Result<Vec<EigenPair>> {
    let n = m.dim();
    let eig = eigen_sym_full(m)?;
    let vectors: Vec<Vec<f64>> = (0..n).map(|k| eig.vector(k).unwrap_or_default()).collect();
    let mut pairs = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n
            && eig.values[end - 1] - eig.values[end]
                <= GROUPING_TOL * eig.values[end - 1].abs().max(1.0)
        {
            end += 1;
        }
        let space = &vectors[start..end];
        // Projection of 1 onto this eigenspace.
        let mut p = vec![0.0; n];
        for v in space {
            let c: f64 = v.iter().sum();
            for (pi, vi) in p.iter_mut().zip(v) {
                *pi += c * vi;
            }
        }
        let mut basis: Vec<Vec<f64>> = Vec::new();
        if norm(&p) > 1e-9 * (n as f64).sqrt() {
            let pn = norm(&p);
            basis.push(p.iter().map(|x| x / pn).collect());
        }
        let skip = basis.len();
        for v in space {
            let mut w = v.clone();
            for b in &basis {
                let d = dot(&w, b);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= d * bi;
                }
            }
            let wn = norm(&w);
            if wn > 1e-6 && basis.len() < space.len() {
                basis.push(w.iter().map(|x| x / wn).collect());
            }
        }
        let value = eig.values[start..end].iter().sum::<f64>() / (end - start) as f64;
        pairs.extend(basis.into_iter().skip(skip).map(|vector| EigenPair { value, vector }));
        start = end;
    }
    Ok(pairs)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn check_orthogonal(pair: &EigenPair, n: usize) -> Result<()> {
    if pair.vector.len() != n {
        return Err(Error::SizeMismatch(format!(
            "eigenvector has {} entries, expected {n}",
            pair.vector.len()
        )));
    }
    let inner: f64 = pair.vector.iter().sum();
    let scale = norm(&pair.vector) * (n as f64).sqrt();
    if scale == 0.0 || inner.abs() > ORTHOGONALITY_TOL * scale {
        return Err(Error::NotOrthogonal { value: pair.value, inner });
    }
    Ok(())
}

/// `λ + αn_2` for each supplied eigenpair of `L_α(G)` and `μ + αn_1` for each
/// pair of `L_α(H)`; every vector must be orthogonal to `1`.
pub fn join_lifted_eigs(
    g_pairs: &[EigenPair],
    h_pairs: &[EigenPair],
    n1: usize,
    n2: usize,
    alpha: AlphaParam,
) -> Result<Vec<f64>> {
    let a = alpha.value();
    let mut out = Vec::with_capacity(g_pairs.len() + h_pairs.len());
    for p in g_pairs {
        check_orthogonal(p, n1)?;
        out.push(p.value + a * n2 as f64);
    }
    for p in h_pairs {
        check_orthogonal(p, n2)?;
        out.push(p.value + a * n1 as f64);
    }
    Ok(out)
}

/// Join of a `k`-regular graph of order `n1` with an `r`-regular graph of
/// order `n2`. The adjacency spectra are full and sorted descending; their
/// leading entries (`k` and `r`) are replaced by the two eigenvalues of the
/// 2×2 quotient.
pub fn spec_join_regular(
    k: usize,
    n1: usize,
    r: usize,
    n2: usize,
    spec_a_g: &[f64],
    spec_a_h: &[f64],
    alpha: AlphaParam,
) -> Result<Spectrum> {
    check_regular_spectrum(k, n1, spec_a_g)?;
    check_regular_spectrum(r, n2, spec_a_h)?;
    if n1 == 0 || n2 == 0 {
        return Err(Error::ParameterOutOfRange("join needs nonempty graphs".into()));
    }
    let a = alpha.value();
    let (kf, rf, n1f, n2f) = (k as f64, r as f64, n1 as f64, n2 as f64);
    let (m1, m2) = eig2(
        (2.0 * kf + n2f) * a - kf,
        (a - 1.0) * n2f,
        (a - 1.0) * n1f,
        (2.0 * rf + n1f) * a - rf,
    );
    let mut values = vec![m1, m2];
    values.extend(spec_a_g[1..].iter().map(|l| a * (kf + n2f) + (a - 1.0) * l));
    values.extend(spec_a_h[1..].iter().map(|l| a * (rf + n1f) + (a - 1.0) * l));
    Ok(Spectrum::from_values(values))
}

pub fn spec_join_regular_of(g: &Graph, h: &Graph, alpha: AlphaParam) -> Result<Spectrum> {
    let (k, sa) = regular_adjacency(g)?;
    let (r, sb) = regular_adjacency(h)?;
    spec_join_regular(k, g.order(), r, h.order(), &sa, &sb, alpha)
}

/// All pairwise sums `λ_i(L_α(G)) + λ_j(L_α(H))`.
pub fn spec_cartesian(sg: &Spectrum, sh: &Spectrum) -> Spectrum {
    let (a, b) = (sg.values(), sh.values());
    Spectrum::from_values(a.iter().flat_map(|x| b.iter().map(move |y| x + y)))
}

/// `r λ_i(L_α(G))` for every eigenvalue of `G` (`H` is `r`-regular).
pub fn spec_direct_subset(sg: &Spectrum, r: usize) -> Vec<f64> {
    sg.values().into_iter().map(|l| r as f64 * l).collect()
}

/// Requires `G` connected and `H` regular.
pub fn spec_direct_subset_of(g: &Graph, h: &Graph, alpha: AlphaParam) -> Result<Vec<f64>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (r, _) = regular_adjacency(h)?;
    Ok(spec_direct_subset(&eigen_sym(&l_alpha_matrix(g, alpha))?, r))
}

/// `α r1 r2 + (α − 1) λ λ'` over adjacency eigenvalue pairs.
pub fn spec_direct_regular(
    r1: usize,
    r2: usize,
    spec_a_g: &[f64],
    spec_a_h: &[f64],
    alpha: AlphaParam,
) -> Result<Spectrum> {
    check_regular_spectrum(r1, spec_a_g.len(), spec_a_g)?;
    check_regular_spectrum(r2, spec_a_h.len(), spec_a_h)?;
    let a = alpha.value();
    let base = a * (r1 * r2) as f64;
    Ok(Spectrum::from_values(
        spec_a_g.iter().flat_map(|l| spec_a_h.iter().map(move |m| base + (a - 1.0) * l * m)),
    ))
}

pub fn spec_direct_regular_of(g: &Graph, h: &Graph, alpha: AlphaParam) -> Result<Spectrum> {
    let (r1, sa) = regular_adjacency(g)?;
    let (r2, sb) = regular_adjacency(h)?;
    spec_direct_regular(r1, r2, &sa, &sb, alpha)
}

/// `(r + 1) λ_i(L_α(G)) + 2αr − r` (`H` is `r`-regular).
pub fn spec_strong_subset(sg: &Spectrum, r: usize, alpha: AlphaParam) -> Vec<f64> {
    let (a, rf) = (alpha.value(), r as f64);
    sg.values().into_iter().map(|l| (rf + 1.0) * l + 2.0 * a * rf - rf).collect()
}

/// Requires `G` connected and `H` regular.
pub fn spec_strong_subset_of(g: &Graph, h: &Graph, alpha: AlphaParam) -> Result<Vec<f64>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (r, _) = regular_adjacency(h)?;
    Ok(spec_strong_subset(&eigen_sym(&l_alpha_matrix(g, alpha))?, r, alpha))
}

/// `α(r1 r2 + r1 + r2) + (α − 1)(λλ' + λ + λ')` over adjacency eigenvalue pairs.
pub fn spec_strong_regular(
    r1: usize,
    r2: usize,
    spec_a_g: &[f64],
    spec_a_h: &[f64],
    alpha: AlphaParam,
) -> Result<Spectrum> {
    check_regular_spectrum(r1, spec_a_g.len(), spec_a_g)?;
    check_regular_spectrum(r2, spec_a_h.len(), spec_a_h)?;
    let a = alpha.value();
    let base = a * (r1 * r2 + r1 + r2) as f64;
    Ok(Spectrum::from_values(spec_a_g.iter().flat_map(|l| {
        spec_a_h.iter().map(move |m| base + (a - 1.0) * (l * m + l + m))
    })))
}

pub fn spec_strong_regular_of(g: &Graph, h: &Graph, alpha: AlphaParam) -> Result<Spectrum> {
    let (r1, sa) = regular_adjacency(g)?;
    let (r2, sb) = regular_adjacency(h)?;
    spec_strong_regular(r1, r2, &sa, &sb, alpha)
}

/// `P_G P_{H,v} + P_{G,u} P_H − x P_{G,u} P_{H,v}`, where `P_{G,u}` is the
/// characteristic polynomial of `L_α(G)` with row and column `u` removed.
pub fn charpoly_coalescence(
    p_g: &RealPoly,
    p_g_u: &RealPoly,
    p_h: &RealPoly,
    p_h_v: &RealPoly,
) -> Result<RealPoly> {
    for (name, whole, deleted) in [("G", p_g, p_g_u), ("H", p_h, p_h_v)] {
        if whole.degree() == 0 || deleted.degree() + 1 != whole.degree() {
            return Err(Error::DegreeMismatch(format!(
                "{name}: polynomial of degree {} with vertex-deleted polynomial of degree {}",
                whole.degree(),
                deleted.degree()
            )));
        }
        if !whole.is_monic() || !deleted.is_monic() {
            return Err(Error::DegreeMismatch(format!("{name}: characteristic polynomials must be monic")));
        }
    }
    let x = RealPoly::x();
    Ok(&(&(p_g * p_h_v) + &(p_g_u * p_h)) - &(&(&x * p_g_u) * p_h_v))
}

/// Evaluates the coalescence formula from the two graphs directly.
pub fn charpoly_coalescence_of(
    g: &Graph,
    u: VertexId,
    h: &Graph,
    v: VertexId,
    alpha: AlphaParam,
) -> Result<RealPoly> {
    let (u, v) = (g.vertex(u.index())?.index(), h.vertex(v.index())?.index());
    let lg = l_alpha_matrix(g, alpha);
    let lh = l_alpha_matrix(h, alpha);
    charpoly_coalescence(
        &char_poly(lg.as_dense())?,
        &char_poly(lg.delete_vertex(u).as_dense())?,
        &char_poly(lh.as_dense())?,
        &char_poly(lh.delete_vertex(v).as_dense())?,
    )
}
