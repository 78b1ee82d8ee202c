use serde::Serialize;

use super::regular_adjacency;
use crate::error::{Error, Result};
use crate::graph::{structural_report, Graph, TwinKind};
use crate::matrix::{AlphaParam, Spectrum};

/// `Spec(L_α(K_n)) = {2αn − 2α − n + 1, (αn − 2α + 1)^(n−1)}`.
pub fn spec_complete(n: usize, alpha: AlphaParam) -> Result<Spectrum> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange("complete graph needs n >= 1".into()));
    }
    let (a, nf) = (alpha.value(), n as f64);
    Ok(Spectrum::from_groups([
        (2.0 * a * nf - 2.0 * a - nf + 1.0, 1),
        (a * nf - 2.0 * a + 1.0, n - 1),
    ]))
}

/// `L_α(K_{p,q})`, `p >= q >= 1`: the two radical eigenvalues,
/// `αp` with multiplicity `q − 1` and `αq` with multiplicity `p − 1`.
pub fn spec_complete_bipartite(p: usize, q: usize, alpha: AlphaParam) -> Result<Spectrum> {
    if q < 1 || p < q {
        return Err(Error::ParameterOutOfRange(format!(
            "complete bipartite closed form needs p >= q >= 1, got ({p}, {q})"
        )));
    }
    let (a, pf, qf) = (alpha.value(), p as f64, q as f64);
    let s = a * (pf + qf);
    let root = (s * s + 4.0 * pf * qf * (1.0 - 2.0 * a)).max(0.0).sqrt();
    Ok(Spectrum::from_groups([
        (0.5 * (s + root), 1),
        (0.5 * (s - root), 1),
        (a * pf, q - 1),
        (a * qf, p - 1),
    ]))
}

/// Star `K_{1,n−1}`: `½(αn ± √(α²n² + 4(n−1)(1−2α)))` and `α^(n−2)`.
pub fn spec_star(n: usize, alpha: AlphaParam) -> Result<Spectrum> {
    if n < 2 {
        return Err(Error::ParameterOutOfRange(format!("star needs n >= 2, got {n}")));
    }
    let (a, nf) = (alpha.value(), n as f64);
    let root = (a * a * nf * nf + 4.0 * (nf - 1.0) * (1.0 - 2.0 * a)).max(0.0).sqrt();
    Ok(Spectrum::from_groups([
        (0.5 * (a * nf + root), 1),
        (0.5 * (a * nf - root), 1),
        (a, n - 2),
    ]))
}

/// For `k`-regular `G`: `λ_i(L_α(G)) = αk + (α − 1)λ_i(A(G))`.
pub fn spec_regular_shift(g: &Graph, alpha: AlphaParam) -> Result<Spectrum> {
    let (k, spec_a) = regular_adjacency(g)?;
    let a = alpha.value();
    Ok(Spectrum::from_values(spec_a.into_iter().map(|l| a * k as f64 + (a - 1.0) * l)))
}

/// An eigenvalue forced by a twin class, with a lower bound on its multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwinEigenvalue {
    pub value: f64,
    pub min_multiplicity: usize,
    pub kind: TwinKind,
    pub degree: usize,
}

/// A class of `t` true twins of degree `d` forces `α(d − 1) + 1` with
/// multiplicity at least `t − 1`; false twins force `αd`.
pub fn twin_eigenvalues(g: &Graph, alpha: AlphaParam) -> Vec<TwinEigenvalue> {
    let a = alpha.value();
    structural_report(g)
        .twin_classes
        .into_iter()
        .map(|c| {
            let d = c.degree as f64;
            let value = match c.kind {
                TwinKind::TrueTwin => a * (d - 1.0) + 1.0,
                TwinKind::FalseTwin => a * d,
            };
            TwinEigenvalue { value, min_multiplicity: c.vertices.len() - 1, kind: c.kind, degree: c.degree }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, make_pineapple, Family};
    use crate::matrix::{eigen_sym, l_alpha_matrix};

    fn alpha(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    fn assert_close(a: &Spectrum, b: &Spectrum, tol: f64) {
        let (va, vb) = (a.values(), b.values());
        assert_eq!(va.len(), vb.len(), "{a:?} vs {b:?}");
        for (x, y) in va.iter().zip(&vb) {
            assert!((x - y).abs() <= tol * x.abs().max(1.0), "{va:?} vs {vb:?}");
        }
    }

    #[test]
    fn complete_examples() {
        assert_eq!(spec_complete(4, AlphaParam::ONE).unwrap(), Spectrum::from_groups([(3.0, 4)]));
        let s = spec_complete(3, AlphaParam::ZERO).unwrap();
        assert_eq!(s, Spectrum::from_groups([(1.0, 2), (-2.0, 1)]));
        let s = spec_complete(5, alpha(0.3)).unwrap();
        assert_close(&s, &Spectrum::from_groups([(1.9, 4), (-1.6, 1)]), 1e-14);
        assert_eq!(spec_complete(1, alpha(0.4)).unwrap(), Spectrum::from_groups([(0.0, 1)]));
        assert!(spec_complete(0, alpha(0.4)).is_err());
    }

    #[test]
    fn complete_bipartite_examples() {
        for a in AlphaParam::tenths() {
            let k11 = spec_complete_bipartite(1, 1, a).unwrap();
            assert_close(&k11, &spec_complete(2, a).unwrap(), 1e-12);
        }
        let s = spec_complete_bipartite(3, 2, AlphaParam::ZERO).unwrap();
        let r6 = 6f64.sqrt();
        assert_close(&s, &Spectrum::from_groups([(r6, 1), (0.0, 3), (-r6, 1)]), 1e-14);
        for n in 2..9 {
            for a in AlphaParam::tenths() {
                assert_close(&spec_complete_bipartite(n - 1, 1, a).unwrap(), &spec_star(n, a).unwrap(), 1e-12);
            }
        }
        assert!(spec_complete_bipartite(2, 3, a_half()).is_err());
        assert!(spec_complete_bipartite(2, 0, a_half()).is_err());
    }

    fn a_half() -> AlphaParam {
        AlphaParam::HALF
    }

    #[test]
    fn regular_shift_examples() {
        let c4 = make_named(Family::Cycle { n: 4 }).unwrap();
        let s = spec_regular_shift(&c4, a_half()).unwrap();
        assert_close(&s, &Spectrum::from_groups([(2.0, 1), (1.0, 2), (0.0, 1)]), 1e-12);
        for n in 1..8 {
            let k = make_named(Family::Complete { n }).unwrap();
            for a in AlphaParam::tenths() {
                assert_close(&spec_regular_shift(&k, a).unwrap(), &spec_complete(n, a).unwrap(), 1e-12);
            }
        }
        let pet = make_named(Family::Cycle { n: 7 }).unwrap();
        assert_eq!(spec_regular_shift(&pet, AlphaParam::ONE).unwrap(), Spectrum::from_groups([(2.0, 7)]));
        let p3 = make_named(Family::Path { n: 3 }).unwrap();
        assert!(matches!(spec_regular_shift(&p3, a_half()), Err(Error::NotRegular(_))));
    }

    #[test]
    fn twin_examples() {
        let a = alpha(0.35);
        let star = make_named(Family::Star { n: 5 }).unwrap();
        let t = twin_eigenvalues(&star, a);
        assert_eq!(t.len(), 1);
        assert!((t[0].value - 0.35).abs() < 1e-15);
        assert_eq!(t[0].min_multiplicity, 3);

        let k4 = make_named(Family::Complete { n: 4 }).unwrap();
        let t = twin_eigenvalues(&k4, a);
        assert!((t[0].value - (2.0 * 0.35 + 1.0)).abs() < 1e-15);
        assert_eq!(t[0].min_multiplicity, 3);

        let pine = make_pineapple(4, 3).unwrap();
        let t = twin_eigenvalues(&pine, a);
        let pendant = t.iter().find(|e| e.kind == TwinKind::FalseTwin).unwrap();
        assert_eq!(pendant.min_multiplicity, 2);
        assert!((pendant.value - 0.35).abs() < 1e-15);

        for e in t {
            let oracle = eigen_sym(&l_alpha_matrix(&pine, a)).unwrap();
            assert!(oracle.count_near(e.value, 1e-8) >= e.min_multiplicity);
        }
    }
}
