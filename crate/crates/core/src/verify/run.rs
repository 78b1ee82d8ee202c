use super::{
    compare_spectra, AlphaOutcome, AlphaStatus, CaseStatus, GraphSpec, Mode, VerificationCase,
    VerificationReport, COEFFICIENT_MAX_ORDER, COEFFICIENT_TOL, NEGATIVE_GAP, ROOT_RESIDUAL_TOL,
};
use crate::error::{Error, Result};
use crate::graph::{cartesian, coalesce, direct, join, make_splitting, strong, union, Graph};
use crate::matrix::{
    a_alpha_matrix, char_poly, eigen_sym, l_alpha_matrix, quotient_spectrum, AlphaParam, Partition,
    RealPoly, Spectrum, SymMatrix,
};
use crate::theorems::{self as th, PrintedCheck, TheoremId, TheoremOutput};

/// Outcome of one grid point.
struct Check {
    passed: bool,
    deviation: f64,
    notes: Vec<String>,
}

/// A closed form evaluated at one α, with the graph it describes.
struct Instance {
    output: TheoremOutput,
    graph: Graph,
    /// Printed-formula cross-checks; `true` marks the ones that must agree.
    printed: Vec<(PrintedCheck, bool)>,
}

/// Hypothesis and construction errors make a case inapplicable rather than wrong.
fn is_hypothesis_error(e: &Error) -> bool {
    matches!(
        e,
        Error::ParameterOutOfRange(_)
            | Error::InvalidVertex { .. }
            | Error::InvalidEdge { .. }
            | Error::Parse { .. }
            | Error::AlphaOutOfRange(_)
            | Error::NotRegular(_)
            | Error::NotConnected
            | Error::InvalidPartition(_)
    )
}

fn report(case: &VerificationCase, status: CaseStatus, outcomes: Vec<AlphaOutcome>, notes: Vec<String>) -> VerificationReport {
    let max_deviation = outcomes.iter().map(|o| o.deviation).fold(0.0, f64::max);
    VerificationReport { case: case.clone(), status, outcomes, max_deviation, notes }
}

fn skipped(case: &VerificationCase, reason: String) -> VerificationReport {
    report(case, CaseStatus::Skipped { reason }, Vec::new(), Vec::new())
}

fn failed(case: &VerificationCase, outcomes: Vec<AlphaOutcome>, mut notes: Vec<String>, e: Error) -> VerificationReport {
    notes.push(format!("error: {e}"));
    report(case, CaseStatus::Fail, outcomes, notes)
}

/// Deviation recorded when a comparison cannot be made at all.
const UNCOMPARABLE: f64 = f64::MAX;

pub fn run_case(case: &VerificationCase) -> VerificationReport {
    let grid = match case.validate() {
        Ok(g) => g,
        Err(e) => return skipped(case, e.to_string()),
    };
    let g = match case.g.build() {
        Ok(g) => g,
        Err(e) => return skipped(case, e.to_string()),
    };
    let h = match case.h.as_ref().map(GraphSpec::build).transpose() {
        Ok(h) => h,
        Err(e) => return skipped(case, e.to_string()),
    };
    match case.theorem {
        TheoremId::BipartiteEquiv => return bipartite_equiv(case, &g, &grid),
        TheoremId::Nonnegativity => return nonnegativity(case, &g, &grid),
        _ => {}
    }

    let mut outcomes = Vec::with_capacity(grid.len());
    let mut notes = Vec::new();
    let mut printed_misses: Vec<(&'static str, f64, f64)> = Vec::new();
    for &alpha in &grid {
        let instance = match instance(case, &g, h.as_ref(), alpha) {
            Ok(i) => i,
            Err(Error::AlphaBoundary(_)) => {
                outcomes.push(AlphaOutcome { alpha: alpha.value(), status: AlphaStatus::Skipped, deviation: 0.0 });
                continue;
            }
            Err(e) if is_hypothesis_error(&e) => return skipped(case, e.to_string()),
            Err(e) => return failed(case, outcomes, notes, e),
        };
        let mut check = match compare(case, &instance, alpha) {
            Ok(c) => c,
            Err(e) if is_hypothesis_error(&e) => return skipped(case, e.to_string()),
            Err(e) => return failed(case, outcomes, notes, e),
        };
        for (p, hard) in &instance.printed {
            if p.agrees {
                continue;
            }
            if *hard {
                check.passed = false;
                check.notes.push(format!(
                    "{} disagrees with the quotient at alpha={} (deviation {:.3e})",
                    p.formula,
                    alpha.value(),
                    p.max_deviation
                ));
            } else {
                printed_misses.push((p.formula, alpha.value(), p.max_deviation));
            }
        }
        let status = if check.passed { AlphaStatus::Pass } else { AlphaStatus::Fail };
        outcomes.push(AlphaOutcome { alpha: alpha.value(), status, deviation: check.deviation });
        notes.extend(check.notes);
    }
    if !printed_misses.is_empty() {
        let formula = printed_misses[0].0;
        let worst = printed_misses.iter().map(|m| m.2).fold(0.0, f64::max);
        let alphas: Vec<String> = printed_misses.iter().map(|m| m.1.to_string()).collect();
        notes.push(format!(
            "discrepancy: printed {formula} differs from the quotient computation at alpha in {{{}}} (max deviation {worst:.3e})",
            alphas.join(", ")
        ));
    }
    let status = if outcomes.iter().any(|o| o.status == AlphaStatus::Fail) {
        CaseStatus::Fail
    } else if outcomes.iter().all(|o| o.status == AlphaStatus::Skipped) {
        CaseStatus::Skipped { reason: "closed form applies at no alpha of the grid".into() }
    } else {
        CaseStatus::Pass
    };
    report(case, status, outcomes, notes)
}

fn oracle(g: &Graph, alpha: AlphaParam) -> Result<Spectrum> {
    eigen_sym(&l_alpha_matrix(g, alpha))
}

fn need_h<'a>(case: &VerificationCase, h: Option<&'a Graph>) -> Result<&'a Graph> {
    h.ok_or_else(|| Error::ParameterOutOfRange(format!("theorem {} needs a second graph", case.theorem)))
}

fn wrong_spec(case: &VerificationCase, what: &str) -> Error {
    Error::ParameterOutOfRange(format!("theorem {} needs {what}, got {}", case.theorem, case.g))
}

fn instance(case: &VerificationCase, g: &Graph, h: Option<&Graph>, alpha: AlphaParam) -> Result<Instance> {
    use TheoremOutput::{Bounded, Polynomial, Values};
    let full = |s: Spectrum, graph: Graph| Instance { output: TheoremOutput::Spectrum(s), graph, printed: Vec::new() };
    let plain = |output: TheoremOutput, graph: Graph| Instance { output, graph, printed: Vec::new() };
    Ok(match case.theorem {
        TheoremId::Complete => match case.g {
            GraphSpec::Complete { n } => full(th::spec_complete(n, alpha)?, g.clone()),
            _ => return Err(wrong_spec(case, "a complete graph")),
        },
        TheoremId::CompleteBipartite => match case.g {
            GraphSpec::CompleteBipartite { p, q } => {
                full(th::spec_complete_bipartite(p.max(q), p.min(q), alpha)?, g.clone())
            }
            _ => return Err(wrong_spec(case, "a complete bipartite graph")),
        },
        TheoremId::Star => match case.g {
            GraphSpec::Star { n } => full(th::spec_star(n, alpha)?, g.clone()),
            _ => return Err(wrong_spec(case, "a star")),
        },
        TheoremId::RegularShift => full(th::spec_regular_shift(g, alpha)?, g.clone()),
        TheoremId::Twins => plain(
            Bounded(th::twin_eigenvalues(g, alpha).into_iter().map(|t| (t.value, t.min_multiplicity)).collect()),
            g.clone(),
        ),
        TheoremId::Union => {
            let h = need_h(case, h)?;
            full(th::spec_union(&oracle(g, alpha)?, &oracle(h, alpha)?), union(g, h))
        }
        TheoremId::JoinLifted => {
            let h = need_h(case, h)?;
            let gp = th::eigenpairs_orthogonal_to_ones(&l_alpha_matrix(g, alpha))?;
            let hp = th::eigenpairs_orthogonal_to_ones(&l_alpha_matrix(h, alpha))?;
            plain(Values(th::join_lifted_eigs(&gp, &hp, g.order(), h.order(), alpha)?), join(g, h))
        }
        TheoremId::JoinRegular => {
            let h = need_h(case, h)?;
            full(th::spec_join_regular_of(g, h, alpha)?, join(g, h))
        }
        TheoremId::Cartesian => {
            let h = need_h(case, h)?;
            full(th::spec_cartesian(&oracle(g, alpha)?, &oracle(h, alpha)?), cartesian(g, h))
        }
        TheoremId::DirectSubset => {
            let h = need_h(case, h)?;
            plain(Values(th::spec_direct_subset_of(g, h, alpha)?), direct(g, h))
        }
        TheoremId::DirectRegular => {
            let h = need_h(case, h)?;
            full(th::spec_direct_regular_of(g, h, alpha)?, direct(g, h))
        }
        TheoremId::StrongSubset => {
            let h = need_h(case, h)?;
            plain(Values(th::spec_strong_subset_of(g, h, alpha)?), strong(g, h))
        }
        TheoremId::StrongRegular => {
            let h = need_h(case, h)?;
            full(th::spec_strong_regular_of(g, h, alpha)?, strong(g, h))
        }
        TheoremId::Coalescence => {
            let h = need_h(case, h)?;
            let (u, v) = case.anchors.unwrap_or((0, 0));
            let (u, v) = (g.vertex(u)?, h.vertex(v)?);
            plain(Polynomial(th::charpoly_coalescence_of(g, u, h, v, alpha)?), coalesce(g, u, h, v)?)
        }
        TheoremId::Splitting => plain(Polynomial(th::charpoly_splitting_regular_of(g, alpha)?), make_splitting(g)),
        TheoremId::Pineapple => match case.g {
            GraphSpec::Pineapple { p, q } => Instance {
                output: TheoremOutput::Spectrum(th::spec_pineapple(p, q, alpha)?),
                graph: g.clone(),
                printed: vec![(th::pineapple_printed_check(p, q, alpha)?, false)],
            },
            _ => return Err(wrong_spec(case, "a pineapple")),
        },
        TheoremId::HGraph => match case.g {
            GraphSpec::HGraph { n, l } => Instance {
                output: TheoremOutput::Spectrum(th::spec_h_graph(n, l, alpha)?),
                graph: g.clone(),
                printed: vec![(th::h_graph_theta_check(n, l, alpha)?, true)],
            },
            _ => return Err(wrong_spec(case, "an H graph")),
        },
        TheoremId::KkGraph => match case.g {
            GraphSpec::KkGraph { n, l } => Instance {
                output: TheoremOutput::Spectrum(th::spec_kk_graph(n, l, alpha)?),
                graph: g.clone(),
                printed: vec![(th::kk_graph_printed_check(n, l, alpha)?, false)],
            },
            _ => return Err(wrong_spec(case, "a KK graph")),
        },
        TheoremId::CoreSatellite => match case.g {
            GraphSpec::CoreSatellite { c, s, eta } => Instance {
                output: TheoremOutput::Spectrum(th::spec_core_satellite(c, s, eta, alpha)?),
                graph: g.clone(),
                printed: vec![(th::core_satellite_printed_check(c, s, eta, alpha)?, false)],
            },
            _ => return Err(wrong_spec(case, "a core-satellite graph")),
        },
        TheoremId::Quotient => {
            let p = natural_partition(&case.g, g)
                .ok_or_else(|| wrong_spec(case, "a graph with a known equitable partition"))??;
            plain(Values(quotient_spectrum(&l_alpha_matrix(g, alpha), &p)?.values()), g.clone())
        }
        TheoremId::BipartiteEquiv | TheoremId::Nonnegativity => {
            unreachable!("handled before the per-alpha loop")
        }
    })
}

/// The partition the constructions are built around, when there is one.
fn natural_partition(spec: &GraphSpec, g: &Graph) -> Option<Result<Partition>> {
    Some(match *spec {
        GraphSpec::Pineapple { p, q } => th::pineapple_partition(p, q),
        GraphSpec::HGraph { n, l } => th::h_graph_partition(n, l),
        GraphSpec::KkGraph { n, l } => th::kk_graph_partition(n, l),
        GraphSpec::CoreSatellite { c, s, eta } => Partition::from_sizes(&[c, s * eta]),
        GraphSpec::CompleteBipartite { p, q } => Partition::from_sizes(&[p, q]),
        GraphSpec::Star { n } => Partition::from_sizes(&[1, n - 1]),
        _ if g.regular_degree().is_some() && g.order() > 0 => Ok(Partition::single_block(g.order())),
        _ => return None,
    })
}

fn compare(case: &VerificationCase, inst: &Instance, alpha: AlphaParam) -> Result<Check> {
    let tol = case.tolerance;
    let m = l_alpha_matrix(&inst.graph, alpha);
    let spectrum = eigen_sym(&m)?;
    match (case.mode, &inst.output) {
        (Mode::FullSpectrum, TheoremOutput::Spectrum(s)) => full_match(s, &spectrum, tol),
        (Mode::FullSpectrum, TheoremOutput::Values(v)) => full_match(&Spectrum::from_values(v.iter().copied()), &spectrum, tol),
        (Mode::SubsetMembership, TheoremOutput::Spectrum(s)) => Ok(membership(&s.values(), &spectrum, tol)),
        (Mode::SubsetMembership, TheoremOutput::Values(v)) => Ok(membership(v, &spectrum, tol)),
        (Mode::SubsetMembership, TheoremOutput::Bounded(b)) => {
            Ok(membership(&b.iter().map(|x| x.0).collect::<Vec<_>>(), &spectrum, tol))
        }
        (Mode::MultiplicityLowerBound, TheoremOutput::Bounded(b)) => Ok(multiplicity(b, &spectrum, tol)),
        (Mode::PolynomialIdentity, TheoremOutput::Polynomial(p)) => {
            let tols = (tol, case.coefficient_tolerance.unwrap_or(COEFFICIENT_TOL));
            polynomial_identity(p, &m, &spectrum, tols)
        }
        (mode, _) => Err(Error::ParameterOutOfRange(format!(
            "mode {mode:?} does not apply to theorem {}",
            case.theorem
        ))),
    }
}

fn full_match(predicted: &Spectrum, oracle: &Spectrum, tol: f64) -> Result<Check> {
    if predicted.order() != oracle.order() {
        return Ok(Check {
            passed: false,
            deviation: UNCOMPARABLE,
            notes: vec![format!(
                "closed form gives {} eigenvalues, oracle {}",
                predicted.order(),
                oracle.order()
            )],
        });
    }
    let (passed, deviation) = compare_spectra(predicted, oracle, tol)?;
    Ok(Check { passed, deviation, notes: Vec::new() })
}

fn membership(values: &[f64], oracle: &Spectrum, tol: f64) -> Check {
    let deviation = values.iter().map(|&v| oracle.distance_to(v)).fold(0.0, f64::max);
    Check { passed: deviation <= tol, deviation, notes: Vec::new() }
}

fn multiplicity(bounds: &[(f64, usize)], oracle: &Spectrum, tol: f64) -> Check {
    let mut check = membership(&bounds.iter().map(|b| b.0).collect::<Vec<_>>(), oracle, tol);
    for &(value, m) in bounds {
        let found = oracle.count_near(value, tol);
        if found < m {
            check.passed = false;
            check.notes.push(format!("{value} has multiplicity {found}, expected at least {m}"));
        }
    }
    check
}

/// Degree and monicity, every oracle eigenvalue a root, agreement at `2n + 1`
/// points spread over a Gershgorin interval, and coefficient agreement for
/// orders up to [`COEFFICIENT_MAX_ORDER`]. The reported deviation is the
/// largest relative evaluation error.
fn polynomial_identity(p: &RealPoly, m: &SymMatrix, oracle: &Spectrum, (tol, coef_tol): (f64, f64)) -> Result<Check> {
    let n = m.dim();
    let reference = char_poly(m.as_dense())?;
    let mut notes = Vec::new();
    let mut passed = true;
    if p.degree() != n || !p.is_monic() {
        passed = false;
        notes.push(format!("polynomial has degree {} and leading coefficient {}, expected monic degree {n}", p.degree(), p.leading_coefficient()));
    }
    let worst_root = oracle.values().into_iter().map(|l| p.relative_residual(l)).fold(0.0, f64::max);
    if worst_root > ROOT_RESIDUAL_TOL {
        passed = false;
        notes.push(format!("an oracle eigenvalue leaves relative residual {worst_root:.3e}"));
    }
    let radius = 1.0 + (0..n).map(|i| m.as_dense().row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    let points = 2 * n + 1;
    let deviation = (0..points)
        .map(|k| -radius + 2.0 * radius * k as f64 / (points - 1) as f64)
        .map(|x| (p.evaluate(x) - reference.evaluate(x)).abs() / reference.evaluation_scale(x).max(1.0))
        .fold(0.0, f64::max);
    if deviation > tol {
        passed = false;
    }
    if n <= COEFFICIENT_MAX_ORDER {
        let coef = p.max_relative_coefficient_error(&reference);
        if coef > coef_tol {
            passed = false;
            notes.push(format!("coefficients differ by {coef:.3e}"));
        }
    }
    Ok(Check { passed, deviation, notes })
}

/// `L_α` and `A_α` are cospectral for bipartite graphs. For other graphs the
/// spectra must differ at `α = 0` by more than [`NEGATIVE_GAP`].
fn bipartite_equiv(case: &VerificationCase, g: &Graph, grid: &[AlphaParam]) -> VerificationReport {
    let gap = |alpha: AlphaParam| -> Result<f64> {
        let l = eigen_sym(&l_alpha_matrix(g, alpha))?;
        let a = eigen_sym(&a_alpha_matrix(g, alpha))?;
        Ok(compare_spectra(&l, &a, 0.0)?.1)
    };
    let mut outcomes = Vec::new();
    for &alpha in grid {
        match gap(alpha) {
            Ok(dev) => outcomes.push(AlphaOutcome {
                alpha: alpha.value(),
                status: if dev <= case.tolerance { AlphaStatus::Pass } else { AlphaStatus::Fail },
                deviation: dev,
            }),
            Err(e) => return failed(case, outcomes, Vec::new(), e),
        }
    }
    if g.is_bipartite() {
        let status = if outcomes.iter().any(|o| o.status == AlphaStatus::Fail) { CaseStatus::Fail } else { CaseStatus::Pass };
        return report(case, status, outcomes, Vec::new());
    }
    match gap(AlphaParam::ZERO) {
        Ok(g0) if g0 > NEGATIVE_GAP => {
            let note = format!("not bipartite: spectra differ by {g0:.3e} at alpha=0");
            report(case, CaseStatus::ExpectedNegative, outcomes, vec![note])
        }
        Ok(g0) => {
            let note = format!("not bipartite, yet spectra differ by only {g0:.3e} at alpha=0");
            report(case, CaseStatus::Fail, outcomes, vec![note])
        }
        Err(e) => failed(case, outcomes, Vec::new(), e),
    }
}

/// Connected graphs have nonnegative `L_α` spectrum for `α >= 1/2`; grid
/// points below `1/2` are skipped.
fn nonnegativity(case: &VerificationCase, g: &Graph, grid: &[AlphaParam]) -> VerificationReport {
    if !g.is_connected() {
        return skipped(case, Error::NotConnected.to_string());
    }
    let mut outcomes = Vec::new();
    for &alpha in grid {
        if alpha.value() < 0.5 {
            outcomes.push(AlphaOutcome { alpha: alpha.value(), status: AlphaStatus::Skipped, deviation: 0.0 });
            continue;
        }
        let min = match oracle(g, alpha) {
            Ok(s) => s.min().unwrap_or(0.0),
            Err(e) => return failed(case, outcomes, Vec::new(), e),
        };
        let deviation = (-min).max(0.0);
        let status = if deviation <= case.tolerance { AlphaStatus::Pass } else { AlphaStatus::Fail };
        outcomes.push(AlphaOutcome { alpha: alpha.value(), status, deviation });
    }
    let status = if outcomes.iter().any(|o| o.status == AlphaStatus::Fail) {
        CaseStatus::Fail
    } else if outcomes.iter().all(|o| o.status == AlphaStatus::Skipped) {
        CaseStatus::Skipped { reason: "no alpha >= 0.5 in the grid".into() }
    } else {
        CaseStatus::Pass
    };
    report(case, status, outcomes, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(t: TheoremId, g: &str) -> VerificationCase {
        VerificationCase::new(t, g.parse().unwrap())
    }

    #[test]
    fn union_case_passes_on_full_grid() {
        let r = run_case(&case(TheoremId::Union, "k3").with_h("k2".parse().unwrap()));
        assert_eq!(r.status, CaseStatus::Pass);
        assert_eq!(r.outcomes.len(), 11);
        assert!(r.max_deviation <= 1e-8);
    }

    #[test]
    fn bipartite_cases() {
        let r = run_case(&case(TheoremId::BipartiteEquiv, "c5").with_grid(vec![0.0]));
        assert_eq!(r.status, CaseStatus::ExpectedNegative);
        let r = run_case(&case(TheoremId::BipartiteEquiv, "c6"));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
    }

    #[test]
    fn nonnegativity_cases() {
        let r = run_case(&case(TheoremId::Nonnegativity, "k5").with_grid(vec![0.5, 0.75, 1.0]));
        assert_eq!(r.status, CaseStatus::Pass);
        let r = run_case(&case(TheoremId::Nonnegativity, "empty3"));
        assert!(matches!(r.status, CaseStatus::Skipped { .. }));
        let r = run_case(&case(TheoremId::Nonnegativity, "k4").with_grid(vec![0.0, 0.2]));
        assert!(matches!(r.status, CaseStatus::Skipped { .. }));
    }

    #[test]
    fn family_cases_skip_alpha_one_and_note_printed_discrepancies() {
        let r = run_case(&case(TheoremId::Pineapple, "pineapple5,3"));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
        assert_eq!(r.outcomes.last().unwrap().status, AlphaStatus::Skipped);
        assert!(r.notes.iter().any(|n| n.starts_with("discrepancy")), "{:?}", r.notes);
        let r = run_case(&case(TheoremId::HGraph, "h4,2"));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
        assert!(r.notes.is_empty());
        let r = run_case(&case(TheoremId::KkGraph, "kk4,4"));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
    }

    #[test]
    fn polynomial_and_subset_cases() {
        let r = run_case(&case(TheoremId::Coalescence, "c3").with_h("c3".parse().unwrap()).with_anchors(1, 2));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
        let r = run_case(&case(TheoremId::Splitting, "c5"));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
        let r = run_case(&case(TheoremId::JoinLifted, "pineapple4,2").with_h("p3".parse().unwrap()));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
        let r = run_case(&case(TheoremId::Quotient, "kk5,2"));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
        let r = run_case(&case(TheoremId::Twins, "pineapple4,3"));
        assert_eq!(r.status, CaseStatus::Pass, "{r:?}");
    }

    #[test]
    fn mismatches_are_skipped_or_failed() {
        let r = run_case(&case(TheoremId::Pineapple, "k4"));
        assert!(matches!(r.status, CaseStatus::Skipped { .. }));
        let r = run_case(&case(TheoremId::Union, "k4"));
        assert!(matches!(r.status, CaseStatus::Skipped { .. }));
        let r = run_case(&case(TheoremId::Union, "k4").with_h("k2".parse().unwrap()).with_mode(Mode::PolynomialIdentity));
        assert!(matches!(r.status, CaseStatus::Skipped { .. }));
        // A full-spectrum check of a subset theorem must fail.
        let r = run_case(
            &case(TheoremId::DirectSubset, "p3").with_h("c3".parse().unwrap()).with_mode(Mode::FullSpectrum),
        );
        assert_eq!(r.status, CaseStatus::Fail);
    }
}
