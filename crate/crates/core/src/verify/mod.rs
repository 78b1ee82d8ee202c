//! Runs closed forms against the eigensolver over graph corpora and α-grids.
//!
//! A [`VerificationCase`] names a theorem, the graph(s) it applies to, an
//! α-grid, a tolerance and a comparison [`Mode`]. [`run_case`] evaluates the
//! closed form and the oracle at every grid point; [`run_suite`] runs a corpus
//! in parallel and keeps the reports in corpus order.

mod corpus;
mod graph_spec;
mod run;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{AlphaParam, Spectrum};
use crate::theorems::TheoremId;

pub use corpus::{default_corpus, random_graph, random_tree, CORPUS_SEED};
pub use graph_spec::GraphSpec;
pub use run::run_case;

/// Relative coefficient tolerance for polynomial identities (orders up to 10).
pub const COEFFICIENT_TOL: f64 = 1e-6;
/// Largest relative residual `|p(λ)| / Σ|c_k||λ|^k` accepted for an oracle
/// eigenvalue of a polynomial theorem.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-6;
/// Coefficient comparison is limited to orders where Faddeev–LeVerrier is reliable.
pub const COEFFICIENT_MAX_ORDER: usize = 10;
/// Minimum `α = 0` gap for a non-bipartite graph to count as an expected negative.
pub const NEGATIVE_GAP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    FullSpectrum,
    SubsetMembership,
    PolynomialIdentity,
    MultiplicityLowerBound,
}

impl Mode {
    pub fn default_for(theorem: TheoremId) -> Mode {
        use TheoremId::*;
        match theorem {
            Twins => Mode::MultiplicityLowerBound,
            JoinLifted | DirectSubset | StrongSubset | Quotient => Mode::SubsetMembership,
            Coalescence | Splitting => Mode::PolynomialIdentity,
            _ => Mode::FullSpectrum,
        }
    }
}

pub fn default_tolerance(theorem: TheoremId) -> f64 {
    match theorem {
        TheoremId::Complete | TheoremId::BipartiteEquiv => 1e-9,
        TheoremId::Nonnegativity => 1e-10,
        TheoremId::Coalescence | TheoremId::Splitting => 1e-7,
        _ => 1e-8,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationCase {
    pub id: String,
    pub theorem: TheoremId,
    pub g: GraphSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<GraphSpec>,
    /// Vertices identified by a coalescence (`u` in `G`, `v` in `H`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchors: Option<(usize, usize)>,
    pub alpha_grid: Vec<f64>,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient_tolerance: Option<f64>,
    pub mode: Mode,
}

impl VerificationCase {
    /// Default grid `{0, 0.1, ..., 1}`, default tolerance and mode for the theorem.
    pub fn new(theorem: TheoremId, g: GraphSpec) -> Self {
        VerificationCase {
            id: format!("{theorem}/{g}"),
            theorem,
            g,
            h: None,
            anchors: None,
            alpha_grid: AlphaParam::tenths().into_iter().map(AlphaParam::value).collect(),
            tolerance: default_tolerance(theorem),
            coefficient_tolerance: None,
            mode: Mode::default_for(theorem),
        }
    }

    pub fn with_h(mut self, h: GraphSpec) -> Self {
        self.id = format!("{}/{}+{h}", self.theorem, self.g);
        self.h = Some(h);
        self
    }

    pub fn with_anchors(mut self, u: usize, v: usize) -> Self {
        self.id = format!("{}@{u},{v}", self.id);
        self.anchors = Some((u, v));
        self
    }

    pub fn with_grid(mut self, grid: Vec<f64>) -> Self {
        self.alpha_grid = grid;
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    /// Checks the tolerance and returns the grid as validated parameters.
    pub fn validate(&self) -> Result<Vec<AlphaParam>> {
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::ParameterOutOfRange(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if let Some(t) = self.coefficient_tolerance {
            if t.is_nan() || t <= 0.0 {
                return Err(Error::ParameterOutOfRange(format!("coefficient tolerance must be positive, got {t}")));
            }
        }
        self.alpha_grid.iter().map(|&a| AlphaParam::new(a)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaStatus {
    Pass,
    Fail,
    /// The closed form does not apply at this α.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaOutcome {
    pub alpha: f64,
    pub status: AlphaStatus,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skipped { reason: String },
    /// Failed a check that is supposed to fail (the converse direction of an
    /// "if and only if").
    ExpectedNegative,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case: VerificationCase,
    #[serde(flatten)]
    pub status: CaseStatus,
    pub outcomes: Vec<AlphaOutcome>,
    pub max_deviation: f64,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn is_unexpected_failure(&self) -> bool {
        self.status == CaseStatus::Fail
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub expected_negative: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl SuiteReport {
    /// True when no case failed unexpectedly.
    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only serializable data")
    }

    /// One line per case plus a summary line.
    pub fn table(&self) -> String {
        let width = self.reports.iter().map(|r| r.case.id.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<17}  {:>10}  notes", "case", "status", "max_dev");
        for r in &self.reports {
            let status = match &r.status {
                CaseStatus::Pass => "pass".to_string(),
                CaseStatus::Fail => "FAIL".to_string(),
                CaseStatus::Skipped { reason } => format!("skipped ({reason})"),
                CaseStatus::ExpectedNegative => "expected-negative".to_string(),
            };
            let (status, extra) = if status.len() > 17 { ("skipped".to_string(), status) } else { (status, String::new()) };
            let mut notes = r.notes.join("; ");
            if !extra.is_empty() {
                notes = if notes.is_empty() { extra } else { format!("{extra}; {notes}") };
            }
            let _ = writeln!(out, "{:<width$}  {:<17}  {:>10.3e}  {notes}", r.case.id, status, r.max_deviation);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total {}: {} passed, {} failed, {} skipped, {} expected-negative",
            s.total, s.passed, s.failed, s.skipped, s.expected_negative
        );
        out
    }
}

/// Compares two spectra as sorted vectors. Passes iff every
/// `|a_i − b_i| ≤ tol · max(1, |a_i|)`; returns the largest relative deviation.
pub fn compare_spectra(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<(bool, f64)> {
    if a.order() != b.order() {
        return Err(Error::SizeMismatch(format!(
            "spectra have total multiplicity {} and {}",
            a.order(),
            b.order()
        )));
    }
    let dev = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).abs() / x.abs().max(1.0))
        .fold(0.0, f64::max);
    Ok((dev <= tol, dev))
}

/// Runs every case (in parallel) and returns the reports in input order.
pub fn run_suite(cases: &[VerificationCase]) -> SuiteReport {
    let reports: Vec<VerificationReport> = cases.par_iter().map(run_case).collect();
    let mut summary = Summary { total: reports.len(), ..Summary::default() };
    for r in &reports {
        match r.status {
            CaseStatus::Pass => summary.passed += 1,
            CaseStatus::Fail => summary.failed += 1,
            CaseStatus::Skipped { .. } => summary.skipped += 1,
            CaseStatus::ExpectedNegative => summary.expected_negative += 1,
        }
    }
    SuiteReport { reports, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{eigen_sym, l_alpha_matrix};
    use crate::theorems::spec_complete;

    #[test]
    fn compare_spectra_examples() {
        let s = Spectrum::from_groups([(1.0, 2), (0.5, 1)]);
        assert_eq!(compare_spectra(&s, &s, 1e-12).unwrap(), (true, 0.0));
        let near = Spectrum::from_values([1.0 + 5e-9, 1.0 - 5e-9]);
        assert!(compare_spectra(&Spectrum::from_groups([(1.0, 2)]), &near, 1e-8).unwrap().0);
        assert!(matches!(
            compare_spectra(&s, &Spectrum::from_groups([(1.0, 2)]), 1e-8),
            Err(Error::SizeMismatch(_))
        ));
        let a = AlphaParam::new(0.3).unwrap();
        let k5 = GraphSpec::Complete { n: 5 }.build().unwrap();
        let (ok, dev) =
            compare_spectra(&spec_complete(5, a).unwrap(), &eigen_sym(&l_alpha_matrix(&k5, a)).unwrap(), 1e-9)
                .unwrap();
        assert!(ok, "{dev}");
    }

    #[test]
    fn validation() {
        let c = VerificationCase::new(TheoremId::Complete, GraphSpec::Complete { n: 3 });
        assert_eq!(c.validate().unwrap().len(), 11);
        assert!(c.clone().with_grid(vec![0.5, 1.2]).validate().is_err());
        assert!(c.clone().with_tolerance(0.0).validate().is_err());
        assert!(c.with_tolerance(f64::NAN).validate().is_err());
    }

    #[test]
    fn empty_suite_is_ok() {
        let r = run_suite(&[]);
        assert!(r.ok());
        assert_eq!(r.summary, Summary::default());
    }

    #[test]
    fn suite_counts_and_order() {
        let cases = vec![
            VerificationCase::new(TheoremId::Union, GraphSpec::Complete { n: 3 }).with_h(GraphSpec::Complete { n: 2 }),
            VerificationCase::new(TheoremId::JoinRegular, GraphSpec::Path { n: 3 }).with_h(GraphSpec::Cycle { n: 4 }),
            VerificationCase::new(TheoremId::BipartiteEquiv, GraphSpec::Cycle { n: 5 }),
        ];
        let r = run_suite(&cases);
        assert_eq!(r.reports.iter().map(|r| r.case.id.clone()).collect::<Vec<_>>(), cases.iter().map(|c| c.id.clone()).collect::<Vec<_>>());
        assert_eq!(
            r.summary,
            Summary { total: 3, passed: 1, failed: 0, skipped: 1, expected_negative: 1 }
        );
        assert!(r.ok());
        match &r.reports[1].status {
            CaseStatus::Skipped { reason } => assert!(reason.contains("not regular"), "{reason}"),
            other => panic!("{other:?}"),
        }
        let json = r.to_json();
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.summary, r.summary);
        assert!(r.table().lines().count() == 5);
    }

    #[test]
    fn reports_are_reproducible() {
        let corpus = default_corpus();
        let take: Vec<_> = corpus.iter().step_by(23).cloned().collect();
        let a = run_suite(&take);
        let b = run_suite(&take);
        let pattern = |r: &SuiteReport| r.reports.iter().map(|x| x.status.clone()).collect::<Vec<_>>();
        assert_eq!(pattern(&a), pattern(&b));
    }
}
