use serde::{Deserialize, Serialize};

/// Relative width of a multiplicity bucket: eigenvalues within
/// `GROUPING_TOL * max(1, |λ|)` of their neighbor share a bucket.
pub const GROUPING_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// Multiset of real eigenvalues, grouped and sorted descending.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Eigenvalue>", into = "Vec<Eigenvalue>")]
pub struct Spectrum {
    groups: Vec<Eigenvalue>,
}

impl Spectrum {
    /// Groups raw eigenvalues into multiplicities. Each bucket reports its
    /// median member.
    pub fn from_values<I: IntoIterator<Item = f64>>(values: I) -> Self {
        let mut values: Vec<f64> = values.into_iter().collect();
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            let split = i == values.len()
                || values[i - 1] - values[i] > GROUPING_TOL * values[i - 1].abs().max(1.0);
            if split {
                let bucket = &values[start..i];
                groups.push(Eigenvalue { value: bucket[bucket.len() / 2], multiplicity: bucket.len() });
                start = i;
            }
        }
        Spectrum { groups }
    }

    /// Builds from `(value, multiplicity)` pairs; zero multiplicities are dropped
    /// and coinciding values are merged.
    pub fn from_groups<I: IntoIterator<Item = (f64, usize)>>(groups: I) -> Self {
        Self::from_values(
            groups.into_iter().flat_map(|(value, m)| std::iter::repeat_n(value, m)),
        )
    }

    pub fn groups(&self) -> &[Eigenvalue] {
        &self.groups
    }

    /// Total multiplicity (the matrix dimension).
    pub fn order(&self) -> usize {
        self.groups.iter().map(|g| g.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Expanded eigenvalue list, descending.
    pub fn values(&self) -> Vec<f64> {
        self.groups
            .iter()
            .flat_map(|g| std::iter::repeat_n(g.value, g.multiplicity))
            .collect()
    }

    pub fn max(&self) -> Option<f64> {
        self.groups.first().map(|g| g.value)
    }

    pub fn min(&self) -> Option<f64> {
        self.groups.last().map(|g| g.value)
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum::from_values(self.values().into_iter().chain(other.values()))
    }

    /// Number of eigenvalues (with multiplicity) within `tol * max(1, |value|)` of `value`.
    pub fn count_near(&self, value: f64, tol: f64) -> usize {
        let scale = tol * value.abs().max(1.0);
        self.groups
            .iter()
            .filter(|g| (g.value - value).abs() <= scale)
            .map(|g| g.multiplicity)
            .sum()
    }

    /// Relative distance from `value` to the nearest eigenvalue.
    pub fn distance_to(&self, value: f64) -> f64 {
        self.groups
            .iter()
            .map(|g| (g.value - value).abs() / value.abs().max(1.0))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, value: f64, tol: f64) -> bool {
        self.distance_to(value) <= tol
    }

    /// Applies `f` to every eigenvalue and regroups.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Spectrum {
        Spectrum::from_values(self.values().into_iter().map(f))
    }
}

impl From<Vec<Eigenvalue>> for Spectrum {
    fn from(groups: Vec<Eigenvalue>) -> Self {
        Spectrum::from_groups(groups.into_iter().map(|g| (g.value, g.multiplicity)))
    }
}

impl From<Spectrum> for Vec<Eigenvalue> {
    fn from(s: Spectrum) -> Self {
        s.groups
    }
}
