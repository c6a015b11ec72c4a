use std::collections::HashSet;

use crate::error::{ComError, Result};
use crate::sign::SignVector;

/// Ordered, duplicate-free element labels. Position `i` names coordinate `i`
/// of every sign vector in the owning system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(ComError::DuplicateElement(label.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// `e1, …, en`.
    pub fn numbered(size: usize) -> Self {
        GroundSet {
            labels: (1..=size).map(|i| format!("e{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Maps labels to positions, sorted and deduplicated.
    pub fn resolve<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut indices = labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| ComError::UnknownElement(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        indices.sort_unstable();
        indices.dedup();
        Ok(indices)
    }

    pub fn labels_of(&self, indices: &[usize]) -> Vec<&str> {
        indices.iter().map(|&i| self.label(i)).collect()
    }

    /// The ground set with the flagged positions removed, order preserved.
    pub(crate) fn without(&self, removed: &[bool]) -> GroundSet {
        GroundSet {
            labels: self
                .labels
                .iter()
                .zip(removed)
                .filter(|(_, &r)| !r)
                .map(|(l, _)| l.clone())
                .collect(),
        }
    }
}

/// A ground set together with a finite set of covectors.
///
/// Covectors are kept sorted in mixed-radix order (`- < 0 < +`, first
/// coordinate most significant) and deduplicated, so two systems with the same
/// set of covectors compare equal and print identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSystem {
    ground: GroundSet,
    covectors: Vec<SignVector>,
}

impl SignSystem {
    pub fn new(ground: GroundSet, covectors: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        let mut covectors: Vec<SignVector> = covectors.into_iter().collect();
        if let Some(bad) = covectors.iter().find(|x| x.len() != ground.len()) {
            return Err(ComError::DimensionMismatch {
                expected: ground.len(),
                found: bad.len(),
            });
        }
        covectors.sort_unstable();
        covectors.dedup();
        Ok(SignSystem { ground, covectors })
    }

    /// Builds a system over `e1, …, en`, taking `n` from the first vector.
    pub fn from_vectors(covectors: Vec<SignVector>) -> Result<Self> {
        let n = covectors.first().map_or(0, SignVector::len);
        SignSystem::new(GroundSet::numbered(n), covectors)
    }

    pub(crate) fn from_sorted_unchecked(ground: GroundSet, covectors: Vec<SignVector>) -> Self {
        debug_assert!(covectors.windows(2).all(|w| w[0] < w[1]));
        SignSystem { ground, covectors }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        self.covectors.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignVector> {
        self.covectors.iter()
    }

    pub fn into_covectors(self) -> Vec<SignVector> {
        self.covectors
    }

    /// Whether the covectors look like the topes of a COM: nonempty, one shared support.
    pub fn validate_topes(&self) -> bool {
        check_tope_supports(&self.covectors).is_ok()
    }
}

impl<'a> IntoIterator for &'a SignSystem {
    type Item = &'a SignVector;
    type IntoIter = std::slice::Iter<'a, SignVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.covectors.iter()
    }
}

pub fn validate_topes(system: &SignSystem) -> bool {
    system.validate_topes()
}

pub(crate) fn check_tope_supports(topes: &[SignVector]) -> Result<(), crate::error::TopeError> {
    let first = topes.first().ok_or(crate::error::TopeError::Empty)?;
    match topes.iter().find(|t| !t.same_support(first)) {
        None => Ok(()),
        Some(other) => Err(crate::error::TopeError::MixedSupports {
            first: first.to_string(),
            second: other.to_string(),
        }),
    }
}
