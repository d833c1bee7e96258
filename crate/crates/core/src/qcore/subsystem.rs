use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of qubit labels, kept strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SubsystemSet(Vec<usize>);

impl TryFrom<Vec<usize>> for SubsystemSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SubsystemSet> for Vec<usize> {
    fn from(s: SubsystemSet) -> Self {
        s.0
    }
}

impl SubsystemSet {
    /// Builds a set from arbitrary indices. Duplicates are rejected.
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubsystem(format!(
                "duplicate qubit index in {v:?}"
            )));
        }
        Ok(Self(v))
    }

    pub fn single(qubit: usize) -> Self {
        Self(vec![qubit])
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// All qubits `0..n`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.0.binary_search(&q).is_ok()
    }

    /// Qubits of `0..n` not in this set.
    pub fn complement(&self, n: usize) -> Self {
        Self((0..n).filter(|q| !self.contains(*q)).collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.iter().all(|q| !other.contains(*q))
    }

    /// Checks every index is below `n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&q) if q >= n => Err(Error::InvalidSubsystem(format!(
                "qubit {q} out of range for a {n}-qubit system"
            ))),
            _ => Ok(()),
        }
    }

    /// Checks the set is non-empty, in range and not the whole system.
    pub fn check_proper(&self, n: usize) -> Result<()> {
        self.check_range(n)?;
        if self.is_empty() {
            return Err(Error::InvalidSubsystem("empty subsystem".into()));
        }
        if self.len() == n {
            return Err(Error::InvalidSubsystem(
                "subsystem must be a proper subset of the qubits".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for SubsystemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, ")")
    }
}
