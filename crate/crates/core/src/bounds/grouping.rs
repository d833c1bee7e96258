//! Ordered groupings of the non-focus qubits and their dominance check.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::SCALAR_TOLERANCE;
use crate::error::{Error, Result};
use crate::qcore::SubsystemSet;

/// Ordered list of disjoint, non-empty qubit sets; position `i` is `M_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<SubsystemSet>", into = "Vec<SubsystemSet>")]
pub struct Grouping {
    groups: Vec<SubsystemSet>,
}

impl TryFrom<Vec<SubsystemSet>> for Grouping {
    type Error = Error;

    fn try_from(groups: Vec<SubsystemSet>) -> Result<Self> {
        Self::new(groups)
    }
}

impl From<Grouping> for Vec<SubsystemSet> {
    fn from(g: Grouping) -> Self {
        g.groups
    }
}

impl Grouping {
    pub fn new(groups: Vec<SubsystemSet>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidInput("a grouping needs at least one group".into()));
        }
        for (i, g) in groups.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::InvalidInput(format!("group {i} is empty")));
            }
            if groups[..i].iter().any(|h| !h.is_disjoint(g)) {
                return Err(Error::InvalidInput(format!("group {i} overlaps an earlier group")));
            }
        }
        Ok(Self { groups })
    }

    /// One singleton group per qubit, in the given order.
    pub fn singletons(order: &[usize]) -> Result<Self> {
        Self::new(order.iter().map(|&q| SubsystemSet::single(q)).collect())
    }

    /// Convenience constructor from nested index lists.
    pub fn from_lists(lists: &[&[usize]]) -> Result<Self> {
        Self::new(
            lists
                .iter()
                .map(|l| SubsystemSet::new(l.iter().copied()))
                .collect::<Result<_>>()?,
        )
    }

    pub fn groups(&self) -> &[SubsystemSet] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn union(&self) -> SubsystemSet {
        self.groups
            .iter()
            .fold(SubsystemSet::empty(), |acc, g| acc.union(g))
    }

    /// The groups must partition `universe` exactly.
    pub fn check_covers(&self, universe: &SubsystemSet) -> Result<()> {
        let u = self.union();
        if &u != universe {
            return Err(Error::InvalidInput(format!(
                "grouping {self} covers {u}, expected {universe}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Result of the dominance check on one sequence of squared values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dominance {
    pub squared_values: Vec<f64>,
    pub feasible: bool,
}

/// `v[t] ≥ Σ_{l>t} v[l]` for every `t < k−1`, within [`SCALAR_TOLERANCE`].
pub fn feasibility(values_sq: &[f64]) -> Dominance {
    let mut tail: f64 = values_sq.iter().sum();
    let mut feasible = true;
    for &v in values_sq {
        tail -= v;
        if v < tail - SCALAR_TOLERANCE {
            feasible = false;
            break;
        }
    }
    Dominance {
        squared_values: values_sq.to_vec(),
        feasible,
    }
}

/// Descending permutation of `values_sq` (stable on ties) and the dominance
/// check of the reordered sequence.
pub fn sort_descending_then_check(values_sq: &[f64]) -> (Vec<usize>, Dominance) {
    let mut perm: Vec<usize> = (0..values_sq.len()).collect();
    perm.sort_by(|&i, &j| values_sq[j].total_cmp(&values_sq[i]));
    let sorted: Vec<f64> = perm.iter().map(|&i| values_sq[i]).collect();
    (perm, feasibility(&sorted))
}

/// A grouping for one focus qubit with the dominance checks that apply to it.
///
/// `assisted` holds the squared assistance values per group. `plain` holds
/// squared concurrences per group and is only present for bounds whose lower
/// part also needs concurrence dominance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderingCertificate {
    pub focus: usize,
    pub grouping: Grouping,
    pub assisted: Dominance,
    pub plain: Option<Dominance>,
}

impl OrderingCertificate {
    pub fn feasible(&self) -> bool {
        self.assisted.feasible && self.plain.as_ref().is_none_or(|d| d.feasible)
    }
}

impl fmt::Display for OrderingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}:{}", self.focus, self.grouping)
    }
}

/// Depth-first walk over ordered set partitions of the bits in `mask`.
///
/// Each group is offered to `accept(group, rest)` before descending; the
/// last group is never offered since it has nothing after it. `visit`
/// receives every complete partition.
pub fn walk_ordered_partitions<A, V>(mask: u32, accept: &mut A, visit: &mut V)
where
    A: FnMut(u32, u32) -> bool,
    V: FnMut(&[u32]),
{
    if mask == 0 {
        return;
    }
    let mut prefix = Vec::new();
    walk(mask, &mut prefix, accept, visit);
}

fn walk<A, V>(remaining: u32, prefix: &mut Vec<u32>, accept: &mut A, visit: &mut V)
where
    A: FnMut(u32, u32) -> bool,
    V: FnMut(&[u32]),
{
    let mut sub = remaining;
    while sub != 0 {
        let rest = remaining & !sub;
        prefix.push(sub);
        if rest == 0 {
            visit(prefix);
        } else if accept(sub, rest) {
            walk(rest, prefix, accept, visit);
        }
        prefix.pop();
        sub = (sub - 1) & remaining;
    }
}

/// Every ordered set partition of `{0, …, m−1}` as lists of bit masks.
pub fn ordered_partitions(m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mask = if m == 0 { 0 } else { (1u32 << m) - 1 };
    walk_ordered_partitions(mask, &mut |_, _| true, &mut |p| out.push(p.to_vec()));
    out
}
