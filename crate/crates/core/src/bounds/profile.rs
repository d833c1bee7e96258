use super::grouping::{feasibility, Grouping, OrderingCertificate};
use crate::error::{Error, Result};
use crate::measures::{concurrence_pure, negativity_pure_schmidt, pair_measures};
use crate::qcore::{PureState, SubsystemSet};

/// Which bipartite measure a bound's left-hand side uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutMeasure {
    Concurrence,
    Negativity,
}

/// Pairwise two-qubit concurrence and assistance values of a pure state.
///
/// On qubit pairs CREN and CRENOA coincide with these, so the negativity
/// bounds read the same tables.
#[derive(Debug, Clone)]
pub struct StateProfile {
    n: usize,
    conc: Vec<f64>,
    coa: Vec<f64>,
}

impl StateProfile {
    pub fn new(psi: &PureState) -> Result<Self> {
        let n = psi.num_qubits();
        let mut conc = vec![0.0; n * n];
        let mut coa = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let (c, ca) = pair_measures(psi, i, j)?;
                conc[i * n + j] = c;
                conc[j * n + i] = c;
                coa[i * n + j] = ca;
                coa[j * n + i] = ca;
            }
        }
        Ok(Self { n, conc, coa })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// `C(ρ_ij)`.
    pub fn concurrence(&self, i: usize, j: usize) -> f64 {
        self.conc[i * self.n + j]
    }

    /// `C_a(ρ_ij)`.
    pub fn assisted(&self, i: usize, j: usize) -> f64 {
        self.coa[i * self.n + j]
    }

    /// `Σ_{j∈group} C_a²(ρ_{focus j})`.
    pub fn assisted_sq(&self, focus: usize, group: &SubsystemSet) -> f64 {
        group.indices().iter().map(|&j| self.assisted(focus, j).powi(2)).sum()
    }

    /// `Σ_{j∈group} C²(ρ_{focus j})`.
    pub fn concurrence_sq(&self, focus: usize, group: &SubsystemSet) -> f64 {
        group.indices().iter().map(|&j| self.concurrence(focus, j).powi(2)).sum()
    }

    /// `Σ_{j≠focus} C²(ρ_{focus j})`.
    pub fn concurrence_sq_total(&self, focus: usize) -> f64 {
        (0..self.n)
            .filter(|&j| j != focus)
            .map(|j| self.concurrence(focus, j).powi(2))
            .sum()
    }

    /// `Σ_{j≠focus} C_a²(ρ_{focus j})`.
    pub fn assisted_sq_total(&self, focus: usize) -> f64 {
        (0..self.n)
            .filter(|&j| j != focus)
            .map(|j| self.assisted(focus, j).powi(2))
            .sum()
    }

    /// Builds the certificate of `grouping` for `focus`. The grouping has to
    /// cover every other qubit exactly; feasibility is recorded, not enforced.
    pub fn certify(
        &self,
        focus: usize,
        grouping: &Grouping,
        with_plain: bool,
    ) -> Result<OrderingCertificate> {
        grouping.check_covers(&free_qubits(self.n, focus))?;
        let assisted: Vec<f64> = grouping
            .groups()
            .iter()
            .map(|g| self.assisted_sq(focus, g))
            .collect();
        let plain = with_plain.then(|| {
            feasibility(
                &grouping
                    .groups()
                    .iter()
                    .map(|g| self.concurrence_sq(focus, g))
                    .collect::<Vec<_>>(),
            )
        });
        Ok(OrderingCertificate {
            focus,
            grouping: grouping.clone(),
            assisted: feasibility(&assisted),
            plain,
        })
    }
}

/// Every qubit except `focus`.
pub fn free_qubits(n: usize, focus: usize) -> SubsystemSet {
    SubsystemSet::single(focus).complement(n)
}

/// Concurrence or negativity of a pure state across `part | rest`.
pub fn cut_value(psi: &PureState, part: &SubsystemSet, measure: CutMeasure) -> Result<f64> {
    Ok(match measure {
        CutMeasure::Concurrence => concurrence_pure(psi, part)?.value,
        CutMeasure::Negativity => negativity_pure_schmidt(psi, part)?.value,
    })
}

pub(crate) fn require_feasible(cert: &OrderingCertificate) -> Result<()> {
    if cert.feasible() {
        return Ok(());
    }
    let mut why = format!(
        "grouping {} for qubit {} fails dominance of squared assistance values {:?}",
        cert.grouping, cert.focus, cert.assisted.squared_values
    );
    if let Some(p) = cert.plain.as_ref().filter(|p| !p.feasible) {
        why = format!(
            "grouping {} for qubit {} fails dominance of squared concurrences {:?}",
            cert.grouping, cert.focus, p.squared_values
        );
    }
    Err(Error::InfeasibleGrouping(why))
}
