//! Batch evaluation: every selected inequality over an α grid, on one state
//! or on a seeded sample of random states.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{AlphaGrid, BoundReport, BoundStatus, Foci, StateAnalysis, TheoremId};
use crate::error::{Error, Result};
use crate::qcore::{haar_random_pure, sample_seed, PureState};

/// Largest register a sweep accepts for the corollaries.
pub const SWEEP_MAX_QUBITS_COROLLARY: usize = 8;
/// Largest register a sweep accepts otherwise.
pub const SWEEP_MAX_QUBITS: usize = 10;

fn check_applicable(theorems: &[TheoremId], n: usize) -> Result<()> {
    for t in theorems {
        if n < t.min_qubits() {
            return Err(Error::Precondition(format!(
                "{t} needs at least {} qubits, state has {n}",
                t.min_qubits()
            )));
        }
    }
    Ok(())
}

fn evaluate_all(
    an: &StateAnalysis<'_>,
    theorems: &[TheoremId],
    alphas: &[f64],
    foci: &Foci,
) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for &t in theorems {
        if t.is_fixed_alpha() {
            out.push(an.evaluate(t, foci, 2.0)?);
            continue;
        }
        for &a in alphas {
            out.push(an.evaluate(t, foci, a)?);
        }
    }
    Ok(out)
}

/// One report per (theorem, α), in theorem-then-α order. The α = 2
/// baselines produce a single row each.
pub fn verify(psi: &PureState, theorems: &[TheoremId], grid: &AlphaGrid, foci: &Foci) -> Result<Vec<BoundReport>> {
    check_applicable(theorems, psi.num_qubits())?;
    let an = StateAnalysis::new(psi)?;
    evaluate_all(&an, theorems, &grid.values(), foci)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub qubits: usize,
    pub samples: usize,
    pub seed: u64,
    pub theorems: Vec<TheoremId>,
    pub grid: AlphaGrid,
    pub foci: Foci,
}

/// Aggregate for one theorem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub theorem: TheoremId,
    pub evaluated: usize,
    pub satisfied: usize,
    pub violations: usize,
    pub not_applicable: usize,
    /// Over applicable rows; NaN when there are none.
    pub min_slack: f64,
    pub mean_slack: f64,
}

/// A violating evaluation, kept so it can be reproduced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub sample: usize,
    pub seed: u64,
    pub theorem: TheoremId,
    pub alpha: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
    /// First violations in sample order, at most [`MAX_VIOLATION_RECORDS`].
    pub violations: Vec<ViolationRecord>,
}

pub const MAX_VIOLATION_RECORDS: usize = 20;

impl SweepSummary {
    pub fn total_violations(&self) -> usize {
        self.rows.iter().map(|r| r.violations).sum()
    }
}

/// Evaluates the selected inequalities on `samples` Haar-random states with
/// optimizer-chosen groupings. Sample `i` uses seed `sample_seed(seed, i)`;
/// results are aggregated in sample order, so the summary does not depend
/// on thread scheduling.
pub fn sweep(config: &SweepConfig) -> Result<SweepSummary> {
    if config.samples == 0 {
        return Err(Error::InvalidInput("samples must be at least 1".into()));
    }
    let cap = if config.theorems.iter().any(|t| t.is_corollary()) {
        SWEEP_MAX_QUBITS_COROLLARY
    } else {
        SWEEP_MAX_QUBITS
    };
    if config.qubits > cap {
        return Err(Error::SizeCap(format!(
            "sweep over {} qubits exceeds the cap of {cap} for the selected theorems",
            config.qubits
        )));
    }
    check_applicable(&config.theorems, config.qubits)?;
    for t in &config.theorems {
        config.foci.check(*t, config.qubits)?;
    }
    let alphas = config.grid.values();

    let per_sample: Vec<(u64, Vec<BoundReport>)> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let seed = sample_seed(config.seed, i as u64);
            let psi = haar_random_pure(config.qubits, seed)?;
            let an = StateAnalysis::new(&psi)?;
            Ok((seed, evaluate_all(&an, &config.theorems, &alphas, &config.foci)?))
        })
        .collect::<Result<_>>()?;

    let mut rows: Vec<SweepRow> = config
        .theorems
        .iter()
        .map(|&theorem| SweepRow {
            theorem,
            evaluated: 0,
            satisfied: 0,
            violations: 0,
            not_applicable: 0,
            min_slack: f64::NAN,
            mean_slack: f64::NAN,
        })
        .collect();
    let mut sums = vec![0.0; rows.len()];
    let mut violations = Vec::new();
    for (sample, (seed, reports)) in per_sample.iter().enumerate() {
        for r in reports {
            let k = config
                .theorems
                .iter()
                .position(|&t| t == r.theorem)
                .expect("report for a selected theorem");
            let row = &mut rows[k];
            row.evaluated += 1;
            match r.status {
                BoundStatus::NotApplicable => {
                    row.not_applicable += 1;
                    continue;
                }
                BoundStatus::Satisfied => row.satisfied += 1,
                BoundStatus::Violated => {
                    row.violations += 1;
                    if violations.len() < MAX_VIOLATION_RECORDS {
                        violations.push(ViolationRecord {
                            sample,
                            seed: *seed,
                            theorem: r.theorem,
                            alpha: r.alpha,
                            lhs: r.lhs,
                            rhs: r.rhs,
                            slack: r.slack,
                        });
                    }
                }
            }
            sums[k] += r.slack;
            row.min_slack = if row.min_slack.is_nan() { r.slack } else { row.min_slack.min(r.slack) };
        }
    }
    for (row, sum) in rows.iter_mut().zip(sums) {
        let applicable = row.satisfied + row.violations;
        if applicable > 0 {
            row.mean_slack = sum / applicable as f64;
        }
    }
    Ok(SweepSummary { config: config.clone(), rows, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn verify_row_count() {
        let psi = gallery::gsd3(gallery::gsd3_default(), 0.0).unwrap();
        let t = TheoremId::parse_list("thm1,ckw").unwrap();
        let rows = verify(&psi, &t, &AlphaGrid::default(), &Foci::default()).unwrap();
        assert_eq!(rows.len(), 41);
        assert!(rows.iter().all(|r| r.satisfied()));
    }

    #[test]
    fn verify_rejects_small_states() {
        let psi = gallery::ghz(3).unwrap();
        let err = verify(&psi, &[TheoremId::Cor2Upper], &AlphaGrid::default(), &Foci::default());
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn sweep_is_deterministic() {
        let cfg = SweepConfig {
            qubits: 4,
            samples: 8,
            seed: 42,
            theorems: TheoremId::parse_list("thm1,thm2,thm3,thm4").unwrap(),
            grid: "0.5:2:0.5".parse().unwrap(),
            foci: Foci::default(),
        };
        let a = sweep(&cfg).unwrap();
        let b = sweep(&cfg).unwrap();
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.total_violations(), 0);
        assert_eq!(a.rows[0].evaluated, 32);
    }

    #[test]
    fn sweep_caps() {
        let mut cfg = SweepConfig {
            qubits: 9,
            samples: 1,
            seed: 0,
            theorems: vec![TheoremId::Cor2Upper],
            grid: AlphaGrid::default(),
            foci: Foci::default(),
        };
        assert!(matches!(sweep(&cfg), Err(Error::SizeCap(_))));
        cfg.theorems = vec![TheoremId::Thm1];
        cfg.qubits = 11;
        assert!(matches!(sweep(&cfg), Err(Error::SizeCap(_))));
        cfg.samples = 0;
        assert!(sweep(&cfg).is_err());
    }
}
