//! Search over ordered groupings for the tightest admissible bound.
//!
//! Feasible groupings depend only on the state, so they are enumerated once
//! per (focus, check) and reused for every α. Candidates with identical
//! value sequences are collapsed since they give identical bounds.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use super::grouping::{walk_ordered_partitions, Grouping, OrderingCertificate};
use super::profile::StateProfile;
use super::report::{BoundReport, TheoremId};
use super::scalar::{check_alpha, h_unchecked, monogamy_power_sum, weighted_power_sum, SCALAR_TOLERANCE};
use super::theorems::{
    eval_ckw, eval_coa_dual, eval_cor1, eval_cor2, eval_jin, eval_pair_lower, eval_pair_upper,
    eval_polygamy, Cor1Variant, Foci,
};
use crate::error::{Error, Result};
use crate::qcore::{PureState, SubsystemSet};

/// Largest number of non-focus qubits the exhaustive search accepts.
pub const MAX_FREE: usize = 9;

/// Which dominance checks a grouping has to pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeasibilityMode {
    /// Squared assistance values only.
    Assisted,
    /// Squared assistance values and squared concurrences.
    Both,
    /// Squared assistance values, singleton groups only.
    Singletons,
}

#[derive(Debug, Clone)]
struct Candidate {
    groups: Vec<u32>,
    /// Group values (square roots of the summed squares), assisted.
    assisted: Vec<f64>,
    /// Same for concurrences.
    plain: Vec<f64>,
}

type CandidateCache = RefCell<HashMap<(usize, FeasibilityMode), Rc<Vec<Candidate>>>>;

/// Pairwise tables of one state plus a cache of its feasible groupings.
///
/// Not `Sync`; build one per state and thread.
pub struct StateAnalysis<'a> {
    psi: &'a PureState,
    profile: StateProfile,
    cache: CandidateCache,
}

impl<'a> StateAnalysis<'a> {
    pub fn new(psi: &'a PureState) -> Result<Self> {
        if psi.num_qubits() - 1 > MAX_FREE {
            return Err(Error::SizeCap(format!(
                "grouping search supports at most {} qubits, state has {}",
                MAX_FREE + 1,
                psi.num_qubits()
            )));
        }
        Ok(Self {
            psi,
            profile: StateProfile::new(psi)?,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn state(&self) -> &PureState {
        self.psi
    }

    pub fn profile(&self) -> &StateProfile {
        &self.profile
    }

    /// Number of distinct feasible candidates for `focus` under `mode`.
    pub fn feasible_count(&self, focus: usize, mode: FeasibilityMode) -> usize {
        self.candidates(focus, mode).len()
    }

    fn candidates(&self, focus: usize, mode: FeasibilityMode) -> Rc<Vec<Candidate>> {
        if let Some(c) = self.cache.borrow().get(&(focus, mode)) {
            return Rc::clone(c);
        }
        let c = Rc::new(self.enumerate(focus, mode));
        self.cache.borrow_mut().insert((focus, mode), Rc::clone(&c));
        c
    }

    fn enumerate(&self, focus: usize, mode: FeasibilityMode) -> Vec<Candidate> {
        let n = self.profile.num_qubits();
        let free: u32 = ((1u32 << n) - 1) & !(1u32 << focus);
        let size = 1usize << n;
        let mut a_sum = vec![0.0; size];
        let mut p_sum = vec![0.0; size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let prev = mask & (mask - 1);
            if low == focus {
                continue;
            }
            a_sum[mask] = a_sum[prev] + self.profile.assisted(focus, low).powi(2);
            p_sum[mask] = p_sum[prev] + self.profile.concurrence(focus, low).powi(2);
        }

        let mut accept = |g: u32, rest: u32| -> bool {
            let (g, rest) = (g as usize, rest as usize);
            let assisted_ok = a_sum[g] >= a_sum[rest] - SCALAR_TOLERANCE;
            match mode {
                FeasibilityMode::Assisted => assisted_ok,
                FeasibilityMode::Singletons => assisted_ok && g.count_ones() == 1,
                FeasibilityMode::Both => assisted_ok && p_sum[g] >= p_sum[rest] - SCALAR_TOLERANCE,
            }
        };
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut out = Vec::new();
        let mut visit = |groups: &[u32]| {
            if mode == FeasibilityMode::Singletons && groups.iter().any(|g| g.count_ones() != 1) {
                return;
            }
            let mut key: Vec<u64> = groups.iter().map(|&g| a_sum[g as usize].to_bits()).collect();
            if mode == FeasibilityMode::Both {
                key.extend(groups.iter().map(|&g| p_sum[g as usize].to_bits()));
            }
            if seen.insert(key) {
                out.push(Candidate {
                    groups: groups.to_vec(),
                    assisted: groups.iter().map(|&g| a_sum[g as usize].max(0.0).sqrt()).collect(),
                    plain: groups.iter().map(|&g| p_sum[g as usize].max(0.0).sqrt()).collect(),
                });
            }
        };
        walk_ordered_partitions(free, &mut accept, &mut visit);
        out
    }

    fn certificate(&self, focus: usize, cand: &Candidate, mode: FeasibilityMode) -> Result<OrderingCertificate> {
        let groups = cand
            .groups
            .iter()
            .map(|&g| SubsystemSet::new((0..32).filter(|q| g & (1 << q) != 0)))
            .collect::<Result<Vec<_>>>()?;
        self.profile
            .certify(focus, &Grouping::new(groups)?, mode == FeasibilityMode::Both)
    }

    /// Candidate minimizing `Σ w^{i−1} x_i^α` over assisted values.
    fn argmin_weighted(&self, focus: usize, mode: FeasibilityMode, weight: f64, alpha: f64) -> Option<Candidate> {
        self.candidates(focus, mode)
            .iter()
            .map(|c| (weighted_power_sum(&c.assisted, weight, alpha), c))
            .min_by(|x, y| x.0.total_cmp(&y.0))
            .map(|(_, c)| c.clone())
    }

    /// Candidate maximizing the `L` term over concurrence values.
    fn argmax_l(&self, focus: usize, alpha: f64) -> Candidate {
        let h = h_unchecked(alpha);
        self.candidates(focus, FeasibilityMode::Both)
            .iter()
            .map(|c| (monogamy_power_sum(&c.plain, h, alpha), c))
            .max_by(|x, y| x.0.total_cmp(&y.0))
            .map(|(_, c)| c.clone())
            .expect("the single-group candidate is always feasible")
    }

    fn best_j(&self, focus: usize, mode: FeasibilityMode, alpha: f64) -> Result<OrderingCertificate> {
        let cand = self
            .argmin_weighted(focus, mode, h_unchecked(alpha), alpha)
            .expect("the single-group candidate is always feasible");
        self.certificate(focus, &cand, mode)
    }

    /// Pair of certificates maximizing `max{L_a − J_b, L_b − J_a}`. The two
    /// branches separate, so each is maximized independently.
    fn best_l_pair(&self, a: usize, b: usize, alpha: f64) -> Result<(OrderingCertificate, OrderingCertificate)> {
        let h = h_unchecked(alpha);
        let mode = FeasibilityMode::Both;
        let la = self.argmax_l(a, alpha);
        let lb = self.argmax_l(b, alpha);
        let ja = self.argmin_weighted(a, mode, h, alpha).expect("k = 1 feasible");
        let jb = self.argmin_weighted(b, mode, h, alpha).expect("k = 1 feasible");
        let branch_a = monogamy_power_sum(&la.plain, h, alpha) - weighted_power_sum(&jb.assisted, h, alpha);
        let branch_b = monogamy_power_sum(&lb.plain, h, alpha) - weighted_power_sum(&ja.assisted, h, alpha);
        let (ca, cb) = if branch_a >= branch_b { (la, jb) } else { (ja, lb) };
        Ok((self.certificate(a, &ca, mode)?, self.certificate(b, &cb, mode)?))
    }

    /// Evaluates `theorem` with the grouping(s) that make it tightest.
    pub fn evaluate(&self, theorem: TheoremId, foci: &Foci, alpha: f64) -> Result<BoundReport> {
        check_alpha(alpha)?;
        foci.check(theorem, self.psi.num_qubits())?;
        let psi = self.psi;
        let assisted = FeasibilityMode::Assisted;
        match theorem {
            TheoremId::Ckw => eval_ckw(psi, &self.profile, foci.a),
            TheoremId::CoaDual => eval_coa_dual(psi, &self.profile, foci.a),
            TheoremId::Thm1 | TheoremId::Thm5 => {
                eval_polygamy(theorem, psi, &self.best_j(foci.a, assisted, alpha)?, alpha)
            }
            TheoremId::Jin => {
                match self.argmin_weighted(foci.a, FeasibilityMode::Singletons, alpha / 2.0, alpha) {
                    Some(c) => eval_jin(psi, &self.certificate(foci.a, &c, FeasibilityMode::Singletons)?, alpha),
                    None => {
                        let lhs = super::scalar::pow_alpha(
                            super::profile::cut_value(
                                psi,
                                &SubsystemSet::single(foci.a),
                                super::profile::CutMeasure::Concurrence,
                            )?,
                            alpha,
                        );
                        Ok(BoundReport::not_applicable(
                            theorem,
                            alpha,
                            lhs,
                            "no singleton ordering passes the dominance check".into(),
                        ))
                    }
                }
            }
            TheoremId::Thm2 | TheoremId::Thm6 => {
                let (ca, cb) = self.best_l_pair(foci.a, foci.b, alpha)?;
                eval_pair_lower(theorem, psi, &self.profile, &ca, &cb, alpha)
            }
            TheoremId::Thm3 | TheoremId::Thm7 => {
                let ca = self.best_j(foci.a, assisted, alpha)?;
                let cb = self.best_j(foci.b, assisted, alpha)?;
                eval_pair_lower(theorem, psi, &self.profile, &ca, &cb, alpha)
            }
            TheoremId::Thm4 | TheoremId::Thm8 => {
                let ca = self.best_j(foci.a, assisted, alpha)?;
                let cb = self.best_j(foci.b, assisted, alpha)?;
                eval_pair_upper(theorem, psi, &ca, &cb, alpha)
            }
            TheoremId::Cor1Thm2 => {
                let (ca, cb) = self.best_l_pair(foci.a, foci.b, alpha)?;
                let cc = self.best_j(foci.c1, assisted, alpha)?;
                eval_cor1(Cor1Variant::Thm2Based, psi, &self.profile, [&ca, &cb, &cc], alpha)
            }
            TheoremId::Cor1Thm3 | TheoremId::Cor2Lower | TheoremId::Cor2Upper => {
                let ca = self.best_j(foci.a, assisted, alpha)?;
                let cb = self.best_j(foci.b, assisted, alpha)?;
                let cc = self.best_j(foci.c1, assisted, alpha)?;
                if theorem == TheoremId::Cor1Thm3 {
                    return eval_cor1(Cor1Variant::Thm3Based, psi, &self.profile, [&ca, &cb, &cc], alpha);
                }
                let (lower, upper) = eval_cor2(psi, &self.profile, [&ca, &cb, &cc], alpha)?;
                Ok(if theorem == TheoremId::Cor2Lower { lower } else { upper })
            }
        }
    }
}

/// One-shot form of [`StateAnalysis::evaluate`].
pub fn optimize_grouping(psi: &PureState, foci: &Foci, alpha: f64, theorem: TheoremId) -> Result<BoundReport> {
    StateAnalysis::new(psi)?.evaluate(theorem, foci, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::C64;

    fn state(n: usize, entries: &[(usize, f64)]) -> PureState {
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        for &(i, a) in entries {
            amps[i] = C64::new(a, 0.0);
        }
        PureState::from_unnormalized(amps).unwrap()
    }

    #[test]
    fn equal_triples_merge_groups() {
        // W-type state on 4 qubits: the focus sees three equal assistance values.
        let psi = state(4, &[(8, 1.0), (4, 1.0), (2, 1.0), (1, 1.0)]);
        let an = StateAnalysis::new(&psi).unwrap();
        assert_eq!(an.feasible_count(0, FeasibilityMode::Singletons), 0);
        let r = an.evaluate(TheoremId::Thm1, &Foci::default(), 1.0).unwrap();
        assert!(r.satisfied());
        assert!(r.orderings[0].grouping.len() <= 2);
        let jin = an.evaluate(TheoremId::Jin, &Foci::default(), 1.0).unwrap();
        assert!(!jin.applicable());
    }

    #[test]
    fn single_group_is_always_a_candidate() {
        let psi = state(5, &[(0, 1.0)]);
        let an = StateAnalysis::new(&psi).unwrap();
        for f in 0..5 {
            assert!(an.feasible_count(f, FeasibilityMode::Both) >= 1);
        }
    }

    #[test]
    fn size_cap() {
        let psi = state(11, &[(0, 1.0)]);
        assert!(matches!(StateAnalysis::new(&psi), Err(Error::SizeCap(_))));
    }
}
