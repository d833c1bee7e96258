//! Evaluators for each inequality on a pure state with caller-chosen
//! groupings.
//!
//! Notation used below, for a focus qubit `f` with grouping `M_1 … M_k`:
//!
//! * `J_f = Σ_i h^{i−1} C_a^α(ρ_{f M_i})` with `C_a²(ρ_{f M_i}) = Σ_{j∈M_i} C_a²(ρ_{fj})`,
//! * `L_f = h Σ_{i<k} C^α(ρ_{f M_i}) + C^α(ρ_{f M_k})`, same grouping, concurrences,
//! * `S_f = Σ_{j≠f} C²(ρ_{fj})`.
//!
//! Every grouping must pass the dominance check on squared assistance
//! values. Groupings feeding an `L_f` term must additionally pass it on
//! squared concurrences, since that term lower-bounds `C^α(f|rest)` through
//! `(1+t)^x ≥ 1 + (2^x−1) t^x`, which needs `t ≥ 1`.

use serde::{Deserialize, Serialize};

use super::grouping::{Grouping, OrderingCertificate};
use super::profile::{cut_value, require_feasible, CutMeasure, StateProfile};
use super::report::{BoundReport, TheoremId};
use super::scalar::{
    check_alpha, h_unchecked, monogamy_power_sum, pow_alpha, weighted_power_sum, SLACK_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::qcore::{schmidt_rank, PureState, SubsystemSet};

/// The privileged qubits: `A`, `B` and `C_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Foci {
    pub a: usize,
    pub b: usize,
    pub c1: usize,
}

impl Default for Foci {
    fn default() -> Self {
        Self { a: 0, b: 1, c1: 2 }
    }
}

impl Foci {
    pub fn new(a: usize, b: usize, c1: usize) -> Self {
        Self { a, b, c1 }
    }

    /// Checks the foci needed by `theorem` are distinct and in range, and
    /// that the register is large enough.
    pub fn check(&self, theorem: TheoremId, n: usize) -> Result<()> {
        if n < theorem.min_qubits() {
            return Err(Error::Precondition(format!(
                "{theorem} needs at least {} qubits, state has {n}",
                theorem.min_qubits()
            )));
        }
        let used: &[usize] = match theorem.min_qubits() {
            2 => &[self.a],
            4 => &[self.a, self.b],
            _ => &[self.a, self.b, self.c1],
        };
        check_distinct(used, n)
    }

    pub fn ab(&self) -> SubsystemSet {
        SubsystemSet::new([self.a, self.b]).expect("distinct foci")
    }

    pub fn abc1(&self) -> SubsystemSet {
        SubsystemSet::new([self.a, self.b, self.c1]).expect("distinct foci")
    }
}

fn check_distinct(qubits: &[usize], n: usize) -> Result<()> {
    for (i, &q) in qubits.iter().enumerate() {
        if q >= n {
            return Err(Error::InvalidSubsystem(format!(
                "focus qubit {q} out of range for {n} qubits"
            )));
        }
        if qubits[..i].contains(&q) {
            return Err(Error::InvalidSubsystem(format!("focus qubit {q} repeated")));
        }
    }
    Ok(())
}

/// Which lower bound on `C^α(ρ_{AB|rest})` a cor1 evaluation builds on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cor1Variant {
    /// The `L`-based max, as in thm2.
    Thm2Based,
    /// The `S`-based max, as in thm3.
    Thm3Based,
}

/// Groupings for the three foci of the corollaries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorGroupings {
    pub a: Grouping,
    pub b: Grouping,
    pub c1: Grouping,
}

fn group_values(squared: &[f64]) -> Vec<f64> {
    squared.iter().map(|v| v.max(0.0).sqrt()).collect()
}

pub(crate) fn j_value(cert: &OrderingCertificate, h: f64, alpha: f64) -> f64 {
    weighted_power_sum(&group_values(&cert.assisted.squared_values), h, alpha)
}

pub(crate) fn l_value(cert: &OrderingCertificate, h: f64, alpha: f64) -> f64 {
    let plain = cert
        .plain
        .as_ref()
        .expect("L-term needs a certificate with concurrence values");
    monogamy_power_sum(&group_values(&plain.squared_values), h, alpha)
}

pub(crate) fn s_power(profile: &StateProfile, focus: usize, alpha: f64) -> f64 {
    pow_alpha(profile.concurrence_sq_total(focus).sqrt(), alpha)
}

fn cut_measure_of(theorem: TheoremId) -> CutMeasure {
    match theorem {
        TheoremId::Thm5 | TheoremId::Thm6 | TheoremId::Thm7 | TheoremId::Thm8 => CutMeasure::Negativity,
        _ => CutMeasure::Concurrence,
    }
}

// ---------------------------------------------------------------------------
// Shared evaluation on certified groupings (also used by the optimizer).

pub(crate) fn eval_polygamy(
    theorem: TheoremId,
    psi: &PureState,
    cert: &OrderingCertificate,
    alpha: f64,
) -> Result<BoundReport> {
    let lhs = pow_alpha(
        cut_value(psi, &SubsystemSet::single(cert.focus), cut_measure_of(theorem))?,
        alpha,
    );
    let rhs = j_value(cert, h_unchecked(alpha), alpha);
    Ok(BoundReport::upper(theorem, alpha, lhs, rhs, vec![cert.clone()]))
}

pub(crate) fn eval_jin(psi: &PureState, cert: &OrderingCertificate, alpha: f64) -> Result<BoundReport> {
    let lhs = pow_alpha(
        cut_value(psi, &SubsystemSet::single(cert.focus), CutMeasure::Concurrence)?,
        alpha,
    );
    let values = group_values(&cert.assisted.squared_values);
    let rhs = weighted_power_sum(&values, alpha / 2.0, alpha);
    Ok(BoundReport::upper(TheoremId::Jin, alpha, lhs, rhs, vec![cert.clone()]))
}

/// Right-hand side of the two-branch lower bounds on `C^α(ρ_{AB|rest})`.
pub(crate) fn pair_lower_rhs(
    s_based: bool,
    profile: &StateProfile,
    ca: &OrderingCertificate,
    cb: &OrderingCertificate,
    alpha: f64,
) -> f64 {
    let h = h_unchecked(alpha);
    let (head_a, head_b) = if s_based {
        (s_power(profile, ca.focus, alpha), s_power(profile, cb.focus, alpha))
    } else {
        (l_value(ca, h, alpha), l_value(cb, h, alpha))
    };
    let branch_a = head_a - j_value(cb, h, alpha);
    let branch_b = head_b - j_value(ca, h, alpha);
    branch_a.max(branch_b)
}

pub(crate) fn eval_pair_lower(
    theorem: TheoremId,
    psi: &PureState,
    profile: &StateProfile,
    ca: &OrderingCertificate,
    cb: &OrderingCertificate,
    alpha: f64,
) -> Result<BoundReport> {
    let s_based = matches!(theorem, TheoremId::Thm3 | TheoremId::Thm7);
    let ab = SubsystemSet::new([ca.focus, cb.focus])?;
    let lhs = pow_alpha(cut_value(psi, &ab, cut_measure_of(theorem))?, alpha);
    let rhs = pair_lower_rhs(s_based, profile, ca, cb, alpha);
    Ok(BoundReport::lower(
        theorem,
        alpha,
        lhs,
        rhs,
        vec![ca.clone(), cb.clone()],
    ))
}

pub(crate) fn eval_pair_upper(
    theorem: TheoremId,
    psi: &PureState,
    ca: &OrderingCertificate,
    cb: &OrderingCertificate,
    alpha: f64,
) -> Result<BoundReport> {
    let ab = SubsystemSet::new([ca.focus, cb.focus])?;
    let h = h_unchecked(alpha);
    let j_sum = j_value(ca, h, alpha) + j_value(cb, h, alpha);
    let (lhs, rhs) = match theorem {
        TheoremId::Thm8 => {
            let r = schmidt_rank(psi, &ab)? as f64;
            let factor = pow_alpha(r * (r - 1.0) / 2.0, alpha / 2.0);
            (
                pow_alpha(cut_value(psi, &ab, CutMeasure::Negativity)?, alpha),
                factor * j_sum,
            )
        }
        _ => (pow_alpha(cut_value(psi, &ab, CutMeasure::Concurrence)?, alpha), j_sum),
    };
    Ok(BoundReport::upper(theorem, alpha, lhs, rhs, vec![ca.clone(), cb.clone()]))
}

pub(crate) fn eval_cor1(
    variant: Cor1Variant,
    psi: &PureState,
    profile: &StateProfile,
    certs: [&OrderingCertificate; 3],
    alpha: f64,
) -> Result<BoundReport> {
    let [ca, cb, cc] = certs;
    let theorem = match variant {
        Cor1Variant::Thm2Based => TheoremId::Cor1Thm2,
        Cor1Variant::Thm3Based => TheoremId::Cor1Thm3,
    };
    let abc1 = SubsystemSet::new([ca.focus, cb.focus, cc.focus])?;
    let lhs = pow_alpha(cut_value(psi, &abc1, CutMeasure::Concurrence)?, alpha);
    let h = h_unchecked(alpha);
    let rhs = pair_lower_rhs(variant == Cor1Variant::Thm3Based, profile, ca, cb, alpha)
        - j_value(cc, h, alpha);
    Ok(BoundReport::lower(
        theorem,
        alpha,
        lhs,
        rhs,
        vec![ca.clone(), cb.clone(), cc.clone()],
    ))
}

pub(crate) fn eval_cor2(
    psi: &PureState,
    profile: &StateProfile,
    certs: [&OrderingCertificate; 3],
    alpha: f64,
) -> Result<(BoundReport, BoundReport)> {
    let [ca, cb, cc] = certs;
    let ab = SubsystemSet::new([ca.focus, cb.focus])?;
    let abc1 = SubsystemSet::new([ca.focus, cb.focus, cc.focus])?;
    let lhs = pow_alpha(cut_value(psi, &abc1, CutMeasure::Concurrence)?, alpha);
    let h = h_unchecked(alpha);
    let (ja, jb, jc) = (j_value(ca, h, alpha), j_value(cb, h, alpha), j_value(cc, h, alpha));

    let c_ab = cut_value(psi, &ab, CutMeasure::Concurrence)?;
    let c_c1 = cut_value(psi, &SubsystemSet::single(cc.focus), CutMeasure::Concurrence)?;
    let lower = if c_ab <= c_c1 + SLACK_TOLERANCE {
        let rhs = s_power(profile, cc.focus, alpha) - ja - jb;
        BoundReport::lower(
            TheoremId::Cor2Lower,
            alpha,
            lhs,
            rhs,
            vec![ca.clone(), cb.clone()],
        )
    } else {
        BoundReport::not_applicable(
            TheoremId::Cor2Lower,
            alpha,
            lhs,
            format!("condition C(AB|rest) ≤ C(C1|rest) fails: {c_ab:.6} > {c_c1:.6}"),
        )
    };
    let upper = BoundReport::upper(
        TheoremId::Cor2Upper,
        alpha,
        lhs,
        ja + jb + jc,
        vec![ca.clone(), cb.clone(), cc.clone()],
    );
    Ok((lower, upper))
}

pub(crate) fn eval_ckw(psi: &PureState, profile: &StateProfile, focus: usize) -> Result<BoundReport> {
    let pairs = profile.concurrence_sq_total(focus);
    let cut = cut_value(psi, &SubsystemSet::single(focus), CutMeasure::Concurrence)?.powi(2);
    Ok(BoundReport::upper(TheoremId::Ckw, 2.0, pairs, cut, vec![]))
}

pub(crate) fn eval_coa_dual(psi: &PureState, profile: &StateProfile, focus: usize) -> Result<BoundReport> {
    let cut = cut_value(psi, &SubsystemSet::single(focus), CutMeasure::Concurrence)?.powi(2);
    Ok(BoundReport::upper(
        TheoremId::CoaDual,
        2.0,
        cut,
        profile.assisted_sq_total(focus),
        vec![],
    ))
}

// ---------------------------------------------------------------------------
// Public entry points with explicit groupings.

fn prepare(psi: &PureState, theorem: TheoremId, foci: &Foci, alpha: f64) -> Result<StateProfile> {
    check_alpha(alpha)?;
    foci.check(theorem, psi.num_qubits())?;
    StateProfile::new(psi)
}

fn certified(
    profile: &StateProfile,
    focus: usize,
    grouping: &Grouping,
    with_plain: bool,
) -> Result<OrderingCertificate> {
    let cert = profile.certify(focus, grouping, with_plain)?;
    require_feasible(&cert)?;
    Ok(cert)
}

fn single_focus(psi: &PureState, theorem: TheoremId, focus: usize, alpha: f64) -> Result<StateProfile> {
    prepare(psi, theorem, &Foci { a: focus, ..Foci::default() }, alpha)
}

/// Tightened polygamy bound `C^α(A|rest) ≤ Σ_i h^{i−1} C_a^α(ρ_{A M_i})`.
pub fn thm1_upper(psi: &PureState, focus: usize, grouping: &Grouping, alpha: f64) -> Result<BoundReport> {
    let profile = single_focus(psi, TheoremId::Thm1, focus, alpha)?;
    let cert = certified(&profile, focus, grouping, false)?;
    eval_polygamy(TheoremId::Thm1, psi, &cert, alpha)
}

/// Negativity counterpart of [`thm1_upper`] with CRENOA weights.
pub fn thm5_upper(psi: &PureState, focus: usize, grouping: &Grouping, alpha: f64) -> Result<BoundReport> {
    let profile = single_focus(psi, TheoremId::Thm5, focus, alpha)?;
    let cert = certified(&profile, focus, grouping, false)?;
    eval_polygamy(TheoremId::Thm5, psi, &cert, alpha)
}

/// Earlier dual bound with weights `(α/2)^{i−1}` on singleton groups in
/// the order given.
pub fn jin_upper(psi: &PureState, focus: usize, order: &[usize], alpha: f64) -> Result<BoundReport> {
    let profile = single_focus(psi, TheoremId::Jin, focus, alpha)?;
    let cert = certified(&profile, focus, &Grouping::singletons(order)?, false)?;
    eval_jin(psi, &cert, alpha)
}

/// `Σ_j C²(ρ_{A B_j}) ≤ C²(A|rest)`.
pub fn ckw_check(psi: &PureState, focus: usize) -> Result<BoundReport> {
    let profile = single_focus(psi, TheoremId::Ckw, focus, 2.0)?;
    eval_ckw(psi, &profile, focus)
}

/// `C²(A|rest) ≤ Σ_j C_a²(ρ_{A B_j})`.
pub fn coa_dual_check(psi: &PureState, focus: usize) -> Result<BoundReport> {
    let profile = single_focus(psi, TheoremId::CoaDual, focus, 2.0)?;
    eval_coa_dual(psi, &profile, focus)
}

fn pair_certs(
    profile: &StateProfile,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    with_plain: bool,
) -> Result<(OrderingCertificate, OrderingCertificate)> {
    Ok((
        certified(profile, a, ga, with_plain)?,
        certified(profile, b, gb, with_plain)?,
    ))
}

fn pair_lower(
    theorem: TheoremId,
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    let profile = prepare(psi, theorem, &Foci { a, b, c1: usize::MAX }, alpha)?;
    let with_plain = matches!(theorem, TheoremId::Thm2 | TheoremId::Thm6);
    let (ca, cb) = pair_certs(&profile, a, b, ga, gb, with_plain)?;
    eval_pair_lower(theorem, psi, &profile, &ca, &cb, alpha)
}

fn pair_upper(
    theorem: TheoremId,
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    let profile = prepare(psi, theorem, &Foci { a, b, c1: usize::MAX }, alpha)?;
    let (ca, cb) = pair_certs(&profile, a, b, ga, gb, false)?;
    eval_pair_upper(theorem, psi, &ca, &cb, alpha)
}

/// `C^α(AB|rest) ≥ max{L_A − J_B, L_B − J_A}`.
pub fn thm2_lower(
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    pair_lower(TheoremId::Thm2, psi, a, b, ga, gb, alpha)
}

/// `C^α(AB|rest) ≥ max{S_A^{α/2} − J_B, S_B^{α/2} − J_A}`.
pub fn thm3_lower(
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    pair_lower(TheoremId::Thm3, psi, a, b, ga, gb, alpha)
}

/// `C^α(AB|rest) ≤ J_A + J_B`.
pub fn thm4_upper(
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    pair_upper(TheoremId::Thm4, psi, a, b, ga, gb, alpha)
}

/// [`thm2_lower`] with negativity on the left and CREN/CRENOA on the right.
pub fn thm6_lower(
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    pair_lower(TheoremId::Thm6, psi, a, b, ga, gb, alpha)
}

/// [`thm3_lower`] with negativity on the left and CREN/CRENOA on the right.
pub fn thm7_lower(
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    pair_lower(TheoremId::Thm7, psi, a, b, ga, gb, alpha)
}

/// `N^α(AB|rest) ≤ (r(r−1)/2)^{α/2} (J'_A + J'_B)`, `r` the Schmidt rank of the cut.
pub fn thm8_upper(
    psi: &PureState,
    a: usize,
    b: usize,
    ga: &Grouping,
    gb: &Grouping,
    alpha: f64,
) -> Result<BoundReport> {
    pair_upper(TheoremId::Thm8, psi, a, b, ga, gb, alpha)
}

/// Lower bound on `C^α(ABC_1|rest)`: the AB lower bound minus `J_{C_1}`.
pub fn cor1_lower(
    psi: &PureState,
    foci: &Foci,
    groupings: &CorGroupings,
    alpha: f64,
    variant: Cor1Variant,
) -> Result<BoundReport> {
    let theorem = match variant {
        Cor1Variant::Thm2Based => TheoremId::Cor1Thm2,
        Cor1Variant::Thm3Based => TheoremId::Cor1Thm3,
    };
    let profile = prepare(psi, theorem, foci, alpha)?;
    let with_plain = variant == Cor1Variant::Thm2Based;
    let ca = certified(&profile, foci.a, &groupings.a, with_plain)?;
    let cb = certified(&profile, foci.b, &groupings.b, with_plain)?;
    let cc = certified(&profile, foci.c1, &groupings.c1, false)?;
    eval_cor1(variant, psi, &profile, [&ca, &cb, &cc], alpha)
}

/// Conditional lower bound and unconditional upper bound on
/// `C^α(ABC_1|rest)`. The lower one is reported not-applicable when
/// `C(AB|rest) > C(C_1|rest)`.
pub fn cor2_bounds(
    psi: &PureState,
    foci: &Foci,
    groupings: &CorGroupings,
    alpha: f64,
) -> Result<(BoundReport, BoundReport)> {
    let profile = prepare(psi, TheoremId::Cor2Upper, foci, alpha)?;
    let ca = certified(&profile, foci.a, &groupings.a, false)?;
    let cb = certified(&profile, foci.b, &groupings.b, false)?;
    let cc = certified(&profile, foci.c1, &groupings.c1, false)?;
    eval_cor2(psi, &profile, [&ca, &cb, &cc], alpha)
}
