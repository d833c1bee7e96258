use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::grouping::OrderingCertificate;
use super::scalar::SLACK_TOLERANCE;
use crate::error::{Error, Result};

/// Identifies one inequality.
///
/// The baselines are the α = 2 monogamy (`ckw`), its assisted dual
/// (`coa-dual`) and the earlier (α/2)-weighted dual (`jin`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Ckw,
    CoaDual,
    Jin,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Cor1Thm2,
    Cor1Thm3,
    Cor2Lower,
    Cor2Upper,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
}

/// Whether the optimizer looks for the smallest upper or largest lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    MinUpper,
    MaxLower,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::Ckw,
        TheoremId::CoaDual,
        TheoremId::Jin,
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::Cor1Thm2,
        TheoremId::Cor1Thm3,
        TheoremId::Cor2Lower,
        TheoremId::Cor2Upper,
        TheoremId::Thm5,
        TheoremId::Thm6,
        TheoremId::Thm7,
        TheoremId::Thm8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Ckw => "ckw",
            TheoremId::CoaDual => "coa-dual",
            TheoremId::Jin => "jin",
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::Cor1Thm2 => "cor1-thm2",
            TheoremId::Cor1Thm3 => "cor1-thm3",
            TheoremId::Cor2Lower => "cor2-lower",
            TheoremId::Cor2Upper => "cor2-upper",
            TheoremId::Thm5 => "thm5",
            TheoremId::Thm6 => "thm6",
            TheoremId::Thm7 => "thm7",
            TheoremId::Thm8 => "thm8",
        }
    }

    /// Smallest register the inequality is stated for.
    pub fn min_qubits(self) -> usize {
        match self {
            TheoremId::Ckw | TheoremId::CoaDual | TheoremId::Jin | TheoremId::Thm1 | TheoremId::Thm5 => 2,
            TheoremId::Thm2
            | TheoremId::Thm3
            | TheoremId::Thm4
            | TheoremId::Thm6
            | TheoremId::Thm7
            | TheoremId::Thm8 => 4,
            TheoremId::Cor1Thm2 | TheoremId::Cor1Thm3 | TheoremId::Cor2Lower | TheoremId::Cor2Upper => 6,
        }
    }

    pub fn objective(self) -> Objective {
        match self {
            TheoremId::Thm2
            | TheoremId::Thm3
            | TheoremId::Thm6
            | TheoremId::Thm7
            | TheoremId::Cor1Thm2
            | TheoremId::Cor1Thm3
            | TheoremId::Cor2Lower => Objective::MaxLower,
            _ => Objective::MinUpper,
        }
    }

    pub fn is_corollary(self) -> bool {
        self.min_qubits() == 6
    }

    /// The α = 2 baselines do not depend on α.
    pub fn is_fixed_alpha(self) -> bool {
        matches!(self, TheoremId::Ckw | TheoremId::CoaDual)
    }

    /// Parses a comma-separated list. Accepts `all`, `baselines`, `cor1`
    /// and `cor2` as shorthands.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let expanded: Vec<TheoremId> = match tok {
                "all" => TheoremId::ALL.to_vec(),
                "baselines" => vec![TheoremId::Ckw, TheoremId::CoaDual, TheoremId::Jin],
                "cor1" => vec![TheoremId::Cor1Thm2, TheoremId::Cor1Thm3],
                "cor2" => vec![TheoremId::Cor2Lower, TheoremId::Cor2Upper],
                other => vec![other.parse()?],
            };
            for t in expanded {
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        if out.is_empty() {
            return Err(Error::Parse("empty theorem list".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = match s.to_ascii_lowercase().as_str() {
            "ckw" => TheoremId::Ckw,
            "coa-dual" => TheoremId::CoaDual,
            "jin" => TheoremId::Jin,
            "thm1" => TheoremId::Thm1,
            "thm2" => TheoremId::Thm2,
            "thm3" => TheoremId::Thm3,
            "thm4" => TheoremId::Thm4,
            "cor1-thm2" => TheoremId::Cor1Thm2,
            "cor1-thm3" => TheoremId::Cor1Thm3,
            "cor2-lower" => TheoremId::Cor2Lower,
            "cor2-upper" => TheoremId::Cor2Upper,
            "thm5" => TheoremId::Thm5,
            "thm6" => TheoremId::Thm6,
            "thm7" => TheoremId::Thm7,
            "thm8" => TheoremId::Thm8,
            other => return Err(Error::Parse(format!("unknown theorem id `{other}`"))),
        };
        Ok(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Satisfied,
    Violated,
    NotApplicable,
}

impl BoundStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundStatus::Satisfied => "satisfied",
            BoundStatus::Violated => "violated",
            BoundStatus::NotApplicable => "not-applicable",
        }
    }
}

/// One evaluated inequality. `slack ≥ 0` means it holds; for upper bounds
/// `slack = rhs − lhs`, for lower bounds `slack = lhs − rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub alpha: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub orderings: Vec<OrderingCertificate>,
    pub status: BoundStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    pub(crate) fn with_slack(
        theorem: TheoremId,
        alpha: f64,
        lhs: f64,
        rhs: f64,
        slack: f64,
        orderings: Vec<OrderingCertificate>,
    ) -> Self {
        let status = if slack >= -SLACK_TOLERANCE {
            BoundStatus::Satisfied
        } else {
            BoundStatus::Violated
        };
        Self {
            theorem,
            alpha,
            lhs,
            rhs,
            slack,
            orderings,
            status,
            note: None,
        }
    }

    pub(crate) fn upper(
        theorem: TheoremId,
        alpha: f64,
        lhs: f64,
        rhs: f64,
        orderings: Vec<OrderingCertificate>,
    ) -> Self {
        Self::with_slack(theorem, alpha, lhs, rhs, rhs - lhs, orderings)
    }

    pub(crate) fn lower(
        theorem: TheoremId,
        alpha: f64,
        lhs: f64,
        rhs: f64,
        orderings: Vec<OrderingCertificate>,
    ) -> Self {
        Self::with_slack(theorem, alpha, lhs, rhs, lhs - rhs, orderings)
    }

    pub(crate) fn not_applicable(theorem: TheoremId, alpha: f64, lhs: f64, note: String) -> Self {
        Self {
            theorem,
            alpha,
            lhs,
            rhs: f64::NAN,
            slack: f64::NAN,
            orderings: Vec::new(),
            status: BoundStatus::NotApplicable,
            note: Some(note),
        }
    }

    /// `slack ≥ −1e-9`. Not-applicable reports are neither satisfied nor violated.
    pub fn satisfied(&self) -> bool {
        self.status == BoundStatus::Satisfied
    }

    pub fn violated(&self) -> bool {
        self.status == BoundStatus::Violated
    }

    pub fn applicable(&self) -> bool {
        self.status != BoundStatus::NotApplicable
    }

    /// Groupings rendered as `q0:(1)(2,3);q1:(0,2,3)`.
    pub fn orderings_label(&self) -> String {
        self.orderings
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }
}
