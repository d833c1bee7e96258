//! Named state families with closed-form measure values.
//!
//! The closed forms are kept apart from the numeric routes in `measures` and
//! are only meant as independent cross-checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{PureState, C64, MAX_QUBITS};

const PARAM_NORM_TOLERANCE: f64 = 1e-10;

/// Input amplitudes are renormalized when their norm is this close to one.
pub const INGEST_NORM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Gsd3,
    Wclass4,
    Ghz,
    W,
    Thm2Saturating,
    Fig3,
    CorA,
    CorB,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Gsd3,
        Family::Wclass4,
        Family::Ghz,
        Family::W,
        Family::Thm2Saturating,
        Family::Fig3,
        Family::CorA,
        Family::CorB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gsd3 => "gsd3",
            Family::Wclass4 => "wclass4",
            Family::Ghz => "ghz",
            Family::W => "w",
            Family::Thm2Saturating => "thm2_saturating",
            Family::Fig3 => "fig3",
            Family::CorA => "cor_a",
            Family::CorB => "cor_b",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Family::Gsd3 => {
                "3 qubits: l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>; params l0..l4 [phi], default all 1/sqrt5"
            }
            Family::Wclass4 => {
                "4 qubits: l1|1000> + l2|0100> + l3|0010> + l4|0001>; params l1..l4, default (3/4, 1/2, sqrt2/4, 1/4)"
            }
            Family::Ghz => "n qubits: (|0...0> + |1...1>)/sqrt2; n from params[0] or the n field, default 3",
            Family::W => "n qubits: equal superposition of single excitations; n as for ghz",
            Family::Thm2Saturating => "4 qubits: (|0000> + |1001>)/sqrt2",
            Family::Fig3 => "4 qubits: (|0000> + |0010> + |1011>)/sqrt3",
            Family::CorA => "6 qubits: (|000000> + |101000>)/sqrt2",
            Family::CorB => "6 qubits: (|000000> + |001100>)/sqrt2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn sparse(n: usize, entries: &[(usize, C64)]) -> Result<PureState> {
    let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
    for &(i, a) in entries {
        amps[i] = a;
    }
    PureState::new(amps)
}

fn check_coefficients(l: &[f64]) -> Result<()> {
    if l.iter().any(|&x| !(x >= 0.0 && x.is_finite())) {
        return Err(Error::OutOfRange {
            what: "coefficients",
            detail: format!("{l:?} must be finite and non-negative"),
        });
    }
    let norm: f64 = l.iter().map(|x| x * x).sum();
    if (norm - 1.0).abs() > PARAM_NORM_TOLERANCE {
        return Err(Error::NotNormalized(norm));
    }
    Ok(())
}

/// `λ₀|000⟩ + λ₁e^{iφ}|100⟩ + λ₂|101⟩ + λ₃|110⟩ + λ₄|111⟩`.
pub fn gsd3(l: [f64; 5], phi: f64) -> Result<PureState> {
    check_coefficients(&l)?;
    sparse(
        3,
        &[
            (0b000, re(l[0])),
            (0b100, C64::from_polar(l[1], phi)),
            (0b101, re(l[2])),
            (0b110, re(l[3])),
            (0b111, re(l[4])),
        ],
    )
}

/// Closed-form values for [`gsd3`] with `A` = qubit 0, `B` = qubit 1 and
/// `C` = qubit 2.
///
/// With this labeling the `λ₂` term (`|101⟩`) couples A to C and the `λ₃`
/// term (`|110⟩`) couples A to B; the formulas are often quoted with the
/// two pairs exchanged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Gsd3ClosedForms {
    /// `C(ρ_{A|BC}) = 2λ₀√(λ₂²+λ₃²+λ₄²)`
    pub c_a_bc: f64,
    /// `C(ρ_AB) = 2λ₀λ₃`
    pub c_ab: f64,
    /// `C(ρ_AC) = 2λ₀λ₂`
    pub c_ac: f64,
    /// `C_a(ρ_AB) = 2λ₀√(λ₃²+λ₄²)`
    pub ca_ab: f64,
    /// `C_a(ρ_AC) = 2λ₀√(λ₂²+λ₄²)`
    pub ca_ac: f64,
}

pub fn gsd3_closed_forms(l: [f64; 5]) -> Gsd3ClosedForms {
    let [l0, _, l2, l3, l4] = l;
    Gsd3ClosedForms {
        c_a_bc: 2.0 * l0 * (l2 * l2 + l3 * l3 + l4 * l4).sqrt(),
        c_ab: 2.0 * l0 * l3,
        c_ac: 2.0 * l0 * l2,
        ca_ab: 2.0 * l0 * (l3 * l3 + l4 * l4).sqrt(),
        ca_ac: 2.0 * l0 * (l2 * l2 + l4 * l4).sqrt(),
    }
}

/// `λ₁|1000⟩ + λ₂|0100⟩ + λ₃|0010⟩ + λ₄|0001⟩`.
pub fn wclass4(l: [f64; 4]) -> Result<PureState> {
    check_coefficients(&l)?;
    sparse(
        4,
        &[(0b1000, re(l[0])), (0b0100, re(l[1])), (0b0010, re(l[2])), (0b0001, re(l[3]))],
    )
}

/// Closed forms for [`wclass4`] with `A, B, C₁, C₂` = qubits 0–3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WClassClosedForms {
    /// `C(AB|C₁C₂) = 2√((λ₁²+λ₂²)(λ₃²+λ₄²))`
    pub c_ab_cut: f64,
    /// `C(ρ_AB) = C_a(ρ_AB) = 2λ₁λ₂`
    pub c_ab: f64,
    /// `C(ρ_{AC₁}) = 2λ₁λ₃`
    pub c_ac1: f64,
    /// `C(ρ_{AC₂}) = 2λ₁λ₄`
    pub c_ac2: f64,
}

pub fn wclass4_closed_forms(l: [f64; 4]) -> WClassClosedForms {
    let [l1, l2, l3, l4] = l;
    WClassClosedForms {
        c_ab_cut: 2.0 * ((l1 * l1 + l2 * l2) * (l3 * l3 + l4 * l4)).sqrt(),
        c_ab: 2.0 * l1 * l2,
        c_ac1: 2.0 * l1 * l3,
        c_ac2: 2.0 * l1 * l4,
    }
}

fn check_size(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_QUBITS {
        return Err(Error::OutOfRange {
            what: "qubit count",
            detail: format!("{n} not in {min}..={MAX_QUBITS}"),
        });
    }
    Ok(())
}

/// `(|0…0⟩ + |1…1⟩)/√2`.
pub fn ghz(n: usize) -> Result<PureState> {
    check_size(n, 2)?;
    let a = re(std::f64::consts::FRAC_1_SQRT_2);
    sparse(n, &[(0, a), ((1 << n) - 1, a)])
}

/// Equal superposition of the `n` single-excitation basis states.
pub fn w(n: usize) -> Result<PureState> {
    check_size(n, 2)?;
    let a = re(1.0 / (n as f64).sqrt());
    sparse(n, &(0..n).map(|q| (1usize << q, a)).collect::<Vec<_>>())
}

/// `(|0000⟩ + |1001⟩)/√2`.
pub fn thm2_saturating() -> PureState {
    let a = re(std::f64::consts::FRAC_1_SQRT_2);
    sparse(4, &[(0b0000, a), (0b1001, a)]).expect("normalized")
}

/// `(|0000⟩ + |0010⟩ + |1011⟩)/√3`.
pub fn fig3() -> PureState {
    let a = re(1.0 / 3f64.sqrt());
    sparse(4, &[(0b0000, a), (0b0010, a), (0b1011, a)]).expect("normalized")
}

/// `(|000000⟩ + |101000⟩)/√2`.
pub fn cor_a() -> PureState {
    let a = re(std::f64::consts::FRAC_1_SQRT_2);
    sparse(6, &[(0, a), (0b101000, a)]).expect("normalized")
}

/// `(|000000⟩ + |001100⟩)/√2`.
pub fn cor_b() -> PureState {
    let a = re(std::f64::consts::FRAC_1_SQRT_2);
    sparse(6, &[(0, a), (0b001100, a)]).expect("normalized")
}

/// Coefficients used when `gsd3` is requested without parameters.
pub fn gsd3_default() -> [f64; 5] {
    [1.0 / 5f64.sqrt(); 5]
}

/// Coefficients used when `wclass4` is requested without parameters.
pub fn wclass4_default() -> [f64; 4] {
    [0.75, 0.5, 2f64.sqrt() / 4.0, 0.25]
}

fn fixed_params<const K: usize>(family: Family, params: &[f64]) -> Result<[f64; K]> {
    params.try_into().map_err(|_| Error::OutOfRange {
        what: "family parameters",
        detail: format!("{family} takes {K} coefficients, got {}", params.len()),
    })
}

fn size_param(family: Family, params: &[f64], n: Option<usize>) -> Result<usize> {
    match (params, n) {
        ([], None) => Ok(3),
        ([], Some(n)) => Ok(n),
        ([x], _) if x.fract() == 0.0 && *x >= 0.0 => Ok(*x as usize),
        _ => Err(Error::OutOfRange {
            what: "family parameters",
            detail: format!("{family} takes a single integer size, got {params:?}"),
        }),
    }
}

fn no_params(family: Family, params: &[f64]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "family parameters",
            detail: format!("{family} takes no parameters"),
        })
    }
}

/// Builds a family member. `n` is only read by `ghz` and `w`.
pub fn named(family: Family, params: &[f64], n: Option<usize>) -> Result<PureState> {
    match family {
        Family::Gsd3 => match params.len() {
            0 => gsd3(gsd3_default(), 0.0),
            5 => gsd3(fixed_params(family, params)?, 0.0),
            6 => gsd3(fixed_params(family, &params[..5])?, params[5]),
            _ => Err(Error::OutOfRange {
                what: "family parameters",
                detail: format!("gsd3 takes 5 coefficients and an optional phase, got {}", params.len()),
            }),
        },
        Family::Wclass4 => {
            if params.is_empty() {
                wclass4(wclass4_default())
            } else {
                wclass4(fixed_params(family, params)?)
            }
        }
        Family::Ghz => ghz(size_param(family, params, n)?),
        Family::W => w(size_param(family, params, n)?),
        Family::Thm2Saturating => no_params(family, params).map(|_| thm2_saturating()),
        Family::Fig3 => no_params(family, params).map(|_| fig3()),
        Family::CorA => no_params(family, params).map(|_| cor_a()),
        Family::CorB => no_params(family, params).map(|_| cor_b()),
    }
}

/// Serializable state description.
///
/// JSON forms: `{"kind":"amplitudes","n":2,"re":[...],"im":[...]}` (with `im`
/// optional) or `{"kind":"named","family":"gsd3","params":[...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateSpec {
    Amplitudes {
        n: usize,
        re: Vec<f64>,
        #[serde(default)]
        im: Vec<f64>,
    },
    Named {
        family: Family,
        #[serde(default)]
        params: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
}

impl StateSpec {
    pub fn named(family: Family) -> Self {
        StateSpec::Named { family, params: Vec::new(), n: None }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("state spec: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("state spec serializes")
    }

    /// Materializes the state. Raw amplitudes are renormalized when their
    /// norm is within 1e-6 of one and rejected otherwise.
    pub fn build(&self) -> Result<PureState> {
        match self {
            StateSpec::Amplitudes { n, re, im } => {
                if *n == 0 || *n > MAX_QUBITS {
                    return Err(Error::OutOfRange {
                        what: "qubit count",
                        detail: format!("{n} not in 1..={MAX_QUBITS}"),
                    });
                }
                let dim = 1usize << n;
                if re.len() != dim || !(im.is_empty() || im.len() == dim) {
                    return Err(Error::InvalidInput(format!(
                        "{n} qubits need {dim} amplitudes, got re {} / im {}",
                        re.len(),
                        im.len()
                    )));
                }
                let amps: Vec<C64> = re
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| C64::new(r, im.get(i).copied().unwrap_or(0.0)))
                    .collect();
                if amps.iter().any(|z| !z.is_finite()) {
                    return Err(Error::InvalidInput("non-finite amplitude".into()));
                }
                let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if (norm - 1.0).abs() > INGEST_NORM_TOLERANCE {
                    return Err(Error::NotNormalized(norm * norm));
                }
                PureState::from_unnormalized(amps)
            }
            StateSpec::Named { family, params, n } => named(*family, params, *n),
        }
    }

    /// Short label for reports.
    pub fn label(&self) -> String {
        match self {
            StateSpec::Amplitudes { n, .. } => format!("amplitudes[{n}]"),
            StateSpec::Named { family, params, n } => {
                let mut s = family.to_string();
                if !params.is_empty() {
                    let p: Vec<String> = params.iter().map(|x| format!("{x}")).collect();
                    s.push_str(&format!("({})", p.join(",")));
                } else if let Some(n) = n {
                    s.push_str(&format!("({n})"));
                }
                s
            }
        }
    }
}
