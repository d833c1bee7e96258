//! Scalar pieces shared by every bound: the tightened weight, the α-power
//! convention and the elementary inequalities the bounds rest on.

use crate::error::{Error, Result};

/// Inequality slack tolerance.
pub const SLACK_TOLERANCE: f64 = 1e-9;

/// Tolerance of the scalar inequality checks.
pub const SCALAR_TOLERANCE: f64 = 1e-12;

/// Measure values at or below this are treated as exact zeros before taking
/// α-powers, so that rounding noise is not blown up by `x^α` for small α.
pub const POWER_FLOOR: f64 = 1e-12;

pub fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=2.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "alpha",
            detail: format!("{alpha} not in [0, 2]"),
        })
    }
}

/// `h = 2^{α/2} − 1`.
pub fn h_weight(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(h_unchecked(alpha))
}

pub(crate) fn h_unchecked(alpha: f64) -> f64 {
    (alpha / 2.0).exp2() - 1.0
}

/// `x^α` with `0^α = 0` for every α, including α = 0.
pub fn pow_alpha(x: f64, alpha: f64) -> f64 {
    if x <= POWER_FLOOR {
        0.0
    } else {
        x.powf(alpha)
    }
}

/// `Σ_i w^{i−1} v_i^α`.
pub fn weighted_power_sum(values: &[f64], weight: f64, alpha: f64) -> f64 {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| weight.powi(i as i32) * pow_alpha(v, alpha))
        .sum()
}

/// `h Σ_{i<k} v_i^α + v_k^α`: weight `h` on every group but the last.
pub fn monogamy_power_sum(values: &[f64], h: f64, alpha: f64) -> f64 {
    match values.split_last() {
        None => 0.0,
        Some((last, head)) => {
            h * head.iter().map(|&v| pow_alpha(v, alpha)).sum::<f64>() + pow_alpha(*last, alpha)
        }
    }
}

/// Both parts of the lemma: `(x−y)^α ≥ x^α − y^α` and `(x+y)^α ≤ x^α + y^α`
/// for `x ≥ y ≥ 0`, `0 ≤ α ≤ 1`.
pub fn lemma_check(x: f64, y: f64, alpha: f64) -> Result<(bool, bool)> {
    if !(y >= 0.0 && x >= y && (0.0..=1.0).contains(&alpha)) {
        return Err(Error::OutOfRange {
            what: "lemma arguments",
            detail: format!("need x ≥ y ≥ 0 and α ∈ [0,1], got x={x}, y={y}, α={alpha}"),
        });
    }
    let p = |v: f64| pow_alpha(v, alpha);
    let diff = p(x - y) >= p(x) - p(y) - SCALAR_TOLERANCE;
    let sum = p(x + y) <= p(x) + p(y) + SCALAR_TOLERANCE;
    Ok((diff, sum))
}

/// `(1+t)^x ≤ 1 + (2^x − 1) t^x` for `0 ≤ t ≤ 1`, `0 ≤ x ≤ 1`.
pub fn tightened_step_upper(t: f64, x: f64) -> bool {
    (1.0 + t).powf(x) <= 1.0 + (x.exp2() - 1.0) * pow_alpha(t, x) + SCALAR_TOLERANCE
}

/// `(1+t)^x ≥ 1 + (2^x − 1) t^x` for `t ≥ 1`, `0 ≤ x ≤ 1`.
pub fn tightened_step_lower(t: f64, x: f64) -> bool {
    (1.0 + t).powf(x) >= 1.0 + (x.exp2() - 1.0) * t.powf(x) - SCALAR_TOLERANCE
}
