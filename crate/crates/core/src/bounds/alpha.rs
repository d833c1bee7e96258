use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Evenly spaced α values in `[0, 2]`, endpoints included.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Default for AlphaGrid {
    /// `0.05:2:0.05`. Exact zero is left out to sidestep `0^0`.
    fn default() -> Self {
        Self { start: 0.05, stop: 2.0, step: 0.05 }
    }
}

impl AlphaGrid {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        let bad = |detail: String| Error::OutOfRange { what: "alpha grid", detail };
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(bad("non-finite value".into()));
        }
        if !(0.0..=2.0).contains(&start) || !(0.0..=2.0).contains(&stop) {
            return Err(bad(format!("{start}:{stop} must lie in [0, 2]")));
        }
        if stop < start {
            return Err(bad(format!("stop {stop} below start {start}")));
        }
        if step <= 0.0 && stop > start {
            return Err(bad(format!("step {step} must be positive")));
        }
        Ok(Self { start, stop, step })
    }

    /// A single value.
    pub fn single(alpha: f64) -> Result<Self> {
        Self::new(alpha, alpha, 1.0)
    }

    /// `0.02:2:0.02`, the grid of the figure data.
    pub fn figure() -> Self {
        Self { start: 0.02, stop: 2.0, step: 0.02 }
    }

    /// The grid values, computed as `start + i·step` and rounded to 12
    /// decimals so that printed values are clean.
    pub fn values(&self) -> Vec<f64> {
        if self.stop <= self.start || self.step <= 0.0 {
            return vec![self.start];
        }
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|i| ((self.start + i as f64 * self.step) * 1e12).round() / 1e12)
            .collect()
    }
}

impl FromStr for AlphaGrid {
    type Err = Error;

    /// Accepts `start:stop:step` or a single number.
    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad number `{t}` in alpha grid `{s}`")))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [a] => Self::single(num(a)?),
            [a, b, c] => Self::new(num(a)?, num(b)?, num(c)?),
            _ => Err(Error::Parse(format!("alpha grid `{s}` is not start:stop:step"))),
        }
    }
}
