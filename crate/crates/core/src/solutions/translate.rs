//! Table of equivalent kernels across transport regimes.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{k_erfc, ml, mw, n_erf};

use super::params::Regime;

/// Rows of the kernel table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelEntry {
    GaussianKernel,
    ErrorFunction,
    CompErrorFunction,
    TemporalPropagator,
}

impl KernelEntry {
    pub const ALL: [KernelEntry; 4] = [
        KernelEntry::GaussianKernel,
        KernelEntry::ErrorFunction,
        KernelEntry::CompErrorFunction,
        KernelEntry::TemporalPropagator,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            KernelEntry::GaussianKernel => "gaussian_kernel",
            KernelEntry::ErrorFunction => "error_function",
            KernelEntry::CompErrorFunction => "comp_error_function",
            KernelEntry::TemporalPropagator => "temporal_propagator",
        }
    }
}

impl fmt::Display for KernelEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KernelEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KernelEntry::ALL
            .into_iter()
            .find(|e| e.as_str() == s.replace('-', "_"))
            .ok_or_else(|| Error::domain(format!("unknown kernel entry '{s}'")))
    }
}

/// Arguments shared by all table cells. Each column reads only the
/// parameters it depends on: Fickian none of α, β; ST α; TF β; STF both.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelArgs {
    pub x: f64,
    pub t: f64,
    pub d: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Eigenvalue λ of the temporal propagator.
    pub lambda: f64,
}

/// Evaluates the `to` column of the kernel table for `entry`.
///
/// The table maps like for like, so the value depends only on the target
/// column; `from` names the source column and must itself be tabulated.
pub fn translate_kernel(entry: KernelEntry, from: Regime, to: Regime, args: &KernelArgs) -> Result<f64> {
    for r in [from, to] {
        if r == Regime::SpaceFractional {
            return Err(Error::domain("the kernel table has no space-fractional column"));
        }
    }
    let KernelArgs { x, t, d, lambda, .. } = *args;
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("time must be positive, got {t}")));
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain(format!("diffusivity must be positive, got {d}")));
    }
    if x.is_nan() || lambda.is_nan() {
        return Err(Error::domain("NaN argument"));
    }
    let (alpha, beta) = column_orders(to, args)?;
    let a2 = d * t.powf(alpha);
    Ok(match (entry, beta) {
        (KernelEntry::GaussianKernel, None) => (-x * x / (4.0 * a2)).exp() / (4.0 * PI * a2).sqrt(),
        (KernelEntry::GaussianKernel, Some(b)) => mw(b / 2.0, x.abs() / a2.sqrt())? / (4.0 * a2).sqrt(),
        (KernelEntry::ErrorFunction, None) => libm::erf(x / (4.0 * a2).sqrt()),
        (KernelEntry::ErrorFunction, Some(b)) => n_erf(b / 2.0, x / a2.sqrt())?,
        (KernelEntry::CompErrorFunction, None) => libm::erfc(x / (4.0 * a2).sqrt()),
        (KernelEntry::CompErrorFunction, Some(b)) => k_erfc(b / 2.0, x / a2.sqrt())?,
        (KernelEntry::TemporalPropagator, None) => (-lambda * lambda * a2).exp(),
        (KernelEntry::TemporalPropagator, Some(b)) => ml(b, -lambda * lambda * a2)?,
    })
}

/// Time exponent and (for fractional columns) order used by a column.
fn column_orders(to: Regime, args: &KernelArgs) -> Result<(f64, Option<f64>)> {
    let alpha_ok = |a: f64| {
        if a > 0.0 && a < 2.0 {
            Ok(a)
        } else {
            Err(Error::domain(format!("alpha must lie in (0, 2), got {a}")))
        }
    };
    let beta_ok = |b: f64, max: f64| {
        if b > 0.0 && b <= max && b < 2.0 {
            Ok(b)
        } else {
            Err(Error::domain(format!(
                "beta = {b} is not admissible for the {to} column"
            )))
        }
    };
    match to {
        Regime::Fickian => Ok((1.0, None)),
        Regime::StretchedTime => Ok((alpha_ok(args.alpha)?, None)),
        Regime::TimeFractional => {
            let b = beta_ok(args.beta, 2.0)?;
            Ok((b, Some(b)))
        }
        Regime::StretchedTimeFractional => Ok((alpha_ok(args.alpha)?, Some(beta_ok(args.beta, 1.0)?))),
        Regime::SpaceFractional => unreachable!("rejected above"),
    }
}
