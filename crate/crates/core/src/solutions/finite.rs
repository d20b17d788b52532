//! Eigenfunction series on finite sheets.
//!
//! The temporal factor of each mode is E_β(−λ² D t^α). For β ≤ 1 the
//! remainder after N modes is bounded with E_β(−y) ≤ 1/(1 + y/Γ(1+β)),
//! or with the exponential itself at β = 1.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{gamma, ml, sin_pi};

use super::params::{Regime, TransportParams};

/// Relative accuracy (against the boundary data scale) at which the mode
/// sum stops.
pub const SERIES_REL_TOL: f64 = 1e-13;

/// Why a truncated series may not meet its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TruncationWarning {
    /// The mode cap was hit before the envelope fell below tolerance.
    TermCapReached,
    /// t = 0: the series converges only conditionally (Gibbs).
    InitialTime,
}

/// A truncated series value with a rigorous bound on the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: f64,
    pub truncation_bound: f64,
    pub terms: usize,
    pub warning: Option<TruncationWarning>,
}

fn check(p: &TransportParams, l: f64, t: f64, n_terms: usize) -> Result<()> {
    p.validate()?;
    if p.regime == Regime::SpaceFractional {
        return Err(Error::domain("finite-sheet series need a time-nonlocal regime"));
    }
    if p.beta > 1.0 {
        return Err(Error::domain(format!(
            "finite-sheet series need beta <= 1, got {}",
            p.beta
        )));
    }
    if !(l > 0.0 && l.is_finite()) {
        return Err(Error::domain(format!("L must be positive, got {l}")));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("time must be >= 0, got {t}")));
    }
    if n_terms == 0 {
        return Err(Error::domain("series needs at least one term"));
    }
    Ok(())
}

/// Mode factor E_β(−y).
fn propagator(beta: f64, y: f64) -> Result<f64> {
    if y == 0.0 {
        Ok(1.0)
    } else {
        ml(beta, -y)
    }
}

/// Sheet −L ≤ x ≤ L, initially empty, faces held at c0:
/// c0 − (4c0/π) Σ (−1)^n/(2n+1) E_β(−λ_n² D t^α) cos(λ_n x), λ_n = (2n+1)π/2L.
pub fn tf_finite_equal(p: &TransportParams, c0: f64, l: f64, x: f64, t: f64, n_terms: usize) -> Result<SeriesValue> {
    check(p, l, t, n_terms)?;
    if !(x.abs() <= l) {
        return Err(Error::domain(format!("x = {x} outside [-L, L]")));
    }
    let u = x / l;
    let spread = p.spread(t);
    let k = PI * PI * spread / (4.0 * l * l);
    let pre = 4.0 * c0 / PI;
    let stop = SERIES_REL_TOL * c0.abs().max(f64::MIN_POSITIVE);
    let mut sum = 0.0;
    let mut n = 0;
    let mut done = false;
    while n < n_terms {
        let m = (2 * n + 1) as f64;
        let e = propagator(p.beta, k * m * m)?;
        // cos(π m u / 2) with exact zeros at u = ±1
        let cos = sin_pi(0.5 - 0.5 * m * u);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * e * cos / m;
        n += 1;
        if t > 0.0 && pre * e / m < stop {
            done = true;
            break;
        }
    }
    let bound = if t == 0.0 {
        f64::INFINITY
    } else {
        pre * tail_bound(p.beta, k, n, true)
    };
    Ok(SeriesValue {
        value: c0 - pre * sum,
        truncation_bound: bound,
        terms: n,
        warning: warning(t, done),
    })
}

/// Sheet 0 ≤ x ≤ L, initially empty, faces held at c1 (x = 0) and c2 (x = L):
/// c1 + (c2−c1)x/L + (2/π) Σ_{n≥1} ((c2 cos nπ − c1)/n) sin(nπx/L) E_β(−D n²π² t^α/L²).
pub fn tf_finite_unequal(
    p: &TransportParams,
    c1: f64,
    c2: f64,
    l: f64,
    x: f64,
    t: f64,
    n_terms: usize,
) -> Result<SeriesValue> {
    check(p, l, t, n_terms)?;
    if !(0.0..=l).contains(&x) {
        return Err(Error::domain(format!("x = {x} outside [0, L]")));
    }
    let u = x / l;
    let k = PI * PI * p.spread(t) / (l * l);
    let scale = c1.abs() + c2.abs();
    let stop = SERIES_REL_TOL * scale.max(f64::MIN_POSITIVE);
    let mut sum = 0.0;
    let mut n = 0;
    let mut done = false;
    while n < n_terms {
        n += 1;
        let nf = n as f64;
        let e = propagator(p.beta, k * nf * nf)?;
        let cos_npi = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += (c2 * cos_npi - c1) / nf * sin_pi(nf * u) * e;
        if t > 0.0 && 2.0 / PI * scale * e / nf < stop {
            done = true;
            break;
        }
    }
    let bound = if t == 0.0 {
        f64::INFINITY
    } else {
        2.0 / PI * scale * tail_bound(p.beta, k, n, false)
    };
    // written so that x = 0 and x = L reproduce c1 and c2 exactly
    let steady = c1 * (1.0 - u) + c2 * u;
    Ok(SeriesValue {
        value: steady + 2.0 / PI * sum,
        truncation_bound: bound,
        terms: n,
        warning: warning(t, done),
    })
}

fn warning(t: f64, done: bool) -> Option<TruncationWarning> {
    if t == 0.0 {
        Some(TruncationWarning::InitialTime)
    } else if !done {
        Some(TruncationWarning::TermCapReached)
    } else {
        None
    }
}

/// Upper bound on Σ_{j>N} E_β(−k q_j²)/q_j for the mode numbers q_j of
/// the odd series (q = 2j+1, j ≥ N) or the full series (q = j, j ≥ N+1).
fn tail_bound(beta: f64, k: f64, n_done: usize, odd: bool) -> f64 {
    let q0 = if odd {
        (2 * n_done + 1) as f64
    } else {
        (n_done + 1) as f64
    };
    let step = if odd { 2.0 } else { 1.0 };
    if beta == 1.0 {
        // geometric majorant: successive ratios are ≤ e^{−k(2 q0 step + step²)}
        let first = (-k * q0 * q0).exp() / q0;
        let r = (-k * (2.0 * q0 * step + step * step)).exp();
        if r < 1.0 {
            return first / (1.0 - r);
        }
    }
    // E_β(−y) ≤ Γ(1+β)/y, and Σ_{q ≥ q0} 1/q³ over the stride ≤ 1/q0³ + ∫
    let g = gamma(1.0 + beta);
    if k == 0.0 {
        return f64::INFINITY;
    }
    g / k * (1.0 / q0.powi(3) + 1.0 / (2.0 * step * q0 * q0))
}
