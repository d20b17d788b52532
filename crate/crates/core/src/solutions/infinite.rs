//! Closed-form solutions on the line and half-line.
//!
//! Every evaluator works in the two-exponent form: the similarity variable
//! is x/√(D t^α) and the profile shape is set by β.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{k_erfc, levy, mw};

use super::params::{Regime, TransportParams};

fn check_time(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("time must be positive, got {t}")))
    }
}

fn check_x(x: f64) -> Result<()> {
    if x.is_nan() {
        Err(Error::domain("position is NaN"))
    } else {
        Ok(())
    }
}

fn check_shape(alpha: f64, beta: f64, d: f64) -> Result<()> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain(format!("diffusivity must be positive, got {d}")));
    }
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::domain(format!("alpha must lie in (0, 2), got {alpha}")));
    }
    if !(beta > 0.0 && beta < 2.0) {
        return Err(Error::domain(format!("beta must lie in (0, 2), got {beta}")));
    }
    Ok(())
}

fn not_space_fractional(p: &TransportParams) -> Result<()> {
    p.validate()?;
    if p.regime == Regime::SpaceFractional {
        return Err(Error::domain(
            "space-fractional transport has its own solution; use space_frac_cauchy",
        ));
    }
    Ok(())
}

/// Green's function (1/√(4 D t^α)) M_{β/2}(|x|/√(D t^α)); Gaussian at β = 1.
pub fn stf_green(alpha: f64, beta: f64, d: f64, x: f64, t: f64) -> Result<f64> {
    check_shape(alpha, beta, d)?;
    check_time(t)?;
    check_x(x)?;
    let a2 = d * t.powf(alpha);
    if beta == 1.0 {
        return Ok((-x * x / (4.0 * a2)).exp() / (4.0 * PI * a2).sqrt());
    }
    let a = a2.sqrt();
    Ok(mw(beta / 2.0, x.abs() / a)? / (2.0 * a))
}

/// c0 K_{β/2}(x/√(D t^α)) for x ≥ 0; exactly c0 at x = 0.
pub fn stf_signaling(alpha: f64, beta: f64, d: f64, c0: f64, x: f64, t: f64) -> Result<f64> {
    check_shape(alpha, beta, d)?;
    check_time(t)?;
    check_x(x)?;
    if x < 0.0 {
        return Err(Error::domain(format!("signaling problem lives on x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(c0);
    }
    Ok(c0 * erfc_like(beta, x / (d * t.powf(alpha)).sqrt())?)
}

/// K_{β/2}(z), using erfc(z/2) at β = 1.
fn erfc_like(beta: f64, z: f64) -> Result<f64> {
    if beta == 1.0 {
        Ok(libm::erfc(z / 2.0))
    } else {
        k_erfc(beta / 2.0, z)
    }
}

/// Stretched-time Gaussian N_tot/√(4π D t^α) · exp(−x²/4Dt^α).
pub fn st_gaussian(alpha: f64, d: f64, n_tot: f64, x: f64, t: f64) -> Result<f64> {
    Ok(n_tot * stf_green(alpha, 1.0, d, x, t)?)
}

/// Instantaneous plane source of mass `n_tot`.
pub fn tf_plane_source(p: &TransportParams, n_tot: f64, x: f64, t: f64) -> Result<f64> {
    not_space_fractional(p)?;
    Ok(n_tot * stf_green(p.alpha, p.beta, p.d, x, t)?)
}

/// Initial step c0 on x < 0: (c0/2) K_{β/2}(x/√(D t^α)).
pub fn tf_step_source(p: &TransportParams, c0: f64, x: f64, t: f64) -> Result<f64> {
    not_space_fractional(p)?;
    check_time(t)?;
    check_x(x)?;
    if x == 0.0 {
        return Ok(0.5 * c0);
    }
    Ok(0.5 * c0 * erfc_like(p.beta, x / p.spread(t).sqrt())?)
}

/// Constant concentration c0 held at x = 0 of the half-line.
pub fn tf_signaling(p: &TransportParams, c0: f64, x: f64, t: f64) -> Result<f64> {
    not_space_fractional(p)?;
    stf_signaling(p.alpha, p.beta, p.d, c0, x, t)
}

/// Riesz space-fractional point source: (Dt)^{−1/2μ} L_{2μ}(x/(Dt)^{1/2μ}).
pub fn space_frac_cauchy(mu: f64, d: f64, x: f64, t: f64) -> Result<f64> {
    if !(mu > 0.0 && mu <= 1.0) {
        return Err(Error::domain(format!("mu must lie in (0, 1], got {mu}")));
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain(format!("diffusivity must be positive, got {d}")));
    }
    check_time(t)?;
    check_x(x)?;
    let s = (d * t).powf(0.5 / mu);
    Ok(levy(2.0 * mu, x / s)? / s)
}
