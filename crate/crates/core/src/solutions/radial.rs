use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::ml;
use crate::transforms::{hankel0_inverse, QuadratureSpec};

/// Planar point source of unit mass under time-fractional diffusion:
/// c(r, t) = (1/2π) ∫₀^∞ k E_β(−D k² t^β) J₀(kr) dk.
///
/// Evaluated in the similarity variable r/√(D t^β); β = 1 uses the heat
/// kernel directly. At r = 0 the integral diverges logarithmically for β < 1.
pub fn radial2d_cauchy(beta: f64, d: f64, r: f64, t: f64, q: &QuadratureSpec) -> Result<f64> {
    let a2 = check(beta, d, r, t)?;
    if beta == 1.0 {
        return Ok((-r * r / (4.0 * a2)).exp() / (4.0 * PI * a2));
    }
    hankel_route(beta, a2, r, q)
}

/// The same kernel always through the Hankel integral, including β = 1.
pub fn radial2d_hankel(beta: f64, d: f64, r: f64, t: f64, q: &QuadratureSpec) -> Result<f64> {
    let a2 = check(beta, d, r, t)?;
    hankel_route(beta, a2, r, q)
}

/// Validates the inputs and returns D t^β.
fn check(beta: f64, d: f64, r: f64, t: f64) -> Result<f64> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::domain(format!("beta must lie in (0, 1], got {beta}")));
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain(format!("diffusivity must be positive, got {d}")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("time must be positive, got {t}")));
    }
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("radius must be finite and >= 0, got {r}")));
    }
    if r == 0.0 && beta < 1.0 {
        return Err(Error::domain(
            "the planar fractional point source is logarithmically singular at r = 0 for beta < 1",
        ));
    }
    Ok(d * t.powf(beta))
}

fn hankel_route(beta: f64, a2: f64, r: f64, q: &QuadratureSpec) -> Result<f64> {
    let h = hankel0_inverse(|k| ml(beta, -k * k).unwrap_or(f64::NAN), r / a2.sqrt(), q)?;
    Ok(h / (2.0 * PI * a2))
}
