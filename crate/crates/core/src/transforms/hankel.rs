//! Inverse zeroth-order Hankel transform ∫₀^∞ k F(k) J₀(kr) dk.

use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::oscillatory::oscillatory_half_line;
use super::quadrature::{integrate_half_line, QuadratureSpec};

/// Bessel function J₀.
#[inline]
pub fn bessel_j0(x: f64) -> f64 {
    libm::j0(x)
}

/// The m-th positive zero of J₀ (m ≥ 1).
pub fn bessel_j0_zero(m: usize) -> f64 {
    assert!(m >= 1, "zeros are numbered from 1");
    let b = (m as f64 - 0.25) * PI;
    let b2 = 1.0 / (b * b);
    // McMahon expansion, then Newton with J₀' = −J₁
    let mut x = b + (1.0 / 8.0 + b2 * (-31.0 / 384.0 + b2 * 3779.0 / 15360.0)) / b;
    for _ in 0..4 {
        let dx = libm::j0(x) / libm::j1(x);
        x += dx;
        if dx.abs() <= 1e-16 * x {
            break;
        }
    }
    x
}

/// ∫₀^∞ k·spectrum(k)·J₀(kr) dk, summed over panels between zeros of
/// J₀(kr) with epsilon acceleration. At r = 0 the plain integral is taken.
pub fn hankel0_inverse<F>(spectrum: F, r: f64, q: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    q.validate()?;
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("radius must be finite and >= 0, got {r}")));
    }
    if r == 0.0 {
        let res = integrate_half_line(|k| k * spectrum(k), q).require("Hankel integral at r = 0")?;
        return Ok(res.value);
    }
    let f = |k: f64| k * spectrum(k) * libm::j0(k * r);
    let (v, _) = oscillatory_half_line(f, |m| if m == 0 { 0.0 } else { bessel_j0_zero(m) / r }, q)?;
    Ok(v)
}
