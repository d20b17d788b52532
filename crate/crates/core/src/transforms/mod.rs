//! Numerical integral transforms of real callables.
//!
//! Conventions: Laplace ∫₀^∞ e^{−st} f(t) dt; Fourier ∫ e^{+ikx} f(x) dx
//! without normalisation; Mellin ∫₀^∞ r^{s−1} f(r) dr.

pub mod contour;
pub mod hankel;
pub mod oscillatory;
pub mod quadrature;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use contour::{inv_laplace_contour, DEFAULT_NODES};
pub use hankel::{bessel_j0, bessel_j0_zero, hankel0_inverse};
pub use oscillatory::{oscillatory_half_line, wynn_epsilon};
pub use quadrature::{
    integrate, integrate_half_line, integrate_pieces, integrate_to_infinity, QuadResult, QuadratureSpec,
};

/// Laplace transform at real s > 0.
pub fn laplace_numeric<F: Fn(f64) -> f64>(f: F, s: f64, q: &QuadratureSpec) -> Result<f64> {
    q.validate()?;
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain(format!("Laplace variable must be positive, got {s}")));
    }
    let g = |t: f64| {
        let e = (-s * t).exp();
        if e == 0.0 {
            0.0
        } else {
            e * f(t)
        }
    };
    // the kernel has decayed by e^{-40} past the last breakpoint
    let head = integrate_pieces(g, &[0.0, 1.0 / s, 8.0 / s, 40.0 / s], q).require("Laplace transform")?;
    let tail = integrate_to_infinity(g, 40.0 / s, q).require("Laplace transform tail")?;
    Ok(head.value + tail.value)
}

/// Fourier transform ∫ e^{ikx} f(x) dx split into its even (cosine) and
/// odd (sine) parts.
pub fn fourier_numeric<F: Fn(f64) -> f64>(f: F, k: f64, q: &QuadratureSpec) -> Result<Complex64> {
    q.validate()?;
    if !k.is_finite() {
        return Err(Error::domain("wavenumber must be finite"));
    }
    let even = |x: f64| f(x) + f(-x);
    let odd = |x: f64| f(x) - f(-x);
    if k == 0.0 {
        let re = integrate_half_line(even, q).require("Fourier transform at k = 0")?;
        return Ok(Complex64::new(re.value, 0.0));
    }
    let ak = k.abs();
    let half = PI / ak;
    let (re, _) = oscillatory_half_line(
        |x| (k * x).cos() * even(x),
        |m| if m == 0 { 0.0 } else { (m as f64 - 0.5) * half },
        q,
    )?;
    let (im, _) = oscillatory_half_line(|x| (k * x).sin() * odd(x), |m| m as f64 * half, q)?;
    Ok(Complex64::new(re, im))
}

/// Mellin transform at real s, computed as ∫ e^{su} f(e^u) du.
///
/// A coarse strip check rejects s when r^s f(r) fails to decay towards
/// either end of (0, ∞).
pub fn mellin_numeric<F: Fn(f64) -> f64>(f: F, s: f64, q: &QuadratureSpec) -> Result<f64> {
    q.validate()?;
    if !s.is_finite() {
        return Err(Error::domain("Mellin variable must be finite"));
    }
    let g = |u: f64| {
        let w = (s * u).exp();
        if w == 0.0 {
            return 0.0;
        }
        let v = w * f(u.exp());
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    for (side, near, far) in [("left", -30.0, -60.0), ("right", 30.0, 60.0)] {
        let a = g(near).abs();
        let b = g(far).abs();
        if b > 1e-300 && b >= 0.9 * a {
            return Err(Error::StripViolation(format!(
                "r^s f(r) does not decay at the {side} end for s = {s}"
            )));
        }
    }
    let pos = integrate_to_infinity(g, 0.0, q).require("Mellin transform")?;
    let neg = integrate_to_infinity(|u| g(-u), 0.0, q).require("Mellin transform")?;
    Ok(pos.value + neg.value)
}
