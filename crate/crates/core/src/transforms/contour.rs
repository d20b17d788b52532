//! Numerical inversion of the Laplace transform along a Talbot contour.
//!
//! The Bromwich line is deformed into
//! `s(θ) = (n/t)(−0.6122 + 0.5017 θ cot(0.6407 θ) + 0.2645 iθ)`, θ ∈ (−π, π),
//! which wraps the negative real axis, and the integral is evaluated by
//! the midpoint rule. The transform must be analytic off the closed
//! negative real axis (branch cuts along it are fine); poles elsewhere have
//! to be removed by the caller.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const SIGMA: f64 = 0.6122;
const MU: f64 = 0.5017;
const ALPHA: f64 = 0.6407;
const NU: f64 = 0.2645;

/// Default node count; the discretisation error is close to `e^{-1.36 n}`.
pub const DEFAULT_NODES: usize = 32;

/// Contour point and derivative for parameter θ.
#[inline]
fn talbot_point(theta: f64, scale: f64) -> (Complex64, Complex64) {
    let at = ALPHA * theta;
    let cot = at.cos() / at.sin();
    let s = Complex64::new(scale * (-SIGMA + MU * theta * cot), scale * NU * theta);
    let sin = at.sin();
    let ds = Complex64::new(scale * MU * (cot - at / (sin * sin)), scale * NU);
    (s, ds)
}

/// Result of a contour inversion with its crude error indicators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourValue {
    pub value: f64,
    /// Sum of absolute node contributions; roundoff is about `ε` times this.
    pub magnitude: f64,
}

pub(crate) fn talbot_raw<F>(f: &F, t: f64, nodes: usize) -> Result<ContourValue>
where
    F: Fn(Complex64) -> Complex64,
{
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("inversion time must be positive, got {t}")));
    }
    if nodes < 4 {
        return Err(Error::domain("contour inversion needs at least 4 nodes"));
    }
    let n = nodes + nodes % 2;
    let scale = n as f64 / t;
    let mut acc = 0.0;
    let mut mag = 0.0;
    for k in 0..n / 2 {
        let theta = (2 * k + 1) as f64 * PI / n as f64;
        let (s, ds) = talbot_point(theta, scale);
        let g = (s * t).exp() * f(s) * ds;
        if !(g.re.is_finite() && g.im.is_finite()) {
            return Err(Error::ContourFailure(format!(
                "non-finite integrand at node {k} (s = {s})"
            )));
        }
        acc += g.im;
        mag += g.norm();
    }
    let w = 2.0 / n as f64;
    Ok(ContourValue {
        value: w * acc,
        magnitude: w * mag,
    })
}

/// Inverse Laplace transform `f(t)` of `transform` by Talbot quadrature.
pub fn inv_laplace_contour<F>(transform: F, t: f64, nodes: usize) -> Result<f64>
where
    F: Fn(Complex64) -> Complex64,
{
    let v = talbot_raw(&transform, t, nodes)?;
    // a result many orders below the contour magnitude is roundoff-dominated
    if v.magnitude > 1e14 {
        return Err(Error::ContourFailure(format!(
            "contour magnitude {:e} overwhelms double precision",
            v.magnitude
        )));
    }
    Ok(v.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_powers() {
        let one = Complex64::new(1.0, 0.0);
        let v = inv_laplace_contour(|s| one / s, 1.0, 32).unwrap();
        assert!((v - 1.0).abs() < 1e-13, "{v}");
        let v = inv_laplace_contour(|s| one / (s * s), 2.0, 32).unwrap();
        assert!((v - 2.0).abs() < 1e-13, "{v}");
    }

    #[test]
    fn decaying_exponentials() {
        let one = Complex64::new(1.0, 0.0);
        for &a in &[0.5, 1.0, 2.0] {
            for &t in &[0.1, 1.0, 5.0] {
                let v = inv_laplace_contour(|s| one / (s + a), t, 32).unwrap();
                let exact = (-a * t).exp();
                assert!((v - exact).abs() < 1e-12, "a={a} t={t}: {v} vs {exact}");
            }
        }
    }

    #[test]
    fn rejects_bad_time() {
        let one = Complex64::new(1.0, 0.0);
        assert!(inv_laplace_contour(|s| one / s, 0.0, 32).is_err());
    }
}
