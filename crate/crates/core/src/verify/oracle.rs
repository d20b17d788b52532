//! Reference values that do not go through the production evaluators:
//! classical closed forms, image-series solutions and subordination
//! integrals.

use std::f64::consts::PI;

use crate::error::Result;
use crate::specfun::mw;
use crate::transforms::{integrate_pieces, integrate_to_infinity, QuadratureSpec};

/// M_{1/2}(z) = e^{−z²/4}/√π.
pub fn gaussian_m_half(z: f64) -> f64 {
    (-z * z / 4.0).exp() / PI.sqrt()
}

pub fn heat_kernel_1d(d: f64, x: f64, t: f64) -> f64 {
    (-x * x / (4.0 * d * t)).exp() / (4.0 * PI * d * t).sqrt()
}

pub fn heat_kernel_2d(d: f64, r: f64, t: f64) -> f64 {
    (-r * r / (4.0 * d * t)).exp() / (4.0 * PI * d * t)
}

pub fn cauchy(scale: f64, x: f64) -> f64 {
    scale / (PI * (scale * scale + x * x))
}

/// Sum of `term(n)` for n = 0, 1, … until two successive terms are
/// negligible; the image series below decay like erfc of a growing argument.
fn image_sum(term: impl Fn(usize) -> f64) -> f64 {
    let mut sum = 0.0;
    let mut quiet = 0;
    for n in 0..10_000 {
        let v = term(n);
        sum += v;
        if v.abs() <= 1e-18 * sum.abs().max(1e-300) {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    sum
}

/// Fickian sheet −L ≤ x ≤ L held at c0 on both faces, zero initial
/// concentration, by the method of images.
pub fn sheet_equal_images(c0: f64, l: f64, d: f64, x: f64, t: f64) -> f64 {
    let s = 2.0 * (d * t).sqrt();
    c0 * image_sum(|n| {
        let m = (2 * n + 1) as f64 * l;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sign * (libm::erfc((m - x) / s) + libm::erfc((m + x) / s))
    })
}

/// Fickian sheet 0 ≤ x ≤ L with faces at c1 (x = 0) and c2 (x = L), zero
/// initial concentration, by the method of images.
pub fn sheet_unequal_images(c1: f64, c2: f64, l: f64, d: f64, x: f64, t: f64) -> f64 {
    let s = 2.0 * (d * t).sqrt();
    // unit concentration on the face at distance y, zero on the other face
    let one_face = |y: f64| {
        image_sum(|n| {
            let two_n = 2.0 * n as f64 * l;
            libm::erfc((two_n + y) / s) - libm::erfc((two_n + 2.0 * l - y) / s)
        })
    };
    c1 * one_face(x) + c2 * one_face(l - x)
}

/// Fickian sheet with equal faces by the classical Fourier series with
/// exponential propagators and the 4/π prefactor.
pub fn sheet_equal_fourier(c0: f64, l: f64, d: f64, x: f64, t: f64, terms: usize) -> f64 {
    let mut sum = 0.0;
    for n in 0..terms {
        let m = (2 * n + 1) as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let lam = m * PI / (2.0 * l);
        sum += sign / m * (-lam * lam * d * t).exp() * (lam * x).cos();
    }
    c0 - 4.0 * c0 / PI * sum
}

/// Planar time-fractional point source as a subordinated heat kernel,
/// ∫₀^∞ G₂(r, u D t^β) M_β(u) du with G₂ the 2D heat kernel at unit D.
pub fn radial_subordinated(beta: f64, d: f64, r: f64, t: f64, q: &QuadratureSpec) -> Result<f64> {
    let a2 = d * t.powf(beta);
    let f = |u: f64| {
        if u <= 0.0 {
            return 0.0;
        }
        let m = mw(beta, u).unwrap_or(f64::NAN);
        (-r * r / (4.0 * a2 * u)).exp() / (4.0 * PI * a2 * u) * m
    };
    let head = integrate_pieces(f, &[0.0, 0.05, 0.25, 1.0, 2.0, 4.0, 8.0], q).require("subordination integral")?;
    let tail = integrate_to_infinity(f, 8.0, q).require("subordination integral tail")?;
    Ok(head.value + tail.value)
}
