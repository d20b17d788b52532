//! M-Wright function M_ν and the fractional error functions
//! N_ν(z) = ∫₀^z M_ν(|ξ|) dξ and K_ν(z) = 1 − N_ν(z).
//!
//! Small arguments use the power series
//! M_ν(z) = (1/π) Σ_{m≥1} (−z)^{m−1}/(m−1)! · Γ(νm) sin(πνm).
//! Once that series cancels too heavily, both functions switch to the
//! non-oscillatory integral representations over φ ∈ (0, π)
//!
//!   M_ν(z) = z^{ν/(1−ν)} / (π(1−ν)) · ∫ U(φ) exp(−z^{1/(1−ν)} U(φ)) dφ
//!   K_ν(z) = (1/π) ∫ exp(−z^{1/(1−ν)} U(φ)) dφ
//!
//! with U(φ) = (sin νφ / sin φ)^{1/(1−ν)} · sin((1−ν)φ) / sin νφ, which keep
//! full relative accuracy deep into the tail.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::transforms::quadrature::{integrate, QuadratureSpec};

use super::gamma::{gamma, ln_gamma, rgamma, sin_pi, GAMMA_OVERFLOW};
use super::order::{EvalOutcome, FracOrder, Method, OrderRole, SeriesControl};

const EPS: f64 = f64::EPSILON;

/// M-Wright (Mainardi) function M_ν(z) for z ≥ 0.
pub fn m_wright(nu: FracOrder, z: f64, ctrl: &SeriesControl) -> Result<EvalOutcome> {
    nu.expect_role(OrderRole::MWright)?;
    ctrl.validate()?;
    let v = nu.value();
    if !(z >= 0.0) {
        return Err(Error::domain(format!("M-Wright argument must be >= 0, got {z}")));
    }
    let degraded = nu.degraded_precision();
    if z == f64::INFINITY {
        return Ok(EvalOutcome::new(0.0, 0.0, Method::Asymptotic).degraded(degraded));
    }
    if z == 0.0 {
        return Ok(EvalOutcome::new(rgamma(1.0 - v), 0.0, Method::Series).degraded(degraded));
    }
    let s = wright_series(v, z, ctrl, SeriesKind::Density);
    if s.converged && ctrl.accepts(s.err, s.sum) {
        return Ok(EvalOutcome::new(s.sum, s.err, Method::Series).degraded(degraded));
    }
    match m_integral(v, z, ctrl) {
        Ok((value, err)) => Ok(EvalOutcome::new(value, err, Method::Quadrature).degraded(degraded)),
        Err(e) => {
            if s.converged && s.max_term <= ctrl.cancellation_guard * s.sum.abs() {
                Ok(EvalOutcome::new(s.sum, s.err, Method::Series).degraded(true))
            } else {
                Err(e)
            }
        }
    }
}

/// Fractional error function N_ν(z), odd in z.
pub fn frac_erf(nu: FracOrder, z: f64, ctrl: &SeriesControl) -> Result<EvalOutcome> {
    nu.expect_role(OrderRole::ErrorFn)?;
    ctrl.validate()?;
    if z.is_nan() {
        return Err(Error::domain("argument is NaN"));
    }
    let v = nu.value();
    let degraded = nu.degraded_precision();
    let sign = if z < 0.0 { -1.0 } else { 1.0 };
    let a = z.abs();
    if a == 0.0 {
        return Ok(EvalOutcome::new(0.0 * sign, 0.0, Method::Series).degraded(degraded));
    }
    if a == f64::INFINITY {
        return Ok(EvalOutcome::new(sign, 0.0, Method::Asymptotic).degraded(degraded));
    }
    let s = wright_series(v, a, ctrl, SeriesKind::Integrated);
    if s.converged && ctrl.accepts(s.err, s.sum) {
        return Ok(EvalOutcome::new(sign * s.sum, s.err, Method::Series).degraded(degraded));
    }
    let (tail, err) = k_integral(v, a, ctrl)?;
    let value = 1.0 - tail;
    Ok(EvalOutcome::new(sign * value, err + EPS, Method::Quadrature).degraded(degraded))
}

/// Fractional complementary error function K_ν(z) = 1 − N_ν(z).
pub fn frac_erfc(nu: FracOrder, z: f64, ctrl: &SeriesControl) -> Result<EvalOutcome> {
    let n = frac_erf(nu, z, ctrl)?;
    Ok(EvalOutcome {
        value: 1.0 - n.value,
        ..n
    })
}

/// M_ν(|x|) with default controls.
pub fn mw(nu: f64, x: f64) -> Result<f64> {
    m_wright(FracOrder::m_wright(nu)?, x.abs(), &SeriesControl::default()).map(|o| o.value)
}

/// N_ν(z) with default controls.
pub fn n_erf(nu: f64, z: f64) -> Result<f64> {
    frac_erf(FracOrder::error_fn(nu)?, z, &SeriesControl::default()).map(|o| o.value)
}

/// K_ν(z) with default controls.
pub fn k_erfc(nu: f64, z: f64) -> Result<f64> {
    frac_erfc(FracOrder::error_fn(nu)?, z, &SeriesControl::default()).map(|o| o.value)
}

/// The reciprocal-gamma form Σ_{n≥0} (−z)^n / (n! Γ(1 − ν − νn)),
/// summed naively for `terms` terms. Exposed to cross-check the sine form.
pub fn m_wright_series_reciprocal(nu: f64, z: f64, terms: usize) -> f64 {
    if z == 0.0 {
        return rgamma(1.0 - nu);
    }
    let mut sum = 0.0;
    let ln_z = z.ln();
    for n in 0..terms {
        let x = 1.0 - nu - nu * n as f64;
        let r = rgamma(x);
        if r == 0.0 {
            continue;
        }
        let sign = if n % 2 == 1 { -r.signum() } else { r.signum() };
        // 1/|Γ(x)| = Γ(1 − x)|sin πx|/π keeps large n representable
        let ln_r = if r.is_finite() && x > 0.0 {
            r.abs().ln()
        } else {
            ln_gamma(1.0 - x) + sin_pi(x).abs().ln() - PI.ln()
        };
        sum += sign * (n as f64 * ln_z - ln_gamma(n as f64 + 1.0) + ln_r).exp();
    }
    sum
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SeriesKind {
    /// M_ν(z)
    Density,
    /// N_ν(z): term m integrates to z^m/m!
    Integrated,
}

struct WrightSeries {
    sum: f64,
    err: f64,
    max_term: f64,
    converged: bool,
}

fn wright_series(nu: f64, z: f64, ctrl: &SeriesControl, kind: SeriesKind) -> WrightSeries {
    // magnitude above which the series cannot meet rel_tol for any result
    // of size ≤ bound
    let bound = if kind == SeriesKind::Density {
        2.0 / (1.0 - nu)
    } else {
        1.0
    };
    let abort = bound * ctrl.rel_tol / (8.0 * EPS);
    let ln_z = z.ln();
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut max_term: f64 = 0.0;
    // p = (−z)^{m−1}/(m−1)!  (density) or (−1)^{m−1} z^m/m!  (integrated)
    let mut p = if kind == SeriesKind::Density { 1.0 } else { z };
    let mut small = 0;
    let mut converged = false;
    for m in 1..=ctrl.max_terms {
        let mf = m as f64;
        let arg = nu * mf;
        let s = sin_pi(arg);
        let env = if p != 0.0 && p.abs() > 1e-280 && arg < GAMMA_OVERFLOW {
            p.abs() * gamma(arg) / PI
        } else {
            let ln_p = if kind == SeriesKind::Density {
                (mf - 1.0) * ln_z - ln_gamma(mf)
            } else {
                mf * ln_z - ln_gamma(mf + 1.0)
            };
            (ln_p + ln_gamma(arg) - PI.ln()).exp()
        };
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * env * s;
        sum += term;
        abs_sum += term.abs();
        max_term = max_term.max(term.abs());
        if env > abort {
            break;
        }
        // envelope decreases monotonically once m exceeds the peak index
        let past_peak = mf > 2.0 && env < max_term.max(1e-300) || mf > 2.0 && max_term == 0.0;
        if past_peak && (env <= 0.25 * EPS * sum.abs() || env <= ctrl.abs_tol) {
            small += 1;
            if small >= 3 {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
        p = if kind == SeriesKind::Density {
            p * z / mf
        } else {
            p * z / (mf + 1.0)
        };
    }
    WrightSeries {
        sum,
        err: 8.0 * EPS * abs_sum,
        max_term,
        converged,
    }
}

/// ln(sin x / x), accurate near 0.
fn ln_sinc(x: f64) -> f64 {
    let s = x * x;
    if s < 0.09 {
        -s * (1.0 / 6.0
            + s * (1.0 / 180.0
                + s * (1.0 / 2835.0 + s * (1.0 / 37800.0 + s * (1.0 / 467775.0 + s * 691.0 / 3831077250.0)))))
    } else {
        (x.sin() / x).ln()
    }
}

/// ln(U(φ)/U(0)) for U(φ) = (sin νφ / sin φ)^{1/(1−ν)} · sin((1−ν)φ) / sin νφ;
/// U(0) = ν^{ν/(1−ν)} (1−ν) is the minimum.
#[inline]
fn zolotarev_log_ratio(nu: f64, phi: f64) -> f64 {
    let inv = 1.0 / (1.0 - nu);
    let lv = ln_sinc(nu * phi);
    inv * (lv - ln_sinc(phi)) + ln_sinc((1.0 - nu) * phi) - lv
}

/// Exponent w(U − U0) and ratio U/U0, or `None` where U is infinite.
#[inline]
fn zolotarev_terms(nu: f64, phi: f64, w_u0: f64) -> Option<(f64, f64)> {
    let d = zolotarev_log_ratio(nu, phi);
    if !d.is_finite() {
        return None;
    }
    Some((w_u0 * d.exp_m1(), d.exp()))
}

fn phi_quadrature(ctrl: &SeriesControl) -> QuadratureSpec {
    QuadratureSpec {
        abs_tol: 1e-300,
        rel_tol: (0.05 * ctrl.rel_tol).max(4.0 * EPS),
        max_panels: 4000,
        tail_cutoff: 1.0,
    }
}

struct Scaled {
    inv: f64,
    w: f64,
    u0: f64,
}

fn scaled(nu: f64, z: f64) -> Scaled {
    let inv = 1.0 / (1.0 - nu);
    Scaled {
        inv,
        w: z.powf(inv),
        u0: nu.powf(nu * inv) * (1.0 - nu),
    }
}

/// M_ν(z) through the φ-integral; returns (value, error estimate).
fn m_integral(nu: f64, z: f64, ctrl: &SeriesControl) -> Result<(f64, f64)> {
    let Scaled { inv, w, u0 } = scaled(nu, z);
    let w_u0 = w * u0;
    let f = |phi: f64| match zolotarev_terms(nu, phi, w_u0) {
        Some((e, ratio)) if e < 745.0 => ratio * (-e).exp(),
        _ => 0.0,
    };
    let r = integrate(f, 0.0, PI, &phi_quadrature(ctrl)).require("M-Wright phi integral")?;
    if r.value <= 0.0 {
        return Ok((0.0, 0.0));
    }
    let ln_m = -(PI.ln()) + inv.ln() + nu * inv * z.ln() + u0.ln() - w_u0 + r.value.ln();
    let value = ln_m.exp();
    let rel = r.abs_err / r.value + 4.0 * EPS * (1.0 + ln_m.abs());
    Ok((value, value * rel))
}

/// K_ν(z), z > 0, through the φ-integral; returns (value, error estimate).
fn k_integral(nu: f64, z: f64, ctrl: &SeriesControl) -> Result<(f64, f64)> {
    let Scaled { w, u0, .. } = scaled(nu, z);
    let w_u0 = w * u0;
    let f = |phi: f64| match zolotarev_terms(nu, phi, w_u0) {
        Some((e, _)) if e < 745.0 => (-e).exp(),
        _ => 0.0,
    };
    let r = integrate(f, 0.0, PI, &phi_quadrature(ctrl)).require("K phi integral")?;
    if r.value <= 0.0 {
        return Ok((0.0, 0.0));
    }
    let ln_k = -(PI.ln()) - w_u0 + r.value.ln();
    let value = ln_k.exp();
    let rel = r.abs_err / r.value + 4.0 * EPS * (1.0 + ln_k.abs());
    Ok((value, value * rel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(nu: f64, z: f64) -> EvalOutcome {
        m_wright(FracOrder::m_wright(nu).unwrap(), z, &SeriesControl::default()).unwrap()
    }

    fn gauss(z: f64) -> f64 {
        (-z * z / 4.0).exp() / PI.sqrt()
    }

    #[test]
    fn half_order_is_gaussian() {
        assert!((m(0.5, 0.0).value - 0.5641895835477563).abs() < 1e-15);
        assert!((m(0.5, 1.0).value - 0.4393912894677224).abs() < 1e-14);
        for i in 0..=200 {
            let z = 0.1 * i as f64;
            let v = m(0.5, z);
            let g = gauss(z);
            assert!(
                (v.value - g).abs() <= 1e-12 * g.max(1e-300) + 1e-300,
                "z={z} {} vs {g} ({})",
                v.value,
                v.method
            );
        }
    }

    #[test]
    fn value_at_origin() {
        assert!((m(0.25, 0.0).value - 0.816048939098263).abs() < 1e-15);
        for &nu in &[0.1, 0.3, 0.6, 0.9] {
            assert!((m(nu, 0.0).value * gamma(1.0 - nu) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn both_routes_agree_at_crossover() {
        let c = SeriesControl::default();
        for &nu in &[0.1, 0.25, 0.4, 0.6, 0.65] {
            for &z in &[0.8, 1.5, 2.5] {
                let s = wright_series(nu, z, &c, SeriesKind::Density);
                let (q, _) = m_integral(nu, z, &c).unwrap();
                let tol = 1e-11 * q.abs().max(1e-3);
                assert!((s.sum - q).abs() < tol, "nu={nu} z={z}: {} vs {q}", s.sum);
                let s = wright_series(nu, z, &c, SeriesKind::Integrated);
                let (k, _) = k_integral(nu, z, &c).unwrap();
                assert!((s.sum + k - 1.0).abs() < 1e-11, "nu={nu} z={z}");
            }
        }
    }

    #[test]
    fn sine_and_reciprocal_series_forms_agree() {
        let c = SeriesControl::default();
        for &nu in &[0.2, 0.5, 0.7] {
            for &z in &[0.1, 0.5, 1.0] {
                let a = m_wright_series_reciprocal(nu, z, 60);
                let b = wright_series(nu, z, &c, SeriesKind::Density).sum;
                assert!((a - b).abs() < 1e-14, "nu={nu} z={z}");
            }
        }
    }

    #[test]
    fn error_function_reductions() {
        let o = FracOrder::error_fn(0.5).unwrap();
        let c = SeriesControl::default();
        let v = frac_erf(o, 2.0, &c).unwrap().value;
        assert!((v - 0.8427007929497149).abs() < 1e-14);
        let v = frac_erf(o, -2.0, &c).unwrap().value;
        assert!((v + 0.8427007929497149).abs() < 1e-14);
        let v = frac_erfc(o, 2.0, &c).unwrap().value;
        assert!((v - 0.1572992070502851).abs() < 1e-14);
        assert_eq!(frac_erfc(o, 0.0, &c).unwrap().value, 1.0);
        let o3 = FracOrder::error_fn(0.3).unwrap();
        assert_eq!(frac_erf(o3, 0.0, &c).unwrap().value, 0.0);
        for i in -60..=60 {
            let z = 0.1 * i as f64;
            let n = frac_erf(o, z, &c).unwrap().value;
            assert!((n - libm::erf(z / 2.0)).abs() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn tail_limit() {
        let o = FracOrder::error_fn(0.4).unwrap();
        let k = frac_erfc(o, 50.0, &SeriesControl::default()).unwrap().value;
        assert!(k.abs() < 1e-12);
    }

    #[test]
    fn negative_argument_rejected() {
        let o = FracOrder::m_wright(0.3).unwrap();
        assert!(m_wright(o, -1.0, &SeriesControl::default()).is_err());
    }

    #[test]
    fn wrong_role_rejected() {
        let o = FracOrder::mittag_leffler(0.3).unwrap();
        assert!(m_wright(o, 1.0, &SeriesControl::default()).is_err());
    }
}
