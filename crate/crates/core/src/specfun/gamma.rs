//! Gamma-function helpers.
//!
//! `libm::tgamma`/`lgamma` provide the primitive; this module adds the
//! reciprocal gamma with exact zeros at the poles, computed through the
//! reflection formula for negative arguments.

use std::f64::consts::PI;

/// Largest argument for which `tgamma` stays finite.
pub(crate) const GAMMA_OVERFLOW: f64 = 171.0;

#[inline]
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // reduce to r in [-1, 1]
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// Returns true when `x` is a pole of Γ (0, −1, −2, ...).
#[inline]
pub fn is_gamma_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// 1/Γ(x), exactly zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_gamma_pole(x) {
        return 0.0;
    }
    if x > 0.0 {
        if x < GAMMA_OVERFLOW {
            1.0 / gamma(x)
        } else {
            (-ln_gamma(x)).exp()
        }
    } else {
        // 1/Γ(x) = sin(πx) Γ(1−x) / π
        let s = sin_pi(x);
        let y = 1.0 - x;
        if y < GAMMA_OVERFLOW {
            s * gamma(y) / PI
        } else {
            s.signum() * (s.abs().ln() + ln_gamma(y) - PI.ln()).exp()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_pi_zeros_are_exact() {
        for k in -6..=6 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(-0.5) + 1.0).abs() < 1e-16);
        assert!((sin_pi(2.25) - (PI * 0.25).sin()).abs() < 1e-15);
    }

    #[test]
    fn rgamma_matches_reciprocal_and_vanishes_at_poles() {
        for &x in &[0.3, 1.0, 2.5, 7.1] {
            assert!((rgamma(x) * gamma(x) - 1.0).abs() < 1e-14);
        }
        for k in 0..8 {
            assert_eq!(rgamma(-(k as f64)), 0.0);
        }
        // Γ(−0.5) = −2√π
        let expect = -1.0 / (2.0 * PI.sqrt());
        assert!((rgamma(-0.5) - expect).abs() < 1e-15);
        // deep negative argument goes through the log branch
        let x = -170.5;
        assert!((rgamma(x) / rgamma(x + 1.0) - x).abs() < 1e-10 * x.abs());
    }
}
