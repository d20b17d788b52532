//! Symmetric Lévy stable density with characteristic function exp(−|k|^α).

use std::f64::consts::PI;

use crate::error::Result;
use crate::transforms::oscillatory::oscillatory_half_line;
use crate::transforms::quadrature::QuadratureSpec;

use super::gamma::{gamma, ln_gamma};
use super::order::{EvalOutcome, FracOrder, Method, OrderRole};

const EPS: f64 = f64::EPSILON;
const MAX_TAIL_TERMS: usize = 400;

/// L⁰_α(x) for α = `two_mu` ∈ (0, 2].
///
/// The cosine integral (1/π)∫₀^∞ cos(kx) e^{−k^α} dk is summed over
/// half-periods of cos(kx) with epsilon acceleration. For large |x| the
/// algebraic tail expansion is used when it resolves the value to full
/// precision (convergent for α < 1, asymptotic for α > 1).
pub fn levy_stable_sym(two_mu: FracOrder, x: f64) -> Result<EvalOutcome> {
    two_mu.expect_role(OrderRole::Levy)?;
    if x.is_nan() {
        return Err(crate::error::Error::domain("argument is NaN"));
    }
    let alpha = two_mu.value();
    let ax = x.abs();
    if ax == f64::INFINITY {
        return Ok(EvalOutcome::new(0.0, 0.0, Method::Asymptotic));
    }
    if ax == 0.0 {
        return Ok(EvalOutcome::new(gamma(1.0 + 1.0 / alpha) / PI, EPS, Method::ClosedForm));
    }
    if alpha < 2.0 && ax > 1.0 {
        if let Some((v, err)) = tail_series(alpha, ax, 0) {
            return Ok(EvalOutcome::new(v, err, Method::Asymptotic));
        }
    }
    let q = QuadratureSpec {
        abs_tol: 1e-16,
        rel_tol: 1e-12,
        max_panels: 20_000,
        tail_cutoff: 1.0,
    };
    let half = PI / ax;
    let f = |k: f64| (k * ax).cos() * (-k.powf(alpha)).exp();
    let (v, err) = oscillatory_half_line(f, |m| if m == 0 { 0.0 } else { (m as f64 - 0.5) * half }, &q)?;
    Ok(EvalOutcome::new(
        v / PI,
        err / PI + 4.0 * EPS * (v / PI).abs(),
        Method::Quadrature,
    ))
}

/// L⁰_α(x) with a freshly validated order.
pub fn levy(two_mu: f64, x: f64) -> Result<f64> {
    levy_stable_sym(FracOrder::levy(two_mu)?, x).map(|o| o.value)
}

/// Mass of L⁰_α on (x, ∞) for x > 0 from the term-wise integrated tail
/// expansion; `None` when the expansion does not resolve it.
pub fn levy_tail_mass(two_mu: FracOrder, x: f64) -> Option<(f64, f64)> {
    let alpha = two_mu.value();
    if alpha >= 2.0 || !(x > 0.0) {
        return None;
    }
    tail_series(alpha, x, 1)
}

/// (1/π) Σ (−1)^{n+1} Γ(nα+1)/n! sin(nαπ/2) x^{−nα−1}, or its antiderivative
/// tail Σ … x^{−nα}/(nα) when `integrated == 1`.
fn tail_series(alpha: f64, x: f64, integrated: u8) -> Option<(f64, f64)> {
    let ln_x = x.ln();
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut min_mag = f64::INFINITY;
    for n in 1..=MAX_TAIL_TERMS {
        let nf = n as f64;
        let na = nf * alpha;
        let mut ln_mag = ln_gamma(na + 1.0) - ln_gamma(nf + 1.0) - na * ln_x;
        if integrated == 0 {
            ln_mag -= ln_x;
        } else {
            ln_mag -= na.ln();
        }
        let mag = ln_mag.exp() / PI;
        if mag > min_mag {
            // divergent branch reached before the terms became negligible
            break;
        }
        min_mag = mag;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * mag * (0.5 * na * PI).sin();
        sum += term;
        abs_sum += term.abs();
        if mag <= 0.5 * EPS * sum.abs() {
            let err = mag + 4.0 * EPS * abs_sum;
            return (err <= 1e-13 * sum.abs()).then_some((sum, err));
        }
    }
    None
}
