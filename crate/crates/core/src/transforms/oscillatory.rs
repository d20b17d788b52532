//! Summation of oscillatory integrals panel by panel with Wynn's
//! epsilon acceleration of the partial sums.

use crate::error::{Error, Result};

use super::quadrature::{integrate, QuadratureSpec};

/// Wynn epsilon extrapolation of a sequence of partial sums.
///
/// Returns the extrapolated limit and an error estimate taken from the two
/// most recent even-column entries.
pub fn wynn_epsilon(partial: &[f64]) -> (f64, f64) {
    let n = partial.len();
    if n == 0 {
        return (0.0, f64::INFINITY);
    }
    if n < 3 {
        let last = partial[n - 1];
        let err = if n == 2 {
            (partial[1] - partial[0]).abs()
        } else {
            f64::INFINITY
        };
        return (last, err);
    }
    // eps[k] holds the current column
    let mut prev: Vec<f64> = vec![0.0; n + 1];
    let mut cur: Vec<f64> = partial.to_vec();
    let mut best = partial[n - 1];
    let mut best_prev = partial[n - 2];
    let mut col = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        let mut broke = false;
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 || !d.is_finite() {
                broke = true;
                break;
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        if broke {
            break;
        }
        col += 1;
        if col % 2 == 0 && !next.is_empty() {
            let m = next.len();
            if next[m - 1].is_finite() {
                best = next[m - 1];
                best_prev = if m >= 2 { next[m - 2] } else { cur[cur.len() - 1] };
            }
        }
        prev = cur;
        cur = next;
    }
    (best, (best - best_prev).abs())
}

/// Integrates `f` over `[breaks[0], ∞)` given a generator of successive
/// breakpoints (typically half-periods or zeros of the oscillating factor).
///
/// Panels are added until the accelerated estimate stabilises within the
/// tolerance of `q`, or until the panel contributions themselves are below
/// `q.abs_tol`.
pub fn oscillatory_half_line<F, B>(f: F, mut breakpoint: B, q: &QuadratureSpec) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
    B: FnMut(usize) -> f64,
{
    let inner = QuadratureSpec {
        abs_tol: q.abs_tol * 0.01,
        rel_tol: q.rel_tol * 0.01,
        max_panels: 400,
        tail_cutoff: q.tail_cutoff,
    };
    let mut partial: Vec<f64> = Vec::new();
    let mut sum = 0.0;
    let mut quad_err = 0.0;
    let mut a = breakpoint(0);
    let mut small_run = 0;
    let mut last_est = f64::NAN;
    let mut stable_run = 0;
    for m in 1..=q.max_panels {
        let b = breakpoint(m);
        let r = integrate(&f, a, b, &inner);
        if !r.value.is_finite() {
            return Err(Error::QuadratureFailure(format!("non-finite panel on [{a}, {b}]")));
        }
        sum += r.value;
        quad_err += r.abs_err;
        partial.push(sum);
        a = b;

        let tol = q.abs_tol.max(q.rel_tol * sum.abs());
        if r.value.abs() < 0.1 * tol {
            small_run += 1;
            if small_run >= 3 {
                return Ok((sum, quad_err + r.value.abs()));
            }
        } else {
            small_run = 0;
        }
        if partial.len() >= 6 {
            // extrapolate from a bounded window of recent partial sums
            let start = partial.len().saturating_sub(24);
            let (est, err) = wynn_epsilon(&partial[start..]);
            let tol = q.abs_tol.max(q.rel_tol * est.abs());
            if (est - last_est).abs() <= tol && err <= 10.0 * tol {
                stable_run += 1;
                if stable_run >= 2 {
                    return Ok((est, quad_err + (est - last_est).abs()));
                }
            } else {
                stable_run = 0;
            }
            last_est = est;
        }
    }
    Err(Error::QuadratureFailure(format!(
        "oscillatory sum did not settle within {} panels (last estimate {last_est:e})",
        q.max_panels
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wynn_accelerates_leibniz_series() {
        let mut partial = Vec::new();
        let mut s = 0.0;
        for k in 0..20 {
            s += if k % 2 == 0 { 1.0 } else { -1.0 } / (2 * k + 1) as f64;
            partial.push(s);
        }
        let (est, _) = wynn_epsilon(&partial);
        assert!((est - std::f64::consts::FRAC_PI_4).abs() < 1e-12, "{est}");
    }

    #[test]
    fn sine_integral_dirichlet() {
        // ∫_0^∞ sin(x)/x dx = π/2
        let q = QuadratureSpec::default();
        let f = |x: f64| if x == 0.0 { 1.0 } else { x.sin() / x };
        let (v, _) = oscillatory_half_line(f, |m| m as f64 * std::f64::consts::PI, &q).unwrap();
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-9, "{v}");
    }
}
