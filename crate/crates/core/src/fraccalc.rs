//! Riemann–Liouville and Caputo operators on uniformly sampled functions.
//!
//! All operators return samples on the input grid. Convolutions use
//! product-integration weights for a piecewise-linear interpolant, so the
//! weakly singular kernel is integrated exactly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::gamma;

/// Samples `values[i] = f(t0 + i·dt)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction {
    pub t0: f64,
    pub dt: f64,
    pub values: Vec<f64>,
    /// Set when `values[0]` was extrapolated rather than computed.
    #[serde(default)]
    pub origin_flagged: bool,
}

impl SampledFunction {
    pub fn new(t0: f64, dt: f64, values: Vec<f64>) -> Result<Self> {
        let s = Self {
            t0,
            dt,
            values,
            origin_flagged: false,
        };
        s.validate()?;
        Ok(s)
    }

    /// Samples `f` at `n` points starting from `t0`.
    pub fn from_fn<F: Fn(f64) -> f64>(t0: f64, dt: f64, n: usize, f: F) -> Result<Self> {
        Self::new(t0, dt, (0..n).map(|i| f(t0 + i as f64 * dt)).collect())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t0 >= 0.0 && self.t0.is_finite()) {
            return Err(Error::domain(format!("t0 must be finite and >= 0, got {}", self.t0)));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::domain(format!("dt must be positive, got {}", self.dt)));
        }
        if self.values.len() < 2 {
            return Err(Error::domain("a sampled function needs at least 2 samples"));
        }
        if let Some(i) = self.values.iter().position(|v| !v.is_finite()) {
            return Err(Error::domain(format!("sample {i} is not finite")));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn time(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.dt
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| self.time(i))
    }

    fn with_values(&self, values: Vec<f64>, origin_flagged: bool) -> Self {
        Self {
            t0: self.t0,
            dt: self.dt,
            values,
            origin_flagged,
        }
    }
}

fn require_origin(f: &SampledFunction) -> Result<()> {
    f.validate()?;
    if f.t0 != 0.0 {
        return Err(Error::domain(format!(
            "fractional operators need samples starting at t = 0, got t0 = {}",
            f.t0
        )));
    }
    Ok(())
}

/// k^p with 0^p = 0 for every p, including p = 0.
#[inline]
fn pw(k: f64, p: f64) -> f64 {
    if k == 0.0 {
        0.0
    } else {
        k.powf(p)
    }
}

/// Riemann–Liouville integral of order μ > 0.
pub fn rl_integral(f: &SampledFunction, mu: f64) -> Result<SampledFunction> {
    require_origin(f)?;
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::domain(format!("integration order must be positive, got {mu}")));
    }
    let v = &f.values;
    let p = mu + 1.0;
    // a_k = (k+1)^{μ+1} − 2k^{μ+1} + (k−1)^{μ+1} for interior nodes at lag k
    let w: Vec<f64> = (0..v.len() + 1).map(|k| pw(k as f64, p)).collect();
    let scale = f.dt.powf(mu) / gamma(mu + 2.0);
    let out: Vec<f64> = (0..v.len())
        .into_par_iter()
        .map(|n| {
            if n == 0 {
                return 0.0;
            }
            let nf = n as f64;
            let mut acc = (w[n - 1] - (nf - 1.0 - mu) * nf.powf(mu)) * v[0] + v[n];
            for (j, vj) in v.iter().enumerate().take(n).skip(1) {
                let k = n - j;
                acc += (w[k + 1] - 2.0 * w[k] + w[k - 1]) * vj;
            }
            scale * acc
        })
        .collect();
    Ok(f.with_values(out, false))
}

/// Riemann–Liouville derivative of order μ ∈ (0, 1): d/dt I^{1−μ} f.
pub fn rl_derivative(f: &SampledFunction, mu: f64) -> Result<SampledFunction> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::domain(format!("derivative order must lie in (0, 1), got {mu}")));
    }
    let g = rl_integral(f, 1.0 - mu)?;
    Ok(f.with_values(differentiate(&g.values, f.dt), true))
}

/// First derivative by central differences, second-order one-sided at the ends.
fn differentiate(g: &[f64], dt: f64) -> Vec<f64> {
    let n = g.len();
    if n == 2 {
        let d = (g[1] - g[0]) / dt;
        return vec![d, d];
    }
    let mut d = vec![0.0; n];
    d[0] = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * dt);
    for i in 1..n - 1 {
        d[i] = (g[i + 1] - g[i - 1]) / (2.0 * dt);
    }
    d[n - 1] = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * dt);
    d
}

/// Caputo derivative of order β ∈ (0, 1] by the L1 scheme. β = 1 gives the
/// backward difference.
pub fn caputo_derivative(f: &SampledFunction, beta: f64) -> Result<SampledFunction> {
    require_origin(f)?;
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::domain(format!("Caputo order must lie in (0, 1], got {beta}")));
    }
    let v = &f.values;
    let n = v.len();
    let p = 1.0 - beta;
    let b: Vec<f64> = (0..n).map(|k| pw(k as f64 + 1.0, p) - pw(k as f64, p)).collect();
    let scale = f.dt.powf(-beta) / gamma(2.0 - beta);
    let mut out: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|m| {
            let mut acc = 0.0;
            for j in 0..m {
                acc += b[m - 1 - j] * (v[j + 1] - v[j]);
            }
            scale * acc
        })
        .collect();
    out[0] = if n > 2 { 2.0 * out[1] - out[2] } else { out[1] };
    Ok(f.with_values(out, true))
}

/// Which of the two flux expressions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FluxForm {
    /// J = −D · RL-D^{1−β} ∇c; consistent with mass balance.
    #[default]
    RlDerivative,
    /// J = −D · RL-I^β ∇c.
    RlIntegral,
}

/// Generalised flux from time samples of the concentration gradient at a
/// fixed position.
pub fn generalized_flux(
    c_gradient: &SampledFunction,
    beta: f64,
    d_beta: f64,
    form: FluxForm,
) -> Result<SampledFunction> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::domain(format!("flux order must lie in (0, 1], got {beta}")));
    }
    if !(d_beta > 0.0 && d_beta.is_finite()) {
        return Err(Error::domain(format!("diffusivity must be positive, got {d_beta}")));
    }
    let raw = match form {
        FluxForm::RlDerivative if beta == 1.0 => {
            c_gradient.validate()?;
            c_gradient.clone()
        }
        FluxForm::RlDerivative => rl_derivative(c_gradient, 1.0 - beta)?,
        FluxForm::RlIntegral => rl_integral(c_gradient, beta)?,
    };
    let values = raw.values.iter().map(|g| -d_beta * g).collect();
    Ok(c_gradient.with_values(values, raw.origin_flagged))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, f: impl Fn(f64) -> f64) -> SampledFunction {
        SampledFunction::from_fn(0.0, 1.0 / (n - 1) as f64, n, f).unwrap()
    }

    fn max_err(s: &SampledFunction, from: usize, f: impl Fn(f64) -> f64) -> f64 {
        (from..s.len())
            .map(|i| (s.values[i] - f(s.time(i))).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn integral_of_constant_and_line() {
        let one = grid(101, |_| 1.0);
        assert!(max_err(&rl_integral(&one, 1.0).unwrap(), 0, |t| t) < 1e-12);
        let half = rl_integral(&one, 0.5).unwrap();
        assert!(max_err(&half, 0, |t| 2.0 * (t / std::f64::consts::PI).sqrt()) < 1e-12);
        let line = grid(101, |t| t);
        assert!(max_err(&rl_integral(&line, 1.0).unwrap(), 0, |t| t * t / 2.0) < 1e-4);
    }

    #[test]
    fn rl_derivative_power_rule() {
        let f = grid(401, |t| t);
        let d = rl_derivative(&f, 0.5).unwrap();
        let want = |t: f64| t.sqrt() / gamma(1.5);
        assert!(max_err(&d, 20, want) < 1e-3);
        assert!(d.origin_flagged);
        let zero = grid(11, |_| 0.0);
        assert!(rl_derivative(&zero, 0.3).unwrap().values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn caputo_examples() {
        let c = grid(101, |_| 3.0);
        assert!(caputo_derivative(&c, 0.5).unwrap().values.iter().all(|&v| v == 0.0));
        let f = grid(201, |t| t);
        let d = caputo_derivative(&f, 0.5).unwrap();
        assert!((d.values[200] - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-12);
        let d = caputo_derivative(&f, 0.999).unwrap();
        assert!(d.values.iter().all(|v| (v - 1.0).abs() < 1e-2));
        let d = caputo_derivative(&f, 1.0).unwrap();
        assert!(d.values.iter().all(|v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn flux_reductions() {
        let g = grid(51, |_| 2.0);
        let j = generalized_flux(&g, 1.0, 3.0, FluxForm::RlDerivative).unwrap();
        assert!(j.values.iter().all(|&v| v == -6.0));
        let z = grid(51, |_| 0.0);
        let j = generalized_flux(&z, 0.5, 3.0, FluxForm::RlIntegral).unwrap();
        assert!(j.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SampledFunction::new(0.0, 0.1, vec![1.0]).is_err());
        assert!(SampledFunction::new(0.0, 0.0, vec![1.0, 2.0]).is_err());
        assert!(SampledFunction::new(0.0, 0.1, vec![1.0, f64::NAN]).is_err());
        let f = SampledFunction::new(1.0, 0.1, vec![1.0, 2.0]).unwrap();
        assert!(rl_integral(&f, 0.5).is_err());
        let f = grid(5, |t| t);
        assert!(rl_integral(&f, 0.0).is_err());
        assert!(caputo_derivative(&f, 1.5).is_err());
    }
}
