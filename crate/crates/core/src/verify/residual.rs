//! Master-equation residuals and mass balance of the cataloged solutions.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraccalc::{caputo_derivative, SampledFunction};
use crate::solutions::{evaluate, radial2d_cauchy, ProblemSpec, Regime, TransportParams};
use crate::specfun::{levy, levy_tail_mass, FracOrder};
use crate::transforms::{integrate, integrate_pieces, integrate_to_infinity, QuadratureSpec};

/// Space-time sampling grid for residual evaluation. Times are
/// `i · t_max / nt` for `i = 0..=nt`; the residual is accumulated over
/// interior x nodes and times `≥ t_from`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub t_max: f64,
    pub nt: usize,
    pub t_from: f64,
}

impl ResidualGrid {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_min < self.x_max && self.x_min.is_finite() && self.x_max.is_finite()) {
            return Err(Error::domain("residual grid needs x_min < x_max"));
        }
        if self.nx < 3 || self.nt < 2 {
            return Err(Error::domain("residual grid needs nx >= 3 and nt >= 2"));
        }
        if !(self.t_max > 0.0 && self.t_from >= 0.0 && self.t_from < self.t_max) {
            return Err(Error::domain("residual grid needs 0 <= t_from < t_max"));
        }
        Ok(())
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx - 1) as f64
    }

    pub fn dt(&self) -> f64 {
        self.t_max / self.nt as f64
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.nx).map(|j| self.x_min + j as f64 * self.dx()).collect()
    }

    /// The same window with dx and dt halved.
    pub fn refined(&self) -> Self {
        Self {
            nx: 2 * self.nx - 1,
            nt: 2 * self.nt,
            ..*self
        }
    }
}

/// Initial concentration of a problem away from any source singularity.
fn initial_value(problem: &ProblemSpec, x: f64) -> Result<f64> {
    Ok(match *problem {
        ProblemSpec::PlaneSource { .. } => {
            if x == 0.0 {
                return Err(Error::domain("residual grid must avoid the plane source at x = 0"));
            }
            0.0
        }
        ProblemSpec::StepSource { c0 } => {
            if x < 0.0 {
                c0
            } else if x == 0.0 {
                0.5 * c0
            } else {
                0.0
            }
        }
        ProblemSpec::Signaling { c0 } => {
            if x == 0.0 {
                c0
            } else {
                0.0
            }
        }
        ProblemSpec::FiniteEqualBc { c0, l, .. } => {
            if x.abs() == l {
                c0
            } else {
                0.0
            }
        }
        ProblemSpec::FiniteUnequalBc { c1, c2, l, .. } => {
            if x == 0.0 {
                c1
            } else if x == l {
                c2
            } else {
                0.0
            }
        }
        ProblemSpec::Radial2dCauchy | ProblemSpec::SpaceFracCauchy => {
            return Err(Error::domain(format!(
                "{} has no one-dimensional local master equation",
                problem.name()
            )))
        }
    })
}

/// Time derivative operator of the master equation for the regime.
#[derive(Debug, Clone, Copy)]
enum TimeOperator {
    /// Caputo derivative of order β against D ∂²c/∂x².
    Caputo(f64),
    /// Classical ∂c/∂t against α t^{α−1} D ∂²c/∂x².
    Stretched(f64),
}

fn time_operator(p: &TransportParams) -> Result<TimeOperator> {
    match p.regime {
        Regime::Fickian => Ok(TimeOperator::Caputo(1.0)),
        Regime::TimeFractional if p.beta <= 1.0 => Ok(TimeOperator::Caputo(p.beta)),
        Regime::StretchedTime => Ok(TimeOperator::Stretched(p.alpha)),
        Regime::StretchedTimeFractional if p.alpha == p.beta && p.beta <= 1.0 => Ok(TimeOperator::Caputo(p.beta)),
        Regime::StretchedTimeFractional if p.beta == 1.0 => Ok(TimeOperator::Stretched(p.alpha)),
        _ => Err(Error::domain(format!(
            "no residual operator for regime {} with alpha = {}, beta = {}",
            p.regime, p.alpha, p.beta
        ))),
    }
}

/// Relative L2 residual of the regime's master equation for a sampled field
/// `c[j][i]` at `(x_j, t_i)`. A vanishing reference norm returns the
/// absolute residual norm instead.
pub fn field_residual(c: &[Vec<f64>], grid: &ResidualGrid, p: &TransportParams) -> Result<f64> {
    grid.validate()?;
    p.validate()?;
    let op = time_operator(p)?;
    if c.len() != grid.nx || c.iter().any(|row| row.len() != grid.nt + 1) {
        return Err(Error::domain("field shape does not match the residual grid"));
    }
    let dt = grid.dt();
    let dx2 = grid.dx() * grid.dx();
    let time_derivs: Vec<Vec<f64>> = c[1..grid.nx - 1]
        .par_iter()
        .map(|row| -> Result<Vec<f64>> {
            match op {
                TimeOperator::Caputo(beta) => {
                    let s = SampledFunction::new(0.0, dt, row.clone())?;
                    Ok(caputo_derivative(&s, beta)?.values)
                }
                TimeOperator::Stretched(_) => {
                    let n = row.len();
                    let mut d = vec![0.0; n];
                    for i in 1..n - 1 {
                        d[i] = (row[i + 1] - row[i - 1]) / (2.0 * dt);
                    }
                    d[n - 1] = (3.0 * row[n - 1] - 4.0 * row[n - 2] + row[n - 3]) / (2.0 * dt);
                    Ok(d)
                }
            }
        })
        .collect::<Result<_>>()?;

    let (mut num, mut den) = (0.0, 0.0);
    for j in 1..grid.nx - 1 {
        let dcdt = &time_derivs[j - 1];
        for i in 1..=grid.nt {
            let t = i as f64 * dt;
            if t < grid.t_from {
                continue;
            }
            let lap = (c[j + 1][i] - 2.0 * c[j][i] + c[j - 1][i]) / dx2;
            let rhs = match op {
                TimeOperator::Caputo(_) => p.d * lap,
                TimeOperator::Stretched(alpha) => alpha * t.powf(alpha - 1.0) * p.d * lap,
            };
            num += (dcdt[i] - rhs).powi(2);
            den += rhs * rhs;
        }
    }
    Ok(if den > 0.0 { (num / den).sqrt() } else { num.sqrt() })
}

/// Relative L2 residual of the master equation for a cataloged problem,
/// sampled on `grid` with the initial condition at t = 0.
pub fn pde_residual(problem: &ProblemSpec, p: &TransportParams, grid: &ResidualGrid) -> Result<f64> {
    problem.validate()?;
    grid.validate()?;
    time_operator(p)?;
    let dt = grid.dt();
    let c: Vec<Vec<f64>> = grid
        .xs()
        .par_iter()
        .map(|&x| -> Result<Vec<f64>> {
            let mut row = Vec::with_capacity(grid.nt + 1);
            row.push(initial_value(problem, x)?);
            for i in 1..=grid.nt {
                row.push(evaluate(problem, p, x, i as f64 * dt)?.value);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    field_residual(&c, grid, p)
}

fn mass_quadrature() -> QuadratureSpec {
    QuadratureSpec {
        abs_tol: 1e-13,
        rel_tol: 1e-10,
        max_panels: 4000,
        tail_cutoff: 1.0,
    }
}

/// Total mass ∫c dx (or ∫c 2πr dr in the plane) at each time.
pub fn mass_balance(problem: &ProblemSpec, p: &TransportParams, t_list: &[f64]) -> Result<Vec<f64>> {
    problem.validate()?;
    p.validate()?;
    if !problem.conserves_mass() {
        return Err(Error::domain(format!(
            "{} has fixed boundary data and does not conserve mass",
            problem.name()
        )));
    }
    if let ProblemSpec::PlaneSource { n_tot: 0.0 } = problem {
        return Ok(vec![0.0; t_list.len()]);
    }
    t_list.par_iter().map(|&t| mass_at(problem, p, t)).collect()
}

fn mass_at(problem: &ProblemSpec, p: &TransportParams, t: f64) -> Result<f64> {
    let q = mass_quadrature();
    let levy_route = matches!(problem, ProblemSpec::SpaceFracCauchy)
        || (matches!(problem, ProblemSpec::PlaneSource { .. }) && p.regime == Regime::SpaceFractional);
    if levy_route {
        let scale = match problem {
            ProblemSpec::PlaneSource { n_tot } => *n_tot,
            _ => 1.0,
        };
        return Ok(scale * levy_mass(p.beta)?);
    }
    match problem {
        ProblemSpec::Radial2dCauchy => {
            if p.alpha != p.beta || p.regime == Regime::SpaceFractional {
                return Err(Error::domain(
                    "the planar point source needs time-fractional parameters",
                ));
            }
            let a = p.spread(t).sqrt();
            let f = |r: f64| {
                if r == 0.0 {
                    return 0.0;
                }
                2.0 * PI * r * radial2d_cauchy(p.beta, p.d, r, t, &QuadratureSpec::default()).unwrap_or(f64::NAN)
            };
            // beyond 64 similarity lengths the profile is below the absolute
            // accuracy of the Hankel inversion, which is all that is left there
            let pts: Vec<f64> = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0]
                .iter()
                .map(|s| s * a)
                .collect();
            Ok(integrate_pieces(f, &pts, &q).require("planar mass")?.value)
        }
        _ => {
            let a = p.spread(t).sqrt();
            let f = |x: f64| evaluate(problem, p, x, t).map(|v| v.value).unwrap_or(f64::NAN);
            let pts: Vec<f64> = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0].iter().map(|s| s * a).collect();
            let head = integrate_pieces(f, &pts, &q).require("line mass")?;
            let tail = integrate_to_infinity(f, 16.0 * a, &q).require("line mass tail")?;
            Ok(2.0 * (head.value + tail.value))
        }
    }
}

/// ∫ L⁰_α over the line, independent of scale: the body by quadrature and
/// the far tail from the integrated tail expansion.
pub fn levy_mass(alpha: f64) -> Result<f64> {
    let q = mass_quadrature();
    let order = FracOrder::levy(alpha)?;
    let f = |x: f64| levy(alpha, x).unwrap_or(f64::NAN);
    for cut in [10.0, 20.0, 40.0] {
        if let Some((tail, err)) = levy_tail_mass(order, cut) {
            if err <= 1e-12 {
                let mut body = 0.0;
                let mut a = 0.0;
                for b in [0.5, 1.0, 2.0, 4.0, 7.0, cut] {
                    if b > cut {
                        break;
                    }
                    body += integrate(f, a, b, &q).require("Levy body")?.value;
                    a = b;
                }
                return Ok(2.0 * (body + tail));
            }
        }
    }
    let head = integrate_pieces(f, &[0.0, 1.0, 2.0, 4.0, 8.0], &q).require("Levy body")?;
    let tail = integrate_to_infinity(f, 8.0, &q).require("Levy tail")?;
    Ok(2.0 * (head.value + tail.value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> ResidualGrid {
        ResidualGrid {
            x_min: 0.5,
            x_max: 3.0,
            nx: 26,
            t_max: 1.0,
            nt: 200,
            t_from: 0.25,
        }
    }

    #[test]
    fn constant_field_has_zero_residual() {
        let g = grid();
        let c = vec![vec![0.7; g.nt + 1]; g.nx];
        let p = TransportParams::time_fractional(0.5, 1.0).unwrap();
        assert_eq!(field_residual(&c, &g, &p).unwrap(), 0.0);
    }

    #[test]
    fn zero_mass_gives_zeros() {
        let p = TransportParams::time_fractional(0.5, 1.0).unwrap();
        let m = mass_balance(&ProblemSpec::PlaneSource { n_tot: 0.0 }, &p, &[0.5, 1.0]).unwrap();
        assert_eq!(m, vec![0.0, 0.0]);
    }

    #[test]
    fn fixed_boundary_problems_rejected() {
        let p = TransportParams::fickian(1.0).unwrap();
        assert!(mass_balance(&ProblemSpec::Signaling { c0: 1.0 }, &p, &[1.0]).is_err());
        let sf = TransportParams::space_fractional(0.5, 1.0).unwrap();
        assert!(pde_residual(&ProblemSpec::PlaneSource { n_tot: 1.0 }, &sf, &grid()).is_err());
    }
}
