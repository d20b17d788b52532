//! The check families and their default tolerances.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fraccalc::{caputo_derivative, generalized_flux, rl_derivative, rl_integral, FluxForm, SampledFunction};
use crate::solutions::{
    msd, radial2d_cauchy, radial2d_hankel, space_frac_cauchy, st_gaussian, stf_green, stf_signaling, tf_finite_equal,
    tf_finite_unequal, tf_plane_source, tf_signaling, tf_step_source, translate_kernel, KernelArgs, KernelEntry,
    ProblemSpec, Regime, TransportParams,
};
use crate::specfun::{gamma, k_erfc, levy, m_wright_hankel, m_wright_series_reciprocal, ml, mw, n_erf};
use crate::transforms::{
    fourier_numeric, integrate, integrate_pieces, integrate_to_infinity, inv_laplace_contour, laplace_numeric,
    mellin_numeric, oscillatory_half_line, QuadratureSpec,
};

use super::oracle;
use super::residual::{levy_mass, mass_balance, pde_residual, ResidualGrid};
use super::{sample, FamilySpec, Sample};

macro_rules! family {
    ($name:literal, $tol:expr, $anchor:literal, $run:ident) => {
        FamilySpec {
            name: $name,
            anchor: $anchor,
            tol: $tol,
            run: $run,
        }
    };
}

pub(super) const FAMILIES: &[FamilySpec] = &[
    // special functions
    family!(
        "series_forms",
        1e-12,
        "Review: M-Wright series in reciprocal-gamma and sine form",
        series_forms
    ),
    family!(
        "gaussian_reduction",
        1e-10,
        "Review: M-Wright function of order 1/2 as a Gaussian",
        gaussian_reduction
    ),
    family!(
        "exponential_reduction",
        1e-12,
        "Review: Mittag-Leffler function of order 1 as the exponential",
        exponential_reduction
    ),
    family!(
        "m_origin",
        1e-10,
        "Review: leading term of the M-Wright series at the origin",
        m_origin
    ),
    family!(
        "hankel_loop",
        1e-9,
        "Review: M-Wright function as a Hankel-loop integral",
        hankel_loop
    ),
    family!(
        "moments_M",
        1e-6,
        "Review: absolute moments of the M-Wright function on the half-line",
        moments_m
    ),
    family!(
        "laplace_M",
        1e-6,
        "Review: Laplace transform of the M-Wright function",
        laplace_m
    ),
    family!(
        "fourier_M",
        1e-6,
        "Review: Fourier transform of the symmetrized M-Wright function",
        fourier_m
    ),
    family!(
        "mellin_M",
        1e-6,
        "Review: Mellin transform of the M-Wright function",
        mellin_m
    ),
    family!(
        "exp_laplace_pairs",
        1e-8,
        "Review: exponential Laplace transform pairs of the M-Wright function",
        exp_laplace_pairs
    ),
    family!(
        "ml_laplace",
        1e-8,
        "Plane source: Laplace transform of the Mittag-Leffler relaxation function",
        ml_laplace
    ),
    family!(
        "erf_reductions",
        1e-10,
        "Fractional error functions: order 1/2 recovers erf and erfc",
        erf_reductions
    ),
    family!(
        "erf_symmetry",
        1e-12,
        "Fractional error functions: N as a running integral of the symmetrized M, K = 1 - N",
        erf_symmetry
    ),
    family!(
        "erf_series",
        1e-10,
        "Fractional error functions: term-wise integrated series of N",
        erf_series
    ),
    family!(
        "laplace_N",
        1e-6,
        "Fractional error functions: Laplace transform of N",
        laplace_n
    ),
    family!(
        "laplace_K",
        1e-6,
        "Fractional error functions: Laplace transform of K",
        laplace_k
    ),
    family!(
        "fourier_N",
        1e-6,
        "Fractional error functions: Fourier transform of N",
        fourier_n
    ),
    family!(
        "fourier_K",
        1e-6,
        "Fractional error functions: Fourier transform of K away from k = 0",
        fourier_k
    ),
    family!(
        "mellin_N",
        1e-6,
        "Fractional error functions: Mellin transform of N",
        mellin_n
    ),
    family!(
        "mellin_K",
        1e-6,
        "Fractional error functions: Mellin transform of K",
        mellin_k
    ),
    family!(
        "levy_gaussian",
        1e-8,
        "Appendix C: Levy density of index 2 is the Gaussian",
        levy_gaussian
    ),
    family!(
        "levy_cauchy",
        1e-10,
        "Appendix C: Levy density of index 1 is the Cauchy density",
        levy_cauchy
    ),
    family!(
        "levy_normalization",
        1e-6,
        "Appendix C: Levy densities defined through their characteristic function",
        levy_normalization
    ),
    family!(
        "levy_m_half",
        1e-12,
        "Appendix C: Gaussian Levy density as half the M-Wright function of order 1/2",
        levy_m_half
    ),
    // fractional operators
    family!(
        "caputo_laplace",
        2e-3,
        "Review: Laplace transform of the Caputo derivative",
        caputo_laplace
    ),
    family!(
        "caputo_power_rule",
        1e-3,
        "Review: convolution definition of the Caputo derivative",
        caputo_power_rule
    ),
    family!(
        "rl_semigroup",
        1e-4,
        "Review: semigroup property of the RL integral",
        rl_semigroup
    ),
    family!(
        "rl_left_inverse",
        2e-3,
        "Review: RL derivative as left inverse of the RL integral",
        rl_left_inverse
    ),
    family!(
        "caputo_rl_relation",
        2e-3,
        "Review: Caputo derivative as a regularized RL derivative",
        caputo_rl_relation
    ),
    family!(
        "flux_mass_balance",
        2e-3,
        "Translating to fractional problems: generalized RL flux",
        flux_mass_balance
    ),
    // solutions
    family!(
        "st_translation",
        1e-14,
        "Stretched-time systems: the substitution Dt -> D t^alpha",
        st_translation
    ),
    family!(
        "plane_source_fickian",
        1e-12,
        "1D TF solutions: plane source and its Fickian form",
        plane_source_fickian
    ),
    family!(
        "plane_source_origin",
        1e-12,
        "1D TF solutions: plane source at the origin",
        plane_source_origin
    ),
    family!(
        "step_source",
        1e-10,
        "1D TF solutions: extended initial distribution",
        step_source
    ),
    family!(
        "signaling_fickian",
        1e-12,
        "1D TF solutions: constant surface concentration, Fickian form",
        signaling_fickian
    ),
    family!(
        "finite_equal_fickian",
        1e-10,
        "1D TF solutions: finite sheet with equal surface concentrations",
        finite_equal_fickian
    ),
    family!(
        "finite_unequal_fickian",
        1e-10,
        "1D TF solutions: finite sheet with unequal surface concentrations",
        finite_unequal_fickian
    ),
    family!(
        "finite_initial_condition",
        1e-8,
        "1D TF solutions: finite sheet initial condition",
        finite_initial_condition
    ),
    family!(
        "finite_boundary_conditions",
        0.0,
        "1D TF solutions: finite sheet boundary conditions",
        finite_boundary_conditions
    ),
    family!(
        "finite_steady_state",
        1e-6,
        "1D TF solutions: finite sheet steady states",
        finite_steady_state
    ),
    family!(
        "radial_fickian",
        1e-8,
        "Higher dimensions: inverse zeroth-order Hankel transform solution, Fickian case",
        radial_fickian
    ),
    family!(
        "radial_subordination",
        1e-7,
        "Higher dimensions: inverse zeroth-order Hankel transform solution",
        radial_subordination
    ),
    family!(
        "table1_reductions",
        1e-10,
        "Table 1: equivalent structures across regimes",
        table1_reductions
    ),
    family!(
        "stf_reductions",
        1e-12,
        "STF diffusion: Green's function and signaling solution reductions",
        stf_reductions
    ),
    family!(
        "msd_slope",
        1e-10,
        "Introduction: power-law evolution of the mean-squared displacement",
        msd_slope
    ),
    family!(
        "msd_moment",
        1e-8,
        "Introduction: mean-squared displacement from the second moment",
        msd_moment
    ),
    family!(
        "superdiffusive_mass",
        1e-5,
        "Appendix B: superdiffusive Cauchy solution",
        superdiffusive_mass
    ),
    family!(
        "superdiffusive_trend",
        0.0,
        "Appendix B: approach to the wave-equation limit",
        superdiffusive_trend
    ),
    family!(
        "space_frac_reductions",
        1e-8,
        "Appendix C: Riesz Cauchy problem and its Gaussian and Cauchy cases",
        space_frac_reductions
    ),
    family!(
        "mass_balance",
        1e-6,
        "1D TF solutions: plane source conserves mass",
        mass_balance_checks
    ),
    family!(
        "pde_residual",
        5e-3,
        "TF master equation with Caputo time derivative",
        pde_residuals
    ),
    family!(
        "pde_refinement",
        0.0,
        "TF master equation: residual decreases under refinement",
        pde_refinement
    ),
];

const NUS: [f64; 3] = [0.25, 0.5, 0.75];
const LAPLACE_S: [f64; 4] = [0.5, 1.0, 2.0, 5.0];

fn q() -> QuadratureSpec {
    QuadratureSpec {
        abs_tol: 1e-13,
        rel_tol: 1e-11,
        max_panels: 4000,
        tail_cutoff: 1.0,
    }
}

fn nan_on_err(r: Result<f64>) -> f64 {
    r.unwrap_or(f64::NAN)
}

fn grid(start: f64, step: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| start + i as f64 * step)
}

/// Parallel map over parameter points, keeping input order.
fn par<T: Sync, F: Fn(&T) -> Sample + Sync + Send>(points: &[T], f: F) -> Vec<Sample> {
    points.par_iter().map(f).collect()
}

fn pairs(a: &[f64], b: &[f64]) -> Vec<(f64, f64)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect()
}

// ---- special functions ---------------------------------------------------

fn series_forms() -> Vec<Sample> {
    par(&pairs(&NUS, &[0.5, 1.0, 1.5, 2.0]), |&(nu, z)| {
        sample(
            format!("nu={nu},z={z}"),
            Ok(m_wright_series_reciprocal(nu, z, 400)),
            nan_on_err(mw(nu, z)),
        )
    })
}

fn gaussian_reduction() -> Vec<Sample> {
    grid(0.0, 0.1, 81)
        .map(|z| sample(format!("z={z:.1}"), mw(0.5, z), oracle::gaussian_m_half(z)))
        .collect()
}

fn exponential_reduction() -> Vec<Sample> {
    grid(-5.0, 0.25, 29)
        .map(|z| sample(format!("z={z}"), ml(1.0, z).map(|v| v / z.exp()), 1.0))
        .collect()
}

fn m_origin() -> Vec<Sample> {
    grid(0.1, 0.1, 9)
        .map(|nu| sample(format!("nu={nu:.1}"), mw(nu, 0.0).map(|m| m * gamma(1.0 - nu)), 1.0))
        .collect()
}

fn hankel_loop() -> Vec<Sample> {
    par(&pairs(&[0.25, 0.5, 0.6], &[0.25, 0.5, 1.0, 2.0]), |&(nu, z)| {
        sample(
            format!("nu={nu},z={z}"),
            m_wright_hankel(nu, z, 64),
            nan_on_err(mw(nu, z)),
        )
    })
}

fn half_line(f: impl Fn(f64) -> f64) -> Result<f64> {
    let qs = q();
    let head = integrate_pieces(&f, &[0.0, 1.0, 2.0, 4.0, 8.0, 16.0], &qs).require("half-line integral")?;
    let tail = integrate_to_infinity(&f, 16.0, &qs).require("half-line integral tail")?;
    Ok(head.value + tail.value)
}

fn moments_m() -> Vec<Sample> {
    par(&pairs(&NUS, &[0.0, 1.0, 2.0, 3.0]), |&(nu, delta)| {
        let lhs = half_line(|x| x.powf(delta) * nan_on_err(mw(nu, x)));
        sample(
            format!("nu={nu},delta={delta}"),
            lhs,
            gamma(delta + 1.0) / gamma(nu * delta + 1.0),
        )
    })
}

fn laplace_m() -> Vec<Sample> {
    par(&pairs(&NUS, &LAPLACE_S), |&(nu, s)| {
        let lhs = laplace_numeric(|t| nan_on_err(mw(nu, t)), s, &q());
        sample(format!("nu={nu},s={s}"), lhs, nan_on_err(ml(nu, -s)))
    })
}

fn fourier_m() -> Vec<Sample> {
    par(&pairs(&[0.25, 0.375, 0.5], &[0.5, 1.0, 2.0]), |&(nu, k)| {
        let lhs = fourier_numeric(|x| nan_on_err(mw(nu, x.abs())), k, &q()).map(|c| c.re);
        sample(format!("nu={nu},k={k}"), lhs, 2.0 * nan_on_err(ml(2.0 * nu, -k * k)))
    })
}

fn mellin_m() -> Vec<Sample> {
    par(&pairs(&NUS, &[0.5, 1.0, 2.0, 3.0]), |&(nu, s)| {
        let lhs = mellin_numeric(|r| nan_on_err(mw(nu, r)), s, &q());
        sample(format!("nu={nu},s={s}"), lhs, gamma(s) / gamma(nu * (s - 1.0) + 1.0))
    })
}

fn exp_laplace_pairs() -> Vec<Sample> {
    let mut pts: Vec<(f64, f64, u8)> = Vec::new();
    for &nu in &NUS {
        for &t in &[0.5, 1.0, 2.0] {
            pts.push((nu, t, 0));
            pts.push((nu, t, 1));
        }
    }
    par(&pts, |&(nu, t, form)| {
        let m = nan_on_err(mw(nu, t.powf(-nu)));
        let one = Complex64::new(1.0, 0.0);
        if form == 0 {
            let lhs = inv_laplace_contour(|s| (-s.powf(nu)).exp() * one, t, 48);
            sample(format!("density,nu={nu},t={t}"), lhs, nu / t.powf(nu + 1.0) * m)
        } else {
            let lhs = inv_laplace_contour(|s| (-s.powf(nu)).exp() * s.powf(nu - 1.0), t, 48);
            sample(format!("weighted,nu={nu},t={t}"), lhs, m / t.powf(nu))
        }
    })
}

fn ml_laplace() -> Vec<Sample> {
    par(&pairs(&[0.5, 0.75, 0.9], &[0.5, 1.0, 2.0]), |&(beta, s)| {
        let lhs = laplace_numeric(|t| nan_on_err(ml(beta, -t.powf(beta))), s, &q());
        sample(
            format!("beta={beta},s={s}"),
            lhs,
            s.powf(beta - 1.0) / (s.powf(beta) + 1.0),
        )
    })
}

fn erf_reductions() -> Vec<Sample> {
    let mut out = Vec::new();
    for z in grid(-6.0, 0.5, 25) {
        out.push(sample(format!("N,z={z}"), n_erf(0.5, z), libm::erf(z / 2.0)));
        out.push(sample(format!("K,z={z}"), k_erfc(0.5, z), libm::erfc(z / 2.0)));
    }
    out
}

fn erf_symmetry() -> Vec<Sample> {
    let mut out = Vec::new();
    for &nu in &NUS {
        for &z in &[0.5, 2.0, 5.0, 10.0] {
            let n = n_erf(nu, z);
            let odd = n_erf(nu, -z).and_then(|m| n.clone().map(|n| m + n));
            out.push(sample(format!("odd,nu={nu},z={z}"), odd, 0.0));
            let total = k_erfc(nu, z).and_then(|k| n.clone().map(|n| n + k));
            out.push(sample(format!("sum,nu={nu},z={z}"), total, 1.0));
        }
    }
    out
}

fn erf_series() -> Vec<Sample> {
    par(&pairs(&NUS, &[0.5, 1.0, 2.0, 4.0]), |&(nu, z)| {
        let integral = integrate(|x| nan_on_err(mw(nu, x)), 0.0, z, &q()).require("integral of M");
        sample(
            format!("nu={nu},z={z}"),
            n_erf(nu, z),
            integral.map(|r| r.value).unwrap_or(f64::NAN),
        )
    })
}

fn laplace_n() -> Vec<Sample> {
    par(&pairs(&NUS, &LAPLACE_S), |&(nu, s)| {
        let lhs = laplace_numeric(|t| nan_on_err(n_erf(nu, t)), s, &q());
        sample(format!("nu={nu},s={s}"), lhs, nan_on_err(ml(nu, -s)) / s)
    })
}

fn laplace_k() -> Vec<Sample> {
    par(&pairs(&NUS, &LAPLACE_S), |&(nu, s)| {
        let lhs = laplace_numeric(|t| nan_on_err(k_erfc(nu, t)), s, &q());
        sample(format!("nu={nu},s={s}"), lhs, (1.0 - nan_on_err(ml(nu, -s))) / s)
    })
}

/// ∫₀^∞ sin(kx) K_ν(x) dx; K decays fast, so this converges absolutely.
fn sine_of_k(nu: f64, k: f64) -> Result<f64> {
    let half = PI / k;
    oscillatory_half_line(|x| (k * x).sin() * nan_on_err(k_erfc(nu, x)), |m| m as f64 * half, &q()).map(|r| r.0)
}

/// Imaginary part of the Abel-regularized ∫ e^{ikx} N_ν(x) dx for k ≠ 0.
/// With N = sgn(x) − sgn(x) K(|x|) this is 2/k − 2∫₀^∞ sin(kx) K(x) dx.
fn fourier_n_im(nu: f64, k: f64) -> Result<f64> {
    Ok(2.0 / k - 2.0 * sine_of_k(nu, k)?)
}

fn fourier_n() -> Vec<Sample> {
    par(&pairs(&[0.25, 0.5, 0.75], &[0.5, 1.0, 2.0]), |&(nu, k)| {
        let rhs = 2.0 * nan_on_err(ml(2.0 * nu, -k * k)) / k;
        sample(format!("nu={nu},k={k}"), fourier_n_im(nu, k), rhs)
    })
}

fn fourier_k() -> Vec<Sample> {
    par(&pairs(&[0.25, 0.5, 0.75], &[0.5, 1.0, 2.0]), |&(nu, k)| {
        // K = 1 − N: the constant contributes only at k = 0
        let rhs = -2.0 * nan_on_err(ml(2.0 * nu, -k * k)) / k;
        let lhs = fourier_n_im(nu, k).map(|v| -v);
        sample(format!("nu={nu},k={k}"), lhs, rhs)
    })
}

fn mellin_nk_rhs(nu: f64, s: f64) -> f64 {
    gamma(s + 1.0) / (s * gamma(nu * s + 1.0))
}

fn mellin_n() -> Vec<Sample> {
    // the integral converges for −1 < s < 0
    par(&pairs(&NUS, &[-0.25, -0.5, -0.75]), |&(nu, s)| {
        let lhs = mellin_numeric(|r| nan_on_err(n_erf(nu, r)), s, &q());
        sample(format!("nu={nu},s={s}"), lhs, -mellin_nk_rhs(nu, s))
    })
}

fn mellin_k() -> Vec<Sample> {
    // the integral converges for s > 0
    par(&pairs(&NUS, &[0.5, 1.0, 2.0]), |&(nu, s)| {
        let lhs = mellin_numeric(|r| nan_on_err(k_erfc(nu, r)), s, &q());
        sample(format!("nu={nu},s={s}"), lhs, mellin_nk_rhs(nu, s))
    })
}

fn levy_gaussian() -> Vec<Sample> {
    grid(-6.0, 0.5, 25)
        .map(|x| sample(format!("x={x}"), levy(2.0, x), oracle::heat_kernel_1d(1.0, x, 1.0)))
        .collect()
}

fn levy_cauchy() -> Vec<Sample> {
    grid(-6.0, 0.5, 25)
        .map(|x| sample(format!("x={x}"), levy(1.0, x), oracle::cauchy(1.0, x)))
        .collect()
}

fn levy_normalization() -> Vec<Sample> {
    par(&[0.5, 1.0, 1.5, 2.0], |&a| {
        sample(format!("two_mu={a}"), levy_mass(a), 1.0)
    })
}

fn levy_m_half() -> Vec<Sample> {
    grid(0.0, 0.5, 13)
        .map(|x| sample(format!("x={x}"), levy(2.0, x), 0.5 * nan_on_err(mw(0.5, x))))
        .collect()
}

// ---- fractional operators ------------------------------------------------

fn sampled(t_max: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<SampledFunction> {
    SampledFunction::from_fn(0.0, t_max / (n - 1) as f64, n, f)
}

/// Largest |a_i − f(t_i)| over samples with t_i ≥ from.
fn max_dev(a: &SampledFunction, from: f64, f: impl Fn(f64) -> f64) -> f64 {
    (0..a.len())
        .filter(|&i| a.time(i) >= from)
        .map(|i| (a.values[i] - f(a.time(i))).abs())
        .fold(0.0, f64::max)
}

fn caputo_laplace() -> Vec<Sample> {
    // f = E_β(−t^β) has Laplace transform F = s^{β−1}/(s^β + 1), so
    // s^β F − s^{β−1} f(0) = −F: its Caputo derivative is −f.
    par(&[0.3, 0.5, 0.7, 0.9], |&beta| {
        let f = |t: f64| nan_on_err(ml(beta, -t.powf(beta)));
        let lhs = sampled(2.0, 4001, f)
            .and_then(|s| caputo_derivative(&s, beta))
            .map(|d| max_dev(&d, 0.25, |t| -f(t)));
        sample(format!("beta={beta}"), lhs, 0.0)
    })
}

fn caputo_power_rule() -> Vec<Sample> {
    par(&pairs(&[0.3, 0.5, 0.7], &[1.0, 2.0]), |&(beta, p)| {
        let want = |t: f64| gamma(p + 1.0) / gamma(p + 1.0 - beta) * t.powf(p - beta);
        let lhs = sampled(1.0, 1001, |t| t.powf(p))
            .and_then(|s| caputo_derivative(&s, beta))
            .map(|d| max_dev(&d, 0.1, want));
        sample(format!("beta={beta},p={p}"), lhs, 0.0)
    })
}

type Pair = (&'static str, fn(f64) -> f64, fn(f64) -> f64);

fn rl_semigroup() -> Vec<Sample> {
    let cases: [Pair; 3] = [
        ("one", |_| 1.0, |t| t),
        ("t", |t| t, |t| t * t / 2.0),
        ("cos", f64::cos, f64::sin),
    ];
    par(&cases, |&(name, f, antideriv)| {
        let lhs = sampled(2.0, 2001, f)
            .and_then(|s| rl_integral(&s, 0.7))
            .and_then(|s| rl_integral(&s, 0.3))
            .map(|s| max_dev(&s, 0.0, antideriv));
        sample(format!("f={name},mu=0.3,nu=0.7"), lhs, 0.0)
    })
}

fn rl_left_inverse() -> Vec<Sample> {
    par(&[0.3, 0.5, 0.7], |&mu| {
        let lhs = sampled(2.0, 2001, f64::cos)
            .and_then(|s| rl_integral(&s, mu))
            .and_then(|s| rl_derivative(&s, mu))
            .map(|s| max_dev(&s, 0.1, f64::cos));
        sample(format!("f=cos,mu={mu}"), lhs, 0.0)
    })
}

fn caputo_rl_relation() -> Vec<Sample> {
    par(&[0.3, 0.5, 0.7], |&beta| {
        let lhs = sampled(2.0, 2001, f64::sin).and_then(|s| {
            let c = caputo_derivative(&s, beta)?;
            let r = rl_derivative(&s, beta)?;
            Ok((1..c.len())
                .filter(|&i| c.time(i) >= 0.1)
                .map(|i| (c.values[i] - r.values[i]).abs())
                .fold(0.0, f64::max))
        });
        sample(format!("f=sin,beta={beta}"), lhs, 0.0)
    })
}

/// Flux through x0 of the plane source against the rate of change of the
/// mass beyond x0, N_tot β z M_{β/2}(z)/(4t) with z = x0/√(D t^β).
fn flux_mass_balance() -> Vec<Sample> {
    let x0 = 1.0;
    let n = 2001;
    let t_max = 2.0;
    par(&pairs(&[0.5, 0.75, 1.0], &[0.5, 1.0, 2.0]), |&(beta, t)| {
        let lhs = (|| -> Result<f64> {
            let p = TransportParams::time_fractional(beta, 1.0)?;
            let h = 1e-4;
            let grad = sampled(t_max, n, |s| {
                if s == 0.0 {
                    return 0.0;
                }
                let up = nan_on_err(tf_plane_source(&p, 1.0, x0 + h, s));
                let down = nan_on_err(tf_plane_source(&p, 1.0, x0 - h, s));
                (up - down) / (2.0 * h)
            })?;
            let j = generalized_flux(&grad, beta, p.d, FluxForm::RlDerivative)?;
            let i = (t / t_max * (n - 1) as f64).round() as usize;
            Ok(j.values[i])
        })();
        let z = x0 / t.powf(beta).sqrt();
        let rhs = beta * z * nan_on_err(mw(beta / 2.0, z)) / (4.0 * t);
        sample(format!("beta={beta},t={t}"), lhs, rhs)
    })
}

// ---- solutions -----------------------------------------------------------

const XS: [f64; 9] = [-4.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0];
const TS: [f64; 3] = [0.5, 1.0, 2.0];

fn st_translation() -> Vec<Sample> {
    let mut out = Vec::new();
    for &alpha in &[0.5, 0.8, 1.3] {
        for &x in &[0.0, 1.0, 2.5] {
            let t: f64 = 2.0;
            let rhs = oracle::heat_kernel_1d(1.0, x, t.powf(alpha));
            out.push(sample(
                format!("alpha={alpha},x={x}"),
                st_gaussian(alpha, 1.0, 1.0, x, t),
                rhs,
            ));
        }
    }
    out
}

fn plane_source_fickian() -> Vec<Sample> {
    let p = TransportParams::fickian(1.0).expect("valid");
    pairs(&XS, &TS)
        .into_iter()
        .map(|(x, t)| {
            sample(
                format!("x={x},t={t}"),
                tf_plane_source(&p, 1.0, x, t),
                oracle::heat_kernel_1d(1.0, x, t),
            )
        })
        .collect()
}

fn plane_source_origin() -> Vec<Sample> {
    [0.25, 0.5, 0.75]
        .iter()
        .map(|&beta| {
            let p = TransportParams::time_fractional(beta, 1.0).expect("valid");
            sample(
                format!("beta={beta}"),
                tf_plane_source(&p, 1.0, 0.0, 1.0),
                0.5 / gamma(1.0 - beta / 2.0),
            )
        })
        .collect()
}

fn step_source() -> Vec<Sample> {
    let mut out = Vec::new();
    let p = TransportParams::fickian(1.0).expect("valid");
    for (x, t) in pairs(&XS, &TS) {
        let rhs = 0.5 * libm::erfc(x / (4.0 * t).sqrt());
        out.push(sample(
            format!("fickian,x={x},t={t}"),
            tf_step_source(&p, 1.0, x, t),
            rhs,
        ));
    }
    for &beta in &[0.25, 0.5, 0.75] {
        let p = TransportParams::time_fractional(beta, 1.0).expect("valid");
        out.push(sample(
            format!("midpoint,beta={beta}"),
            tf_step_source(&p, 1.0, 0.0, 1.0),
            0.5,
        ));
        out.push(sample(
            format!("far_left,beta={beta}"),
            tf_step_source(&p, 1.0, -50.0, 1.0),
            1.0,
        ));
    }
    out
}

fn signaling_fickian() -> Vec<Sample> {
    let p = TransportParams::fickian(1.0).expect("valid");
    pairs(&[0.0, 0.5, 1.0, 2.0, 4.0], &TS)
        .into_iter()
        .map(|(x, t)| {
            sample(
                format!("x={x},t={t}"),
                tf_signaling(&p, 1.0, x, t),
                libm::erfc(x / (4.0 * t).sqrt()),
            )
        })
        .collect()
}

fn finite_equal_fickian() -> Vec<Sample> {
    let p = TransportParams::fickian(1.0).expect("valid");
    let pts = pairs(&[-0.9, -0.5, 0.0, 0.3, 0.75], &[0.01, 0.1, 0.5, 2.0]);
    par(&pts, |&(x, t)| {
        let lhs = tf_finite_equal(&p, 1.0, 1.0, x, t, 100_000).map(|s| s.value);
        sample(
            format!("x={x},t={t}"),
            lhs,
            oracle::sheet_equal_images(1.0, 1.0, 1.0, x, t),
        )
    })
}

fn finite_unequal_fickian() -> Vec<Sample> {
    let p = TransportParams::fickian(0.1).expect("valid");
    let pts = pairs(&[0.1, 0.25, 0.5, 0.75, 0.9], &[0.05, 0.5, 2.0, 10.0]);
    par(&pts, |&(x, t)| {
        let lhs = tf_finite_unequal(&p, 1.0, 0.1, 1.0, x, t, 100_000).map(|s| s.value);
        sample(
            format!("x={x},t={t}"),
            lhs,
            oracle::sheet_unequal_images(1.0, 0.1, 1.0, 0.1, x, t),
        )
    })
}

fn finite_initial_condition() -> Vec<Sample> {
    let p = TransportParams::fickian(1.0).expect("valid");
    [-0.5, -0.25, 0.0, 0.25, 0.5]
        .iter()
        .map(|&x| {
            sample(
                format!("x={x},t=1e-4"),
                tf_finite_equal(&p, 1.0, 1.0, x, 1e-4, 100_000).map(|s| s.value),
                0.0,
            )
        })
        .collect()
}

fn finite_boundary_conditions() -> Vec<Sample> {
    let mut out = Vec::new();
    for &beta in &[0.5, 0.75, 1.0] {
        let p = TransportParams::time_fractional(beta, 1.0).expect("valid");
        for &t in &[0.01, 1.0, 100.0] {
            for &x in &[-1.0, 1.0] {
                let v = tf_finite_equal(&p, 2.0, 1.0, x, t, 100_000).map(|s| s.value);
                out.push(sample(format!("equal,beta={beta},t={t},x={x}"), v, 2.0));
            }
            let v = tf_finite_unequal(&p, 1.0, 0.1, 1.0, 0.0, t, 100_000).map(|s| s.value);
            out.push(sample(format!("unequal,beta={beta},t={t},x=0"), v, 1.0));
            let v = tf_finite_unequal(&p, 1.0, 0.1, 1.0, 1.0, t, 100_000).map(|s| s.value);
            out.push(sample(format!("unequal,beta={beta},t={t},x=L"), v, 0.1));
        }
    }
    out
}

fn finite_steady_state() -> Vec<Sample> {
    let mut out = Vec::new();
    for &beta in &[0.5, 0.75, 1.0] {
        let p = TransportParams::time_fractional(beta, 1.0).expect("valid");
        for &x in &[-0.5, 0.0, 0.5] {
            let v = tf_finite_equal(&p, 1.0, 1.0, x, 1e12, 100_000).map(|s| s.value);
            out.push(sample(format!("equal,beta={beta},x={x}"), v, 1.0));
        }
        for &x in &[0.25, 0.5, 0.75] {
            let v = tf_finite_unequal(&p, 1.0, 0.1, 1.0, x, 1e12, 100_000).map(|s| s.value);
            out.push(sample(format!("unequal,beta={beta},x={x}"), v, 1.0 - 0.9 * x));
        }
    }
    out
}

fn radial_fickian() -> Vec<Sample> {
    par(&pairs(&[0.0, 0.5, 1.0, 2.0], &[0.5, 1.0]), |&(r, t)| {
        let lhs = radial2d_hankel(1.0, 1.0, r, t, &q());
        sample(format!("r={r},t={t}"), lhs, oracle::heat_kernel_2d(1.0, r, t))
    })
}

fn radial_subordination() -> Vec<Sample> {
    par(&pairs(&[0.5, 0.75], &[0.5, 1.0, 2.0]), |&(beta, r)| {
        let rhs = nan_on_err(oracle::radial_subordinated(beta, 1.0, r, 1.0, &q()));
        sample(
            format!("beta={beta},r={r}"),
            radial2d_cauchy(beta, 1.0, r, 1.0, &q()),
            rhs,
        )
    })
}

fn table1_reductions() -> Vec<Sample> {
    let mut out = Vec::new();
    let base = |x: f64, t: f64, alpha: f64, beta: f64| KernelArgs {
        x,
        t,
        d: 1.0,
        alpha,
        beta,
        lambda: 1.3,
    };
    for entry in KernelEntry::ALL {
        for &(x, t) in &[(0.3, 0.5), (1.0, 1.0), (2.0, 2.0)] {
            let e = entry.as_str();
            let f = Regime::Fickian;
            let tf = Regime::TimeFractional;
            let st = Regime::StretchedTime;
            let stf = Regime::StretchedTimeFractional;
            let one = base(x, t, 1.0, 1.0);
            out.push(sample(
                format!("{e},tf_beta1_to_fickian,x={x},t={t}"),
                translate_kernel(entry, f, tf, &one),
                nan_on_err(translate_kernel(entry, f, f, &one)),
            ));
            let ab = base(x, t, 0.6, 0.6);
            out.push(sample(
                format!("{e},stf_alpha_eq_beta_to_tf,x={x},t={t}"),
                translate_kernel(entry, f, stf, &ab),
                nan_on_err(translate_kernel(entry, f, tf, &ab)),
            ));
            let a1 = base(x, t, 0.6, 1.0);
            out.push(sample(
                format!("{e},stf_beta1_to_st,x={x},t={t}"),
                translate_kernel(entry, f, stf, &a1),
                nan_on_err(translate_kernel(entry, f, st, &a1)),
            ));
        }
    }
    out
}

fn stf_reductions() -> Vec<Sample> {
    let mut out = Vec::new();
    for &(x, t) in &[(0.0, 1.0), (0.7, 0.5), (2.0, 2.0)] {
        let p = TransportParams::time_fractional(0.6, 1.0).expect("valid");
        out.push(sample(
            format!("green_alpha_eq_beta,x={x},t={t}"),
            stf_green(0.6, 0.6, 1.0, x, t),
            nan_on_err(tf_plane_source(&p, 1.0, x, t)),
        ));
        out.push(sample(
            format!("green_beta1,x={x},t={t}"),
            stf_green(0.5, 1.0, 1.0, x, t),
            nan_on_err(st_gaussian(0.5, 1.0, 1.0, x, t)),
        ));
        out.push(sample(
            format!("signaling_alpha_eq_beta,x={x},t={t}"),
            stf_signaling(0.6, 0.6, 1.0, 1.0, x, t),
            nan_on_err(tf_signaling(&p, 1.0, x, t)),
        ));
    }
    out
}

fn msd_slope() -> Vec<Sample> {
    let cases = [
        ("tf", 0.5, 0.5),
        ("fickian", 1.0, 1.0),
        ("st", 0.5, 1.0),
        ("superdiffusive", 1.3, 1.3),
    ];
    cases
        .iter()
        .map(|&(name, alpha, beta)| {
            let slope = (|| -> Result<f64> {
                let regime = match (alpha == beta, beta == 1.0) {
                    (true, true) => Regime::Fickian,
                    (true, false) => Regime::TimeFractional,
                    (false, true) => Regime::StretchedTime,
                    (false, false) => Regime::StretchedTimeFractional,
                };
                let p = TransportParams::new(alpha, beta, 1.0, regime)?;
                Ok((msd(&p, 10.0)? / msd(&p, 1.0)?).ln() / 10f64.ln())
            })();
            sample(format!("{name},alpha={alpha},beta={beta}"), slope, alpha)
        })
        .collect()
}

fn msd_moment() -> Vec<Sample> {
    par(&pairs(&[0.5, 0.75, 1.0, 1.25], &[1.0, 2.0]), |&(beta, t)| {
        let lhs = (|| -> Result<f64> {
            let p = TransportParams::time_fractional(beta, 1.0)?;
            let a = p.spread(t).sqrt();
            let f = |x: f64| x * x * nan_on_err(tf_plane_source(&p, 1.0, x, t));
            let pts: Vec<f64> = [0.0, 1.0, 2.0, 4.0, 8.0, 16.0].iter().map(|s| s * a).collect();
            let head = integrate_pieces(f, &pts, &q()).require("second moment")?;
            let tail = integrate_to_infinity(f, 16.0 * a, &q()).require("second moment tail")?;
            Ok(2.0 * (head.value + tail.value))
        })();
        let p = TransportParams::time_fractional(beta, 1.0).expect("valid");
        sample(format!("beta={beta},t={t}"), lhs, nan_on_err(msd(&p, t)))
    })
}

fn superdiffusive_mass() -> Vec<Sample> {
    par(&[1.1, 1.2, 1.3], |&beta| {
        let lhs = TransportParams::time_fractional(beta, 1.0)
            .and_then(|p| mass_balance(&ProblemSpec::PlaneSource { n_tot: 1.0 }, &p, &[1.0]))
            .map(|m| m[0]);
        sample(format!("beta={beta},t=1"), lhs, 1.0)
    })
}

/// Mass of the plane source inside |x| ≤ 0.9 at t = 1, D = 1.
fn inner_mass(beta: f64) -> Result<f64> {
    let p = TransportParams::time_fractional(beta, 1.0)?;
    let f = |x: f64| nan_on_err(tf_plane_source(&p, 1.0, x, 1.0));
    Ok(2.0 * integrate(f, 0.0, 0.9, &q()).require("inner mass")?.value)
}

fn superdiffusive_trend() -> Vec<Sample> {
    // lhs is the increase of inner mass from one β to the next; any
    // increase violates the monotone trend
    let betas = [1.0, 1.1, 1.2, 1.3];
    let masses: Vec<Result<f64>> = betas.par_iter().map(|&b| inner_mass(b)).collect();
    (0..betas.len() - 1)
        .map(|i| {
            let inc = match (&masses[i], &masses[i + 1]) {
                (Ok(a), Ok(b)) => Ok((b - a).max(0.0)),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            sample(format!("beta={}->{}", betas[i], betas[i + 1]), inc, 0.0)
        })
        .collect()
}

fn space_frac_reductions() -> Vec<Sample> {
    let mut out = Vec::new();
    for &x in &[-3.0, -1.0, 0.0, 0.5, 2.0, 4.0] {
        out.push(sample(
            format!("gaussian,mu=1,x={x}"),
            space_frac_cauchy(1.0, 1.0, x, 1.5),
            oracle::heat_kernel_1d(1.0, x, 1.5),
        ));
        // μ = 1/2: Cauchy density of scale D t
        out.push(sample(
            format!("cauchy,mu=0.5,D=5,x={x}"),
            space_frac_cauchy(0.5, 5.0, x, 1.0),
            oracle::cauchy(5.0, x),
        ));
    }
    out
}

fn mass_balance_checks() -> Vec<Sample> {
    let mut jobs: Vec<(String, ProblemSpec, Result<TransportParams>, f64)> = Vec::new();
    let ps = ProblemSpec::PlaneSource { n_tot: 1.0 };
    for &beta in &[0.25, 0.5, 0.75, 1.0, 1.25] {
        for &t in &TS {
            jobs.push((
                format!("plane_source,beta={beta},t={t}"),
                ps,
                TransportParams::time_fractional(beta, 1.0),
                t,
            ));
        }
    }
    for &beta in &[0.5, 1.0] {
        jobs.push((
            format!("radial2d,beta={beta},t=1"),
            ProblemSpec::Radial2dCauchy,
            TransportParams::time_fractional(beta, 1.0),
            1.0,
        ));
    }
    for &mu in &[0.25, 0.5, 0.75, 1.0] {
        jobs.push((
            format!("space_frac,two_mu={},t=1", 2.0 * mu),
            ProblemSpec::SpaceFracCauchy,
            TransportParams::space_fractional(mu, 1.0),
            1.0,
        ));
    }
    jobs.into_par_iter()
        .map(|(label, problem, p, t)| {
            let m = p.and_then(|p| mass_balance(&problem, &p, &[t])).map(|v| v[0]);
            sample(label, m, 1.0)
        })
        .collect()
}

/// Declared grids for the residual checks.
pub(super) fn residual_cases() -> Vec<(&'static str, ProblemSpec, TransportParams, ResidualGrid)> {
    let ps = ProblemSpec::PlaneSource { n_tot: 1.0 };
    let sig = ProblemSpec::Signaling { c0: 1.0 };
    let g = |x_min: f64, x_max: f64, nx: usize, nt: usize| ResidualGrid {
        x_min,
        x_max,
        nx,
        t_max: 1.0,
        nt,
        t_from: 0.25,
    };
    vec![
        (
            "plane_source,beta=1",
            ps,
            TransportParams::fickian(1.0).expect("valid"),
            g(0.5, 3.0, 51, 1000),
        ),
        (
            "plane_source,beta=0.5",
            ps,
            TransportParams::time_fractional(0.5, 1.0).expect("valid"),
            g(0.5, 3.0, 51, 400),
        ),
        (
            "plane_source,beta=0.75",
            ps,
            TransportParams::time_fractional(0.75, 1.0).expect("valid"),
            g(0.5, 3.0, 51, 400),
        ),
        (
            "signaling,beta=0.5",
            sig,
            TransportParams::time_fractional(0.5, 1.0).expect("valid"),
            g(0.5, 2.5, 41, 400),
        ),
        (
            "signaling,beta=0.75",
            sig,
            TransportParams::time_fractional(0.75, 1.0).expect("valid"),
            g(0.5, 2.5, 41, 400),
        ),
        (
            "st_plane_source,alpha=0.5",
            ps,
            TransportParams::stretched_time(0.5, 1.0).expect("valid"),
            g(0.5, 3.0, 51, 400),
        ),
    ]
}

fn pde_residuals() -> Vec<Sample> {
    par(&residual_cases(), |(label, problem, p, grid)| {
        sample(*label, pde_residual(problem, p, grid), 0.0)
    })
}

fn pde_refinement() -> Vec<Sample> {
    par(&residual_cases(), |(label, problem, p, grid)| {
        let inc = (|| -> Result<f64> {
            let coarse = pde_residual(problem, p, grid)?;
            let fine = pde_residual(problem, p, &grid.refined())?;
            if !(coarse.is_finite() && fine.is_finite()) {
                return Err(Error::domain("non-finite residual"));
            }
            Ok((fine - coarse).max(0.0))
        })();
        sample(*label, inc, 0.0)
    })
}
