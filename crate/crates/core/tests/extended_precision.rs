//! Power series summed in 1024-bit arithmetic as oracles for the
//! double-precision evaluators. Series are summed until terms fall below
//! 1e-40 after the peak, far beyond the tolerances asserted here.

use fracdiff_core::specfun::{k_erfc, levy, mittag_leffler_two, ml, mw, n_erf};
use fracdiff_core::SeriesControl;
use rug::ops::Pow;
use rug::Float;

const PREC: u32 = 1024;

fn f(x: f64) -> Float {
    Float::with_val(PREC, x)
}

/// 1/Γ(x) with exact zeros at the poles.
fn rgamma(x: Float) -> Float {
    if x <= 0 && x.is_integer() {
        return f(0.0);
    }
    let g = x.gamma();
    Float::with_val(PREC, 1.0 / g)
}

/// Σ term(n), stopping once 20 consecutive terms are below 1e-40.
fn sum(term: impl Fn(u32) -> Float) -> f64 {
    let mut acc = f(0.0);
    let mut quiet = 0;
    for n in 0..20_000 {
        let t = term(n);
        let small = t.clone().abs() < 1e-40;
        acc += t;
        quiet = if small { quiet + 1 } else { 0 };
        if quiet >= 20 {
            return acc.to_f64();
        }
    }
    panic!("oracle series did not converge");
}

fn factorial(n: u32) -> Float {
    Float::with_val(PREC, Float::factorial(n))
}

fn ml_oracle(nu: f64, mu: f64, z: f64) -> f64 {
    sum(|n| {
        let zn = Float::with_val(PREC, f(z).pow(n));
        zn * rgamma(f(nu) * n + mu)
    })
}

fn mw_oracle(nu: f64, z: f64) -> f64 {
    sum(|n| {
        let zn = Float::with_val(PREC, f(-z).pow(n));
        zn / factorial(n) * rgamma(1 - f(nu) * (n + 1))
    })
}

fn n_oracle(nu: f64, z: f64) -> f64 {
    sum(|n| {
        let zn = Float::with_val(PREC, f(-z).pow(n)) * f(z);
        zn / factorial(n + 1) * rgamma(1 - f(nu) * (n + 1))
    })
}

/// Symmetric stable density with characteristic function e^{−|k|^α}.
fn levy_oracle(alpha: f64, x: f64) -> f64 {
    let pi = Float::with_val(PREC, rug::float::Constant::Pi);
    if alpha > 1.0 {
        // entire series in x
        let s = sum(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let g = Float::with_val(PREC, (f(2.0 * k as f64 + 1.0) / alpha).gamma());
            g * Float::with_val(PREC, f(x).pow(2 * k)) / factorial(2 * k) * sign
        });
        (f(s) / (pi * alpha)).to_f64()
    } else {
        // convergent in inverse powers for α < 1
        let ax = x.abs();
        let s = sum(|k| {
            let k = k + 1;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let g = f(alpha * k as f64 + 1.0).gamma();
            let sin = Float::with_val(PREC, &pi * (alpha * k as f64 / 2.0)).sin();
            let pw = Float::with_val(PREC, f(ax).pow(f(-alpha * k as f64 - 1.0)));
            g / factorial(k) * sin * pw * sign
        });
        (f(s) / pi).to_f64()
    }
}

fn grid(start: f64, stop: f64, step: f64) -> impl Iterator<Item = f64> {
    let n = ((stop - start) / step).round() as usize;
    (0..=n).map(move |i| start + i as f64 * step)
}

#[test]
fn mittag_leffler_examples() {
    assert!((ml_oracle(2.0, 1.0, -1.0) - 1f64.cos()).abs() < 1e-15);
    assert!((ml_oracle(0.5, 1.0, -1.0) - 0.427_583_576_155_807).abs() < 1e-15);
    assert!((ml_oracle(1.0, 2.0, 1.0) - 1.718281828459045).abs() < 1e-15);
    assert!((ml(2.0, -1.0).unwrap() - 0.5403023058681398).abs() < 1e-14);
    assert!((ml(0.5, -1.0).unwrap() - 0.427_583_576_155_807).abs() < 1e-14);
}

#[test]
fn mittag_leffler_matches_oracle_on_the_real_line() {
    // the series needs ~(|z|/ν)^{1/ν} terms, so the reach shrinks with ν
    for &(nu, z_min) in &[
        (0.25, -4.0),
        (0.5, -15.0),
        (0.75, -15.0),
        (0.9, -15.0),
        (1.0, -20.0),
        (1.5, -20.0),
    ] {
        for z in grid(z_min, 3.0, 0.5) {
            let want = ml_oracle(nu, 1.0, z);
            let got = ml(nu, z).unwrap();
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "nu={nu} z={z}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn two_parameter_matches_oracle() {
    let ctrl = SeriesControl::default();
    for &(nu, mu) in &[(0.5, 0.5), (0.5, 2.0), (0.8, 1.3), (1.0, 2.0)] {
        for z in grid(-6.0, 2.0, 0.5) {
            let want = ml_oracle(nu, mu, z);
            let got = mittag_leffler_two(nu, mu, z, &ctrl).unwrap().value;
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "nu={nu} mu={mu} z={z}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn m_wright_matches_oracle() {
    assert!((mw_oracle(0.25, 0.0) - 0.816048939098263).abs() < 1e-15);
    // the series needs ~z^{1/(1−ν)} terms
    for &(nu, z_max) in &[(0.1, 8.0), (0.25, 8.0), (0.5, 8.0), (0.6, 6.0), (0.75, 4.0), (0.9, 1.5)] {
        for z in grid(0.0, z_max, 0.25) {
            let want = mw_oracle(nu, z);
            let got = mw(nu, z).unwrap();
            assert!((got - want).abs() <= 1e-12, "nu={nu} z={z}: {got} vs {want}");
        }
    }
}

#[test]
fn error_functions_match_oracle() {
    for &nu in &[0.25, 0.5, 0.75] {
        for z in grid(0.0, 6.0, 0.25) {
            let want = n_oracle(nu, z);
            let n = n_erf(nu, z).unwrap();
            let k = k_erfc(nu, z).unwrap();
            assert!((n - want).abs() <= 1e-12, "N nu={nu} z={z}: {n} vs {want}");
            assert!(
                (k - (1.0 - want)).abs() <= 1e-12,
                "K nu={nu} z={z}: {k} vs {}",
                1.0 - want
            );
        }
    }
}

#[test]
fn levy_density_matches_oracle() {
    for &alpha in &[1.2, 1.5, 1.8, 2.0] {
        for x in grid(-4.0, 4.0, 0.5) {
            let want = levy_oracle(alpha, x);
            let got = levy(alpha, x).unwrap();
            assert!((got - want).abs() <= 1e-10, "alpha={alpha} x={x}: {got} vs {want}");
        }
    }
    for &alpha in &[0.5, 0.8] {
        for &x in &[0.5, 1.0, 2.0, 5.0, -3.0] {
            let want = levy_oracle(alpha, x);
            let got = levy(alpha, x).unwrap();
            assert!((got - want).abs() <= 1e-10, "alpha={alpha} x={x}: {got} vs {want}");
        }
    }
}
