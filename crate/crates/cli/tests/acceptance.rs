//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines appear in plain `cargo test` output. Tolerances are the
//! contractual ones; identity families are re-run with those tolerances
//! pinned as overrides so manifest edits cannot loosen them.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};

use fracdiff_core::solutions::{
    evaluate, msd, radial2d_hankel, space_frac_cauchy, tf_finite_equal, tf_finite_unequal, tf_plane_source,
    tf_signaling, tf_step_source, translate_kernel, KernelArgs, KernelEntry, ProblemSpec, Regime, TransportParams,
};
use fracdiff_core::specfun::{gamma, k_erfc, ml, mw, n_erf};
use fracdiff_core::transforms::{integrate, integrate_pieces, integrate_to_infinity, QuadratureSpec};
use fracdiff_core::verify::{levy_mass, mass_balance, oracle, run_identity_suite, Report};
use fracdiff_core::Result;

type Outcome = std::result::Result<String, String>;

fn q() -> QuadratureSpec {
    QuadratureSpec {
        max_panels: 4000,
        ..QuadratureSpec::default()
    }
}

fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step).round() as usize;
    (0..=n).map(|i| start + i as f64 * step).collect()
}

/// Passes when `worst ≤ tol`; NaN never passes.
fn bound(what: &str, worst: f64, tol: f64) -> Outcome {
    let msg = format!("{what}: worst {worst:.3e} (tol {tol:.0e})");
    if worst <= tol {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn max_err(points: impl IntoIterator<Item = (Result<f64>, f64)>) -> f64 {
    points
        .into_iter()
        .map(|(lhs, rhs)| lhs.map_or(f64::NAN, |l| (l - rhs).abs()))
        .fold(0.0, |a, e| if e.is_nan() || a.is_nan() { f64::NAN } else { a.max(e) })
}

/// Runs identity families with every tolerance pinned to `tol`.
fn families(names: &[&str], tol: f64) -> Outcome {
    let sel: BTreeSet<String> = names.iter().map(|s| s.to_string()).collect();
    let tols: BTreeMap<String, f64> = names.iter().map(|s| (s.to_string(), tol)).collect();
    let checks = run_identity_suite(&sel, &tols).map_err(|e| e.to_string())?;
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let worst = checks.iter().map(|c| c.abs_err).fold(0.0, f64::max);
    let msg = format!(
        "{} checks in {}, worst {worst:.3e} (tol {tol:.0e})",
        checks.len(),
        names.join("+")
    );
    if failed.is_empty() && !checks.is_empty() {
        Ok(msg)
    } else {
        Err(format!("{msg}; failed {failed:?}"))
    }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    match (a, b) {
        (Ok(a), Ok(b)) => Ok(format!("{a}; {b}")),
        (a, b) => Err(format!("{}; {}", a.unwrap_or_else(|e| e), b.unwrap_or_else(|e| e))),
    }
}

fn c1_gaussian_reduction() -> Outcome {
    let worst = max_err(
        grid(0.0, 6.0, 0.05)
            .into_iter()
            .map(|z| (mw(0.5, z), oracle::gaussian_m_half(z))),
    );
    bound("M_1/2 vs Gaussian on [0,6]", worst, 1e-10)
}

fn c2_exponential_reduction() -> Outcome {
    let worst = grid(-5.0, 2.0, 0.05)
        .into_iter()
        .map(|z| ml(1.0, z).map_or(f64::NAN, |v| ((v - z.exp()) / z.exp()).abs()))
        .fold(0.0, f64::max);
    bound("E_1 vs exp, relative, on [-5,2]", worst, 1e-12)
}

fn c3_erf_reductions() -> Outcome {
    let zs = grid(-6.0, 6.0, 0.05);
    let n = max_err(zs.iter().map(|&z| (n_erf(0.5, z), libm::erf(z / 2.0))));
    let k = max_err(zs.iter().map(|&z| (k_erfc(0.5, z), libm::erfc(z / 2.0))));
    bound("N_1/2, K_1/2 vs erf, erfc on [-6,6]", n.max(k), 1e-8)
}

fn c4_moments() -> Outcome {
    let mut pts = Vec::new();
    for &nu in &[0.25, 0.5, 0.75] {
        for &delta in &[0.0, 1.0, 2.0, 3.0] {
            let f = |x: f64| x.powf(delta) * mw(nu, x).unwrap_or(f64::NAN);
            let qs = q();
            let lhs = integrate_pieces(f, &[0.0, 1.0, 2.0, 4.0, 8.0, 16.0], &qs)
                .require("moment")
                .and_then(|h| Ok(h.value + integrate_to_infinity(f, 16.0, &qs).require("moment tail")?.value));
            pts.push((lhs, gamma(delta + 1.0) / gamma(nu * delta + 1.0)));
        }
    }
    bound("12 moments of M_nu", max_err(pts), 1e-6)
}

fn c5_transforms() -> Outcome {
    families(&["laplace_M", "laplace_N", "laplace_K", "fourier_M"], 1e-6)
}

fn c6_mass() -> Outcome {
    let mut worst: f64 = 0.0;
    let plane = ProblemSpec::PlaneSource { n_tot: 1.0 };
    for &beta in &[0.25, 0.5, 0.75, 1.0, 1.25] {
        let p = TransportParams::time_fractional(beta, 1.0).map_err(|e| e.to_string())?;
        let m = mass_balance(&plane, &p, &[0.5, 1.0, 2.0]).map_err(|e| e.to_string())?;
        worst = m.iter().fold(worst, |w, v| w.max((v - 1.0).abs()));
    }
    for &beta in &[0.5, 1.0] {
        let p = TransportParams::time_fractional(beta, 1.0).map_err(|e| e.to_string())?;
        let m = mass_balance(&ProblemSpec::Radial2dCauchy, &p, &[1.0]).map_err(|e| e.to_string())?;
        worst = worst.max((m[0] - 1.0).abs());
    }
    bound("plane source (15 cases) and radial (2 cases) mass", worst, 1e-6)
}

fn c7_pde_residual() -> Outcome {
    both(families(&["pde_residual"], 5e-3), families(&["pde_refinement"], 0.0))
}

fn c8_fickian() -> Outcome {
    let p = TransportParams::fickian(1.0).expect("valid");
    let xs = [-3.0, -1.0, -0.25, 0.0, 0.5, 2.0];
    let ts = [0.1_f64, 0.5, 1.0, 2.0];
    let mut pts = Vec::new();
    for &t in &ts {
        let s = (4.0 * t).sqrt();
        for &x in &xs {
            pts.push((tf_plane_source(&p, 1.0, x, t), oracle::heat_kernel_1d(1.0, x, t)));
            pts.push((tf_step_source(&p, 1.0, x, t), 0.5 * libm::erfc(x / s)));
            pts.push((tf_signaling(&p, 1.0, x.abs(), t), libm::erfc(x.abs() / s)));
            pts.push((space_frac_cauchy(1.0, 1.0, x, t), oracle::heat_kernel_1d(1.0, x, t)));
            let xe = x / 3.0;
            pts.push((
                tf_finite_equal(&p, 1.0, 1.0, xe, t, 100_000).map(|v| v.value),
                oracle::sheet_equal_images(1.0, 1.0, 1.0, xe, t),
            ));
            let xu = xe.abs();
            pts.push((
                tf_finite_unequal(&p, 1.0, 0.1, 1.0, xu, t, 100_000).map(|v| v.value),
                oracle::sheet_unequal_images(1.0, 0.1, 1.0, 1.0, xu, t),
            ));
            let r = x.abs();
            pts.push((radial2d_hankel(1.0, 1.0, r, t, &q()), oracle::heat_kernel_2d(1.0, r, t)));
            let st = TransportParams::stretched_time(1.0, 1.0);
            let pv = st
                .and_then(|st| evaluate(&ProblemSpec::PlaneSource { n_tot: 1.0 }, &st, x, t))
                .map(|v| v.value);
            pts.push((pv, oracle::heat_kernel_1d(1.0, x, t)));
        }
    }
    let n = pts.len();
    bound(
        &format!("{n} Fickian points against classical oracles"),
        max_err(pts),
        1e-6,
    )
}

fn c9_msd() -> Outcome {
    let cases = [
        (0.5, 0.5, Regime::TimeFractional),
        (1.0, 1.0, Regime::Fickian),
        (0.5, 1.0, Regime::StretchedTime),
        (1.3, 1.3, Regime::TimeFractional),
    ];
    let mut pts = Vec::new();
    for (alpha, beta, regime) in cases {
        let slope = TransportParams::new(alpha, beta, 1.0, regime).and_then(|p| {
            let (t0, t1) = (0.5_f64, 20.0_f64);
            Ok((msd(&p, t1)? / msd(&p, t0)?).ln() / (t1 / t0).ln())
        });
        pts.push((slope, alpha));
    }
    bound("log-log MSD slope minus alpha, 4 regimes", max_err(pts), 1e-10)
}

fn c10_steady_states() -> Outcome {
    both(
        families(&["finite_steady_state"], 1e-6),
        families(&["finite_boundary_conditions"], 0.0),
    )
}

fn c11_superdiffusive_trend() -> Outcome {
    let mut masses = Vec::new();
    for &beta in &[1.0, 1.1, 1.2, 1.3] {
        let p = TransportParams::time_fractional(beta, 1.0).map_err(|e| e.to_string())?;
        let f = |x: f64| tf_plane_source(&p, 1.0, x, 1.0).unwrap_or(f64::NAN);
        let m = integrate(f, -0.9, 0.9, &q())
            .require("inner mass")
            .map_err(|e| e.to_string())?;
        masses.push(m.value);
    }
    let msg = format!("mass in |x| <= 0.9 for beta 1.0..1.3: {masses:.6?}");
    if masses.windows(2).all(|w| w[1] < w[0]) {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c12_space_fractional() -> Outcome {
    let xs = grid(-4.0, 4.0, 0.25);
    let g = max_err(
        xs.iter()
            .map(|&x| (space_frac_cauchy(1.0, 1.0, x, 1.5), oracle::heat_kernel_1d(1.0, x, 1.5))),
    );
    // scale D t for the Cauchy case
    let c = max_err(
        xs.iter()
            .map(|&x| (space_frac_cauchy(0.5, 5.0, x, 1.0), oracle::cauchy(5.0, x))),
    );
    let norm = max_err([0.5, 1.0, 1.5, 2.0].iter().map(|&a| (levy_mass(a), 1.0)));
    let parts = [
        bound("mu=1 vs Gaussian", g, 1e-8),
        bound("mu=1/2 vs Cauchy", c, 1e-6),
        bound("normalisation", norm, 1e-6),
    ];
    let failed = parts.iter().any(|p| p.is_err());
    let msg = parts
        .into_iter()
        .map(|p| p.unwrap_or_else(|e| e))
        .collect::<Vec<_>>()
        .join("; ");
    if failed {
        Err(msg)
    } else {
        Ok(msg)
    }
}

fn c13_table1() -> Outcome {
    let args = KernelArgs {
        x: 0.7,
        t: 1.5,
        d: 1.0,
        alpha: 0.6,
        beta: 0.8,
        lambda: 1.3,
    };
    let mut cells = 0;
    for entry in KernelEntry::ALL {
        for to in Regime::TABLE {
            match translate_kernel(entry, Regime::Fickian, to, &args) {
                Ok(v) if v.is_finite() => cells += 1,
                Ok(v) => return Err(format!("{entry} {to} evaluated to {v}")),
                Err(e) => return Err(format!("{entry} {to}: {e}")),
            }
        }
    }
    families(&["table1_reductions"], 1e-10).map(|m| format!("{cells}/16 cells finite; {m}"))
}

fn c14_cli_verify_all() -> Outcome {
    let path = std::env::temp_dir().join(format!("fracdiff-acceptance-{}.json", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_fracdiff"))
        .args(["verify", "--all", "--json"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    let text = std::fs::read_to_string(&path).map_err(|e| format!("no report: {e}"))?;
    let _ = std::fs::remove_file(&path);
    let report: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let checks = report["checks"].as_array().ok_or("report without checks")?;
    let anchored = checks.iter().all(|c| {
        c["name"].as_str().is_some_and(|s| !s.is_empty()) && c["paper_anchor"].as_str().is_some_and(|s| !s.is_empty())
    });
    let failed = report["summary"]["failed"].as_u64();
    let msg = format!(
        "exit {:?}, {} checks, failed {failed:?}, all anchored: {anchored}",
        out.status.code(),
        checks.len()
    );
    // the typed report must also parse back
    let typed: std::result::Result<Report, _> = serde_json::from_str(&text);
    if out.status.code() == Some(0) && failed == Some(0) && anchored && typed.is_ok() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 14] = [
        ("gaussian reduction", c1_gaussian_reduction),
        ("exponential reduction", c2_exponential_reduction),
        ("error-function reductions", c3_erf_reductions),
        ("moment identity", c4_moments),
        ("transform identities", c5_transforms),
        ("mass conservation", c6_mass),
        ("master-equation residual", c7_pde_residual),
        ("Fickian cross-checks", c8_fickian),
        ("MSD law", c9_msd),
        ("steady states", c10_steady_states),
        ("superdiffusive trend", c11_superdiffusive_trend),
        ("space-fractional reductions", c12_space_fractional),
        ("kernel table", c13_table1),
        ("verify --all", c14_cli_verify_all),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        match run() {
            Ok(msg) => println!("criterion {n:2} PASS {name}: {msg}"),
            Err(msg) => {
                println!("criterion {n:2} FAIL {name}: {msg}");
                failed.push(n);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
