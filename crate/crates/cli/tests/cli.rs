use std::process::{Command, Output};

fn fracdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Data section of a CSV output: header plus rows, metadata lines dropped.
fn records(out: &Output) -> (csv::StringRecord, Vec<csv::StringRecord>) {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let data: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let mut r = csv::Reader::from_reader(data.as_bytes());
    let header = r.headers().unwrap().clone();
    let rows = r.records().map(|r| r.unwrap()).collect();
    (header, rows)
}

fn col(rows: &[csv::StringRecord], i: usize) -> Vec<f64> {
    rows.iter().map(|r| r[i].parse().unwrap()).collect()
}

#[test]
fn eval_mwright_grid_row_count() {
    let out = fracdiff(&["eval", "mwright", "--nu", "0.25", "--x", "0:4:0.1"]);
    assert!(out.status.success());
    let (h, rows) = records(&out);
    assert_eq!(&h, vec!["x", "value", "err_estimate", "method"]);
    assert_eq!(rows.len(), 41);
    assert!((col(&rows, 1)[0] - 0.816048939098263).abs() < 1e-12);
}

#[test]
fn eval_ml_at_unit_order_is_exp() {
    let out = fracdiff(&["eval", "ml", "--nu", "1", "--x", "0:1:0.5"]);
    let (_, rows) = records(&out);
    let v = col(&rows, 1);
    for (got, want) in v.iter().zip([1.0, 0.5f64.exp(), 1f64.exp()]) {
        assert!((got - want).abs() < 1e-13 * want);
    }
}

#[test]
fn eval_rejects_bad_order_and_grid() {
    for args in [
        &["eval", "mwright", "--nu", "1.5", "--x", "0:1:0.5"][..],
        &["eval", "ml", "--nu", "1", "--x", "1:0:0.5"],
        &["eval", "ml", "--nu", "1", "--x", "0:1:0"],
        &["eval", "nerf", "--nu", "0", "--x", "0:1:0.5"],
    ] {
        let out = fracdiff(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty() || !String::from_utf8_lossy(&out.stderr).contains(','));
    }
}

#[test]
fn solve_plane_source_rows_and_metadata() {
    let out = fracdiff(&[
        "solve",
        "plane-source",
        "--beta",
        "0.5",
        "--D",
        "1",
        "--ntot",
        "1",
        "--x",
        "-5:5:0.1",
        "--t",
        "0.5,1,2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for key in ["# problem:", "# params:", "# truncation_error_estimate:"] {
        assert!(text.contains(key), "missing {key}");
    }
    let (h, rows) = records(&out);
    assert_eq!(&h, vec!["x", "t", "c"]);
    assert_eq!(rows.len(), 303);
    // symmetric in x
    let c = col(&rows, 2);
    assert!((c[0] - c[100]).abs() < 1e-15);
}

#[test]
fn solve_signaling_boundary_row() {
    let out = fracdiff(&[
        "solve",
        "signaling",
        "--beta",
        "1",
        "--D",
        "1",
        "--c0",
        "1",
        "--x",
        "0:5:0.1",
        "--t",
        "1",
    ]);
    let (_, rows) = records(&out);
    assert_eq!(&rows[0][0], "0");
    assert_eq!(col(&rows, 2)[0], 1.0);
}

#[test]
fn solve_finite_equal_is_bounded() {
    let out = fracdiff(&[
        "solve",
        "finite-equal",
        "--beta",
        "0.75",
        "--L",
        "1",
        "--c0",
        "1",
        "--D",
        "1",
        "--x",
        "-1:1:0.05",
        "--t",
        "10",
    ]);
    assert!(out.status.success());
    let (_, rows) = records(&out);
    assert_eq!(rows.len(), 41);
    assert!(col(&rows, 2).iter().all(|&c| (-1e-12..=1.0 + 1e-12).contains(&c)));
}

#[test]
fn solve_rejects_invalid_problems() {
    for args in [
        &["solve", "signaling", "--x", "-1:1:0.5", "--t", "1"][..],
        &["solve", "finite-equal", "--x", "0:1:0.5", "--t", "1"],
        &[
            "solve",
            "plane-source",
            "--beta",
            "1.5",
            "--alpha",
            "0.5",
            "--x",
            "0:1:0.5",
            "--t",
            "1",
        ],
        &["solve", "plane-source", "--x", "0:1:0.5", "--t", "-1"],
        &["solve", "radial2d", "--beta", "0.5", "--x", "0:1:0.5", "--t", "1"],
    ] {
        assert_eq!(fracdiff(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solve_space_fractional_and_regimes() {
    let out = fracdiff(&[
        "solve",
        "space-frac",
        "--mu",
        "0.5",
        "--D",
        "5",
        "--x",
        "0:1:1",
        "--t",
        "1",
    ]);
    let (_, rows) = records(&out);
    let c = col(&rows, 2);
    assert!((c[0] - 1.0 / (5.0 * std::f64::consts::PI)).abs() < 1e-10);
    let st = fracdiff(&["solve", "plane-source", "--alpha", "0.5", "--x", "0:1:1", "--t", "1"]);
    assert!(String::from_utf8_lossy(&st.stdout).contains("\"regime\":\"stretched_time\""));
}

#[test]
fn verify_selection_and_exit_codes() {
    let path = std::env::temp_dir().join(format!("fracdiff-cli-{}.json", std::process::id()));
    let out = fracdiff(&["verify", "--only", "laplace_M_eq12", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(report["checks"].as_array().unwrap().len(), 12);
    assert_eq!(report["summary"]["failed"], 0);

    assert_eq!(fracdiff(&["verify", "--only", "nosuchcheck"]).status.code(), Some(2));
    let strict = fracdiff(&[
        "verify",
        "--only",
        "exponential_reduction",
        "--tol",
        "exponential_reduction=0",
    ]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn figures_emit_curves() {
    let out = fracdiff(&["figure", "fig6"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("# description:") && text.contains("D=0.1"));
    let (h, rows) = records(&out);
    assert_eq!(&h, vec!["curve", "x", "t", "c"]);
    // faces held at c1 = 1 and c2 = 0.1
    for r in &rows {
        let (x, c): (f64, f64) = (r[1].parse().unwrap(), r[3].parse().unwrap());
        if x == 0.0 {
            assert_eq!(c, 1.0);
        }
        if x == 1.0 {
            assert!((c - 0.1).abs() < 1e-15);
        }
    }
    let fig2 = fracdiff(&["figure", "fig2"]);
    let (_, rows) = records(&fig2);
    let curves: std::collections::BTreeSet<&str> = rows.iter().map(|r| r.get(0).unwrap()).collect();
    assert_eq!(curves.len(), 4);
    assert_eq!(fracdiff(&["figure", "fig9"]).status.code(), Some(2));
}
