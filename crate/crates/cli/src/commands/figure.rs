use std::io::Write;

use clap::{Args, ValueEnum};
use fracdiff_core::solutions::{solve, ProblemSpec, TransportParams, DEFAULT_SERIES_TERMS};

use crate::error::{CliError, CliResult};
use crate::grid::GridSpec;
use crate::output;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    #[value(name = "appB")]
    AppB,
    #[value(name = "appC")]
    AppC,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    pub id: FigureId,
}

/// Orders swept where the caption only says "varying β".
const DEFAULT_BETAS: [f64; 4] = [0.25, 0.5, 0.75, 1.0];
const SUPER_BETAS: [f64; 4] = [1.0, 1.1, 1.2, 1.3];
/// (α, β) points covering the stretched-time, time-fractional and Fickian
/// corners plus a superdiffusive stretch.
const ALPHA_BETA: [(f64, f64); 6] = [(0.5, 0.5), (1.0, 0.5), (1.5, 0.5), (0.5, 1.0), (1.0, 1.0), (1.5, 1.0)];

struct Curve {
    label: String,
    problem: ProblemSpec,
    params: TransportParams,
}

struct Figure {
    description: &'static str,
    x: &'static str,
    t: &'static [f64],
    curves: Vec<Curve>,
}

fn core(e: fracdiff_core::Error) -> CliError {
    CliError::from_core("figure", e)
}

fn beta_sweep(betas: &[f64], d: f64, problem: ProblemSpec) -> CliResult<Vec<Curve>> {
    betas
        .iter()
        .map(|&b| {
            Ok(Curve {
                label: format!("beta={b}"),
                problem,
                params: TransportParams::time_fractional(b, d).map_err(core)?,
            })
        })
        .collect()
}

fn alpha_beta_sweep(problem: ProblemSpec) -> CliResult<Vec<Curve>> {
    ALPHA_BETA
        .iter()
        .map(|&(a, b)| {
            Ok(Curve {
                label: format!("alpha={a};beta={b}"),
                problem,
                params: TransportParams::stretched_time_fractional(a, b, 1.0).map_err(core)?,
            })
        })
        .collect()
}

fn figure(id: FigureId) -> CliResult<Figure> {
    let plane = ProblemSpec::PlaneSource { n_tot: 1.0 };
    Ok(match id {
        FigureId::Fig2 => Figure {
            description: "plane source, N_tot=1, D=1, beta in {0.25,0.5,0.75,1}",
            x: "-5:5:0.05",
            t: &[1.0],
            curves: beta_sweep(&DEFAULT_BETAS, 1.0, plane)?,
        },
        FigureId::Fig3 => Figure {
            description: "step source, c0=1, D=1, beta in {0.25,0.5,0.75,1}",
            x: "-5:5:0.05",
            t: &[1.0],
            curves: beta_sweep(&DEFAULT_BETAS, 1.0, ProblemSpec::StepSource { c0: 1.0 })?,
        },
        FigureId::Fig4 => Figure {
            description: "signaling, c0=1, D=1, beta in {0.25,0.5,0.75,1}",
            x: "0:5:0.05",
            t: &[1.0],
            curves: beta_sweep(&DEFAULT_BETAS, 1.0, ProblemSpec::Signaling { c0: 1.0 })?,
        },
        FigureId::Fig5 => Figure {
            description: "finite sheet, equal faces, c0=1, D=1, L=1, beta in {0.25,0.5,0.75,1}",
            x: "-1:1:0.02",
            t: &[0.1, 1.0],
            curves: beta_sweep(
                &DEFAULT_BETAS,
                1.0,
                ProblemSpec::FiniteEqualBc {
                    c0: 1.0,
                    l: 1.0,
                    series_terms: DEFAULT_SERIES_TERMS,
                },
            )?,
        },
        FigureId::Fig6 => Figure {
            description: "finite sheet, unequal faces, L=1, c1=1, c2=0.1, D=0.1, beta in {0.25,0.5,0.75,1}",
            x: "0:1:0.01",
            t: &[1.0, 10.0],
            curves: beta_sweep(
                &DEFAULT_BETAS,
                0.1,
                ProblemSpec::FiniteUnequalBc {
                    c1: 1.0,
                    c2: 0.1,
                    l: 1.0,
                    series_terms: DEFAULT_SERIES_TERMS,
                },
            )?,
        },
        FigureId::Fig7 => Figure {
            description: "stretched-time fractional plane source, D=1, (alpha,beta) grid",
            x: "-5:5:0.05",
            t: &[0.5, 2.0],
            curves: alpha_beta_sweep(plane)?,
        },
        FigureId::Fig8 => Figure {
            description: "stretched-time fractional signaling, c0=1, D=1, (alpha,beta) grid",
            x: "0:5:0.05",
            t: &[0.5, 2.0],
            curves: alpha_beta_sweep(ProblemSpec::Signaling { c0: 1.0 })?,
        },
        FigureId::AppB => Figure {
            description: "superdiffusive plane source, N_tot=1, D=1, beta in {1,1.1,1.2,1.3}",
            x: "-5:5:0.05",
            t: &[1.0],
            curves: beta_sweep(&SUPER_BETAS, 1.0, plane)?,
        },
        FigureId::AppC => Figure {
            description: "space-fractional plane source, N_tot=1, D=5, mu in {1,0.5}",
            x: "-10:10:0.1",
            t: &[1.0],
            curves: [1.0, 0.5]
                .iter()
                .map(|&mu| {
                    Ok(Curve {
                        label: format!("mu={mu}"),
                        problem: ProblemSpec::SpaceFracCauchy,
                        params: TransportParams::space_fractional(mu, 5.0).map_err(core)?,
                    })
                })
                .collect::<CliResult<_>>()?,
        },
    })
}

pub fn run(a: &FigureArgs) -> CliResult<()> {
    let fig = figure(a.id)?;
    let xs = fig.x.parse::<GridSpec>()?.points();
    let mut w = output::stdout();
    output::meta(&mut w, "figure", a.id.to_possible_value().expect("named").get_name())?;
    output::meta(&mut w, "description", fig.description)?;
    output::meta(&mut w, "x", fig.x)?;
    for c in &fig.curves {
        output::meta(
            &mut w,
            "curve",
            format!(
                "{} params={}",
                c.label,
                serde_json::to_string(&c.params).expect("serialisable")
            ),
        )?;
    }
    let mut rows = Vec::new();
    for c in &fig.curves {
        let field = solve(&c.problem, &c.params, &xs, fig.t).map_err(|e| CliError::from_core(c.label.clone(), e))?;
        for w in &field.meta.warnings {
            eprintln!("fracdiff: {}: {w}", c.label);
        }
        rows.push((c.label.as_str(), field));
    }
    writeln!(w, "curve,x,t,c")?;
    for (label, field) in &rows {
        for (row, t) in field.c.iter().zip(&field.t) {
            for (c, x) in row.iter().zip(&field.x) {
                writeln!(w, "{label},{x},{t},{c}")?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
