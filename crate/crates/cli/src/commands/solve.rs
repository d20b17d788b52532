use std::io::Write;

use clap::{Args, ValueEnum};
use fracdiff_core::solutions::{solve, ProblemSpec, Regime, TransportParams, DEFAULT_SERIES_TERMS};

use crate::error::{CliError, CliResult};
use crate::grid::{parse_list, GridSpec};
use crate::output;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    PlaneSource,
    StepSource,
    Signaling,
    FiniteEqual,
    FiniteUnequal,
    /// Planar point source; the x grid holds radii.
    Radial2d,
    SpaceFrac,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub problem: Problem,
    /// Fractional order β (defaults to 1).
    #[arg(long)]
    pub beta: Option<f64>,
    /// Time-stretch exponent α (defaults to β).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Space-fractional order μ ∈ (0, 1]; selects Riesz diffusion.
    #[arg(long)]
    pub mu: Option<f64>,
    /// Regime; inferred from α, β and μ when omitted.
    #[arg(long)]
    pub regime: Option<String>,
    /// Generalised diffusivity.
    #[arg(long = "D", default_value_t = 1.0)]
    pub d: f64,
    /// Plane-source mass.
    #[arg(long, default_value_t = 1.0)]
    pub ntot: f64,
    /// Boundary or initial concentration.
    #[arg(long, default_value_t = 1.0)]
    pub c0: f64,
    /// Concentration held at x = 0 (finite-unequal).
    #[arg(long)]
    pub c1: Option<f64>,
    /// Concentration held at x = L (finite-unequal).
    #[arg(long)]
    pub c2: Option<f64>,
    /// Sheet half-width (finite-equal) or width (finite-unequal).
    #[arg(long = "L")]
    pub l: Option<f64>,
    /// Cap on finite-domain series terms.
    #[arg(long, default_value_t = DEFAULT_SERIES_TERMS)]
    pub terms: usize,
    /// Spatial grid start:stop:step.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Comma-separated times.
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
}

fn core(context: &str) -> impl Fn(fracdiff_core::Error) -> CliError + '_ {
    move |e| CliError::from_core(context, e)
}

/// Transport parameters from the flags, inferring the regime when absent.
pub fn params(
    alpha: Option<f64>,
    beta: Option<f64>,
    mu: Option<f64>,
    regime: Option<&str>,
    d: f64,
) -> CliResult<TransportParams> {
    let regime: Option<Regime> = regime.map(|r| r.parse()).transpose().map_err(core("--regime"))?;
    if mu.is_some() || regime == Some(Regime::SpaceFractional) {
        let mu = match (mu, beta) {
            (Some(m), _) => m,
            (None, Some(b)) => b / 2.0,
            (None, None) => return Err(CliError::invalid("space-fractional transport needs --mu")),
        };
        return TransportParams::space_fractional(mu, d).map_err(core("parameters"));
    }
    let beta = beta.unwrap_or(1.0);
    let alpha = alpha.unwrap_or(beta);
    let regime = regime.unwrap_or(match (alpha == 1.0 && beta == 1.0, alpha == beta, beta == 1.0) {
        (true, _, _) => Regime::Fickian,
        (false, true, _) => Regime::TimeFractional,
        (false, false, true) => Regime::StretchedTime,
        _ => Regime::StretchedTimeFractional,
    });
    TransportParams::new(alpha, beta, d, regime).map_err(core("parameters"))
}

fn problem_spec(a: &SolveArgs) -> CliResult<ProblemSpec> {
    let need =
        |v: Option<f64>, flag: &str| v.ok_or_else(|| CliError::invalid(format!("{flag} is required for this problem")));
    let spec = match a.problem {
        Problem::PlaneSource => ProblemSpec::PlaneSource { n_tot: a.ntot },
        Problem::StepSource => ProblemSpec::StepSource { c0: a.c0 },
        Problem::Signaling => ProblemSpec::Signaling { c0: a.c0 },
        Problem::FiniteEqual => ProblemSpec::FiniteEqualBc {
            c0: a.c0,
            l: need(a.l, "--L")?,
            series_terms: a.terms,
        },
        Problem::FiniteUnequal => ProblemSpec::FiniteUnequalBc {
            c1: need(a.c1, "--c1")?,
            c2: need(a.c2, "--c2")?,
            l: need(a.l, "--L")?,
            series_terms: a.terms,
        },
        Problem::Radial2d => ProblemSpec::Radial2dCauchy,
        Problem::SpaceFrac => ProblemSpec::SpaceFracCauchy,
    };
    spec.validate().map_err(core("problem"))?;
    Ok(spec)
}

pub fn run(a: &SolveArgs) -> CliResult<()> {
    let spec = problem_spec(a)?;
    let p = params(a.alpha, a.beta, a.mu, a.regime.as_deref(), a.d)?;
    let xs = a.x.parse::<GridSpec>()?.points();
    let ts = parse_list(&a.t)?;
    let field = solve(&spec, &p, &xs, &ts).map_err(core(spec.name()))?;

    let mut w = output::stdout();
    output::meta(&mut w, "problem", serde_json::to_string(&spec).expect("serialisable"))?;
    output::meta(&mut w, "params", serde_json::to_string(&p).expect("serialisable"))?;
    output::meta(
        &mut w,
        "truncation_error_estimate",
        format!("{:e}", field.meta.truncation_error_estimate),
    )?;
    for warning in &field.meta.warnings {
        output::meta(&mut w, "warning", warning)?;
    }
    writeln!(w, "x,t,c")?;
    for (row, t) in field.c.iter().zip(&field.t) {
        for (c, x) in row.iter().zip(&field.x) {
            writeln!(w, "{x},{t},{c}")?;
        }
    }
    w.flush()?;
    Ok(())
}
