use std::io::Write;

use clap::{Args, ValueEnum};
use fracdiff_core::specfun::{
    frac_erf, frac_erfc, levy_stable_sym, m_wright, mittag_leffler, mittag_leffler_two, EvalOutcome, FracOrder,
    SeriesControl,
};

use crate::error::{CliError, CliResult};
use crate::grid::GridSpec;
use crate::output;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// Mittag-Leffler E_ν(x); with --mu the two-parameter E_{ν,μ}(x).
    Ml,
    /// M-Wright M_ν(|x|).
    Mwright,
    /// Fractional error function N_ν(x).
    Nerf,
    /// Fractional complementary error function K_ν(x).
    Kerfc,
    /// Symmetric Lévy stable density L_{ν}(x), index ν = 2μ ∈ (0, 2].
    Levy,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub function: Function,
    /// Order ν of the function (the index 2μ for `levy`).
    #[arg(long, allow_hyphen_values = true)]
    pub nu: f64,
    /// Second Mittag-Leffler parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    /// Evaluation grid start:stop:step.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
}

fn evaluate(a: &EvalArgs, order: Option<FracOrder>, x: f64) -> fracdiff_core::Result<EvalOutcome> {
    let ctrl = SeriesControl::default();
    match (a.function, order) {
        (Function::Ml, _) if a.mu.is_some() => mittag_leffler_two(a.nu, a.mu.unwrap_or(1.0), x, &ctrl),
        (Function::Ml, Some(o)) => mittag_leffler(o, x, &ctrl),
        (Function::Mwright, Some(o)) => m_wright(o, x.abs(), &ctrl),
        (Function::Nerf, Some(o)) => frac_erf(o, x, &ctrl),
        (Function::Kerfc, Some(o)) => frac_erfc(o, x, &ctrl),
        (Function::Levy, Some(o)) => levy_stable_sym(o, x),
        (_, None) => unreachable!("order validated before evaluation"),
    }
}

pub fn run(a: &EvalArgs) -> CliResult<()> {
    let grid: GridSpec = a.x.parse()?;
    if a.mu.is_some() && a.function != Function::Ml {
        return Err(CliError::invalid("--mu only applies to ml"));
    }
    let order = match a.function {
        Function::Ml if a.mu.is_some() => {
            if !(a.nu > 0.0 && a.nu.is_finite()) {
                return Err(CliError::invalid(format!(
                    "Mittag-Leffler order must be positive, got {}",
                    a.nu
                )));
            }
            None
        }
        Function::Ml => Some(FracOrder::mittag_leffler(a.nu)),
        Function::Mwright => Some(FracOrder::m_wright(a.nu)),
        Function::Nerf | Function::Kerfc => Some(FracOrder::error_fn(a.nu)),
        Function::Levy => Some(FracOrder::levy(a.nu)),
    }
    .transpose()
    .map_err(|e| CliError::from_core("order", e))?;

    let rows: Vec<(f64, EvalOutcome)> = grid
        .points()
        .into_iter()
        .map(|x| {
            evaluate(a, order, x)
                .map(|o| (x, o))
                .map_err(|e| CliError::from_core(format!("x = {x}"), e))
        })
        .collect::<CliResult<_>>()?;

    if order.is_some_and(|o| o.degraded_precision()) {
        eprintln!(
            "fracdiff: warning: order {} is above the guaranteed-precision range",
            a.nu
        );
    }
    let mut w = output::stdout();
    writeln!(w, "x,value,err_estimate,method")?;
    for (x, o) in rows {
        writeln!(w, "{x},{},{:e},{}", o.value, o.err_estimate, o.method.as_str())?;
    }
    w.flush()?;
    Ok(())
}
