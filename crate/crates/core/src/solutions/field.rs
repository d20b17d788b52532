use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transforms::QuadratureSpec;

use super::finite::{tf_finite_equal, tf_finite_unequal, TruncationWarning};
use super::infinite::{space_frac_cauchy, tf_plane_source, tf_signaling, tf_step_source};
use super::params::{ProblemSpec, Regime, TransportParams};
use super::radial::radial2d_cauchy;

/// One evaluated grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointValue {
    pub value: f64,
    /// Bound on the truncation error where the evaluator reports one.
    pub truncation_bound: f64,
    pub warning: Option<TruncationWarning>,
}

impl PointValue {
    fn exact(value: f64) -> Self {
        Self {
            value,
            truncation_bound: 0.0,
            warning: None,
        }
    }
}

/// Provenance of a solved field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldMeta {
    pub problem: ProblemSpec,
    pub params: TransportParams,
    /// Largest truncation bound over the grid.
    pub truncation_error_estimate: f64,
    pub warnings: Vec<String>,
}

/// Concentration on a space × time grid; `c[i][j]` is at `(x[j], t[i])`.
/// For the planar problem `x` holds radii.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Field {
    pub x: Vec<f64>,
    pub t: Vec<f64>,
    pub c: Vec<Vec<f64>>,
    pub meta: FieldMeta,
}

/// Evaluates a cataloged problem at one point.
pub fn evaluate(problem: &ProblemSpec, p: &TransportParams, x: f64, t: f64) -> Result<PointValue> {
    problem.validate()?;
    p.validate()?;
    match *problem {
        ProblemSpec::PlaneSource { n_tot } => {
            if p.regime == Regime::SpaceFractional {
                Ok(PointValue::exact(n_tot * space_frac_cauchy(p.mu(), p.d, x, t)?))
            } else {
                tf_plane_source(p, n_tot, x, t).map(PointValue::exact)
            }
        }
        ProblemSpec::StepSource { c0 } => tf_step_source(p, c0, x, t).map(PointValue::exact),
        ProblemSpec::Signaling { c0 } => tf_signaling(p, c0, x, t).map(PointValue::exact),
        ProblemSpec::FiniteEqualBc { c0, l, series_terms } => {
            let s = tf_finite_equal(p, c0, l, x, t, series_terms)?;
            Ok(PointValue {
                value: s.value,
                truncation_bound: s.truncation_bound,
                warning: s.warning,
            })
        }
        ProblemSpec::FiniteUnequalBc {
            c1,
            c2,
            l,
            series_terms,
        } => {
            let s = tf_finite_unequal(p, c1, c2, l, x, t, series_terms)?;
            Ok(PointValue {
                value: s.value,
                truncation_bound: s.truncation_bound,
                warning: s.warning,
            })
        }
        ProblemSpec::Radial2dCauchy => {
            if p.alpha != p.beta || p.regime == Regime::SpaceFractional {
                return Err(Error::domain(
                    "the planar point source needs time-fractional parameters",
                ));
            }
            radial2d_cauchy(p.beta, p.d, x, t, &QuadratureSpec::default()).map(PointValue::exact)
        }
        ProblemSpec::SpaceFracCauchy => {
            if p.regime != Regime::SpaceFractional {
                return Err(Error::domain(
                    "the Riesz point source needs space-fractional parameters",
                ));
            }
            space_frac_cauchy(p.mu(), p.d, x, t).map(PointValue::exact)
        }
    }
}

/// Evaluates a problem over every (x, t) pair of the grid.
pub fn solve(problem: &ProblemSpec, p: &TransportParams, xs: &[f64], ts: &[f64]) -> Result<Field> {
    problem.validate()?;
    p.validate()?;
    let rows: Vec<Vec<PointValue>> = ts
        .par_iter()
        .map(|&t| {
            xs.par_iter()
                .map(|&x| evaluate(problem, p, x, t))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut bound: f64 = 0.0;
    let mut warnings = Vec::new();
    for (row, &t) in rows.iter().zip(ts) {
        for v in row {
            bound = bound.max(v.truncation_bound);
        }
        if let Some(w) = row.iter().find_map(|v| v.warning) {
            warnings.push(format!("t = {t}: {w:?}"));
        }
    }
    Ok(Field {
        x: xs.to_vec(),
        t: ts.to_vec(),
        c: rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.value).collect())
            .collect(),
        meta: FieldMeta {
            problem: *problem,
            params: *p,
            truncation_error_estimate: bound,
            warnings,
        },
    })
}
