use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Transport regime of a master diffusion equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Fickian,
    StretchedTime,
    TimeFractional,
    StretchedTimeFractional,
    SpaceFractional,
}

impl Regime {
    pub const TABLE: [Regime; 4] = [
        Regime::Fickian,
        Regime::StretchedTime,
        Regime::TimeFractional,
        Regime::StretchedTimeFractional,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Fickian => "fickian",
            Regime::StretchedTime => "stretched_time",
            Regime::TimeFractional => "time_fractional",
            Regime::StretchedTimeFractional => "stretched_time_fractional",
            Regime::SpaceFractional => "space_fractional",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "fickian" => Regime::Fickian,
            "stretched_time" | "st" => Regime::StretchedTime,
            "time_fractional" | "tf" => Regime::TimeFractional,
            "stretched_time_fractional" | "stf" => Regime::StretchedTimeFractional,
            "space_fractional" | "sf" => Regime::SpaceFractional,
            other => return Err(Error::domain(format!("unknown regime '{other}'"))),
        })
    }
}

/// Exponents and diffusivity of a transport model.
///
/// `alpha` scales time (t^α), `beta` is the fractional order. For the
/// space-fractional regime `beta` holds the stability index 2μ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransportParams {
    pub alpha: f64,
    pub beta: f64,
    pub d: f64,
    pub regime: Regime,
}

impl TransportParams {
    pub fn new(alpha: f64, beta: f64, d: f64, regime: Regime) -> Result<Self> {
        let p = Self { alpha, beta, d, regime };
        p.validate()?;
        Ok(p)
    }

    pub fn fickian(d: f64) -> Result<Self> {
        Self::new(1.0, 1.0, d, Regime::Fickian)
    }

    pub fn stretched_time(alpha: f64, d: f64) -> Result<Self> {
        Self::new(alpha, 1.0, d, Regime::StretchedTime)
    }

    pub fn time_fractional(beta: f64, d: f64) -> Result<Self> {
        Self::new(beta, beta, d, Regime::TimeFractional)
    }

    pub fn stretched_time_fractional(alpha: f64, beta: f64, d: f64) -> Result<Self> {
        Self::new(alpha, beta, d, Regime::StretchedTimeFractional)
    }

    /// Riesz space-fractional diffusion with μ ∈ (0, 1].
    pub fn space_fractional(mu: f64, d: f64) -> Result<Self> {
        Self::new(1.0, 2.0 * mu, d, Regime::SpaceFractional)
    }

    pub fn mu(&self) -> f64 {
        self.beta / 2.0
    }

    pub fn validate(&self) -> Result<()> {
        let Self { alpha, beta, d, regime } = *self;
        if !(d > 0.0 && d.is_finite()) {
            return Err(Error::domain(format!("diffusivity must be positive, got {d}")));
        }
        if !(alpha > 0.0 && alpha < 2.0) {
            return Err(Error::domain(format!("alpha must lie in (0, 2), got {alpha}")));
        }
        if !(beta > 0.0 && beta <= 2.0) {
            return Err(Error::domain(format!("beta must lie in (0, 2], got {beta}")));
        }
        let ok = match regime {
            Regime::Fickian => alpha == 1.0 && beta == 1.0,
            Regime::StretchedTime => beta == 1.0,
            Regime::TimeFractional => alpha == beta && beta < 2.0,
            Regime::StretchedTimeFractional => beta <= 1.0,
            Regime::SpaceFractional => alpha == 1.0,
        };
        if !ok {
            return Err(Error::domain(format!(
                "alpha = {alpha}, beta = {beta} is not admissible for the {regime} regime"
            )));
        }
        Ok(())
    }

    /// Generalised diffusion length squared, D t^α.
    pub fn spread(&self, t: f64) -> f64 {
        self.d * t.powf(self.alpha)
    }
}

/// A cataloged diffusion problem and its physical data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProblemSpec {
    /// Instantaneous plane source of mass `n_tot` at x = 0.
    PlaneSource { n_tot: f64 },
    /// Initial step: c0 for x < 0, zero for x > 0.
    StepSource { c0: f64 },
    /// Semi-infinite medium held at c0 on x = 0.
    Signaling { c0: f64 },
    /// Sheet −L ≤ x ≤ L, both faces held at c0.
    FiniteEqualBc { c0: f64, l: f64, series_terms: usize },
    /// Sheet 0 ≤ x ≤ L with faces at c1 and c2.
    FiniteUnequalBc {
        c1: f64,
        c2: f64,
        l: f64,
        series_terms: usize,
    },
    /// Unit point source in the plane.
    Radial2dCauchy,
    /// Unit point source on the line under Riesz diffusion.
    SpaceFracCauchy,
}

pub const DEFAULT_SERIES_TERMS: usize = 100_000;

impl ProblemSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemSpec::PlaneSource { .. } => "plane_source",
            ProblemSpec::StepSource { .. } => "step_source",
            ProblemSpec::Signaling { .. } => "signaling",
            ProblemSpec::FiniteEqualBc { .. } => "finite_equal_bc",
            ProblemSpec::FiniteUnequalBc { .. } => "finite_unequal_bc",
            ProblemSpec::Radial2dCauchy => "radial2d_cauchy",
            ProblemSpec::SpaceFracCauchy => "space_frac_cauchy",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let nonneg = |name: &str, v: f64| {
            if v >= 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::domain(format!("{name} must be finite and >= 0, got {v}")))
            }
        };
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::domain(format!("{name} must be positive, got {v}")))
            }
        };
        match *self {
            ProblemSpec::PlaneSource { n_tot } => nonneg("n_tot", n_tot),
            ProblemSpec::StepSource { c0 } | ProblemSpec::Signaling { c0 } => nonneg("c0", c0),
            ProblemSpec::FiniteEqualBc { c0, l, series_terms } => {
                nonneg("c0", c0)?;
                positive("L", l)?;
                terms(series_terms)
            }
            ProblemSpec::FiniteUnequalBc {
                c1,
                c2,
                l,
                series_terms,
            } => {
                nonneg("c1", c1)?;
                nonneg("c2", c2)?;
                positive("L", l)?;
                terms(series_terms)
            }
            ProblemSpec::Radial2dCauchy | ProblemSpec::SpaceFracCauchy => Ok(()),
        }
    }

    /// Whether ∫c over the domain is conserved in time.
    pub fn conserves_mass(&self) -> bool {
        matches!(
            self,
            ProblemSpec::PlaneSource { .. } | ProblemSpec::Radial2dCauchy | ProblemSpec::SpaceFracCauchy
        )
    }
}

fn terms(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("series_terms must be at least 1"))
    } else {
        Ok(())
    }
}
