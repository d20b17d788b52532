use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper M-Wright order for which results are held to the default tolerance.
pub const M_WRIGHT_TRUSTED_MAX: f64 = 0.65;

/// What a fractional order parameter is used for; each role has its own
/// admissible range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderRole {
    /// ν > 0
    MittagLeffler,
    /// ν ∈ (0, 1)
    MWright,
    /// ν ∈ (0, 1)
    ErrorFn,
    /// 2μ ∈ (0, 2]
    Levy,
}

impl fmt::Display for OrderRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrderRole::MittagLeffler => "Mittag-Leffler order",
            OrderRole::MWright => "M-Wright order",
            OrderRole::ErrorFn => "fractional error-function order",
            OrderRole::Levy => "Levy stability index",
        };
        f.write_str(s)
    }
}

/// A validated fractional order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FracOrder {
    value: f64,
    role: OrderRole,
}

impl FracOrder {
    pub fn new(value: f64, role: OrderRole) -> Result<Self> {
        let ok = value.is_finite()
            && match role {
                OrderRole::MittagLeffler => value > 0.0,
                OrderRole::MWright | OrderRole::ErrorFn => value > 0.0 && value < 1.0,
                OrderRole::Levy => value > 0.0 && value <= 2.0,
            };
        if ok {
            Ok(Self { value, role })
        } else {
            let range = match role {
                OrderRole::MittagLeffler => "(0, inf)",
                OrderRole::MWright | OrderRole::ErrorFn => "(0, 1)",
                OrderRole::Levy => "(0, 2]",
            };
            Err(Error::domain(format!("{role} {value} outside {range}")))
        }
    }

    pub fn mittag_leffler(nu: f64) -> Result<Self> {
        Self::new(nu, OrderRole::MittagLeffler)
    }

    pub fn m_wright(nu: f64) -> Result<Self> {
        Self::new(nu, OrderRole::MWright)
    }

    pub fn error_fn(nu: f64) -> Result<Self> {
        Self::new(nu, OrderRole::ErrorFn)
    }

    pub fn levy(two_mu: f64) -> Result<Self> {
        Self::new(two_mu, OrderRole::Levy)
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.value
    }

    #[inline]
    pub fn role(&self) -> OrderRole {
        self.role
    }

    /// Wright-type orders above 0.65 are computed but not held to the
    /// default tolerance.
    pub fn degraded_precision(&self) -> bool {
        matches!(self.role, OrderRole::MWright | OrderRole::ErrorFn) && self.value > M_WRIGHT_TRUSTED_MAX
    }

    pub(crate) fn expect_role(&self, role: OrderRole) -> Result<()> {
        if self.role == role {
            Ok(())
        } else {
            Err(Error::domain(format!("expected a {role}, got a {}", self.role)))
        }
    }
}

/// Series truncation and acceptance controls.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
    /// Ratio of the largest partial term to the result above which a series
    /// value is rejected outright.
    pub cancellation_guard: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_terms: 2000,
            cancellation_guard: 1e12,
        }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::domain("rel_tol must be positive"));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::domain("abs_tol must be non-negative"));
        }
        if self.max_terms < 1 {
            return Err(Error::domain("max_terms must be at least 1"));
        }
        if !(self.cancellation_guard > 1.0) {
            return Err(Error::domain("cancellation_guard must exceed 1"));
        }
        Ok(())
    }

    pub(crate) fn accepts(&self, err: f64, value: f64) -> bool {
        err <= self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    ContourInversion,
    Asymptotic,
    Quadrature,
    ClosedForm,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::ContourInversion => "contour_inversion",
            Method::Asymptotic => "asymptotic",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A scalar result with an error estimate and the producing method.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOutcome {
    pub value: f64,
    pub err_estimate: f64,
    pub method: Method,
    /// Set when the order lies outside the range with guaranteed tolerance.
    pub degraded_precision: bool,
}

impl EvalOutcome {
    pub(crate) fn new(value: f64, err_estimate: f64, method: Method) -> Self {
        Self {
            value,
            err_estimate: err_estimate.abs(),
            method,
            degraded_precision: false,
        }
    }

    pub(crate) fn degraded(mut self, flag: bool) -> Self {
        self.degraded_precision = flag;
        self
    }
}
