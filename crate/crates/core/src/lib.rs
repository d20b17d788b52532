//! Special functions, fractional operators and analytic solutions for
//! anomalous diffusion, with a verification harness for the identities
//! that connect them.

// `!(a < b)` is used deliberately so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fraccalc;
pub mod solutions;
pub mod specfun;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use fraccalc::{FluxForm, SampledFunction};
pub use solutions::{Field, ProblemSpec, Regime, TransportParams};
pub use specfun::{EvalOutcome, FracOrder, Method, OrderRole, SeriesControl};
pub use transforms::QuadratureSpec;
