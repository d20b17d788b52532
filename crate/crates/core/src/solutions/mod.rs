//! Analytic solutions of Fickian, stretched-time, time-fractional,
//! stretched-time-fractional and space-fractional diffusion problems.

mod field;
mod finite;
mod infinite;
mod params;
mod radial;
mod translate;

pub use field::{evaluate, solve, Field, FieldMeta, PointValue};
pub use finite::{tf_finite_equal, tf_finite_unequal, SeriesValue, TruncationWarning, SERIES_REL_TOL};
pub use infinite::{
    space_frac_cauchy, st_gaussian, stf_green, stf_signaling, tf_plane_source, tf_signaling, tf_step_source,
};
pub use params::{ProblemSpec, Regime, TransportParams, DEFAULT_SERIES_TERMS};
pub use radial::{radial2d_cauchy, radial2d_hankel};
pub use translate::{translate_kernel, KernelArgs, KernelEntry};

use crate::error::{Error, Result};
use crate::specfun::gamma;

/// Mean-squared displacement of the regime's point-source solution,
/// 2 D t^α / Γ(β + 1).
pub fn msd(p: &TransportParams, t: f64) -> Result<f64> {
    p.validate()?;
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("time must be positive, got {t}")));
    }
    if p.regime == Regime::SpaceFractional {
        if p.beta == 2.0 {
            return Ok(2.0 * p.d * t);
        }
        return Err(Error::domain(
            "the second moment of a Levy stable density with index below 2 is infinite",
        ));
    }
    Ok(2.0 * p.d * t.powf(p.alpha) / gamma(p.beta + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn msd_examples() {
        assert_eq!(msd(&TransportParams::fickian(1.0).unwrap(), 1.0).unwrap(), 2.0);
        let v = msd(&TransportParams::time_fractional(0.5, 1.0).unwrap(), 1.0).unwrap();
        assert!((v - 2.256758334191025).abs() < 1e-14);
        assert!(msd(&TransportParams::space_fractional(0.5, 1.0).unwrap(), 1.0).is_err());
    }
}
