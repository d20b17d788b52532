//! Scalar special functions of fractional calculus: Mittag-Leffler,
//! M-Wright, the fractional error functions N and K, and the symmetric
//! Lévy stable density.

pub mod gamma;
mod levy;
mod mittag_leffler;
mod order;
mod wright;

pub use gamma::{gamma, ln_gamma, rgamma, sin_pi};
pub use levy::{levy, levy_stable_sym, levy_tail_mass};
pub use mittag_leffler::{m_wright_hankel, mittag_leffler, mittag_leffler_two, ml, SERIES_RADIUS};
pub use order::{EvalOutcome, FracOrder, Method, OrderRole, SeriesControl, M_WRIGHT_TRUSTED_MAX};
pub use wright::{frac_erf, frac_erfc, k_erfc, m_wright, m_wright_series_reciprocal, mw, n_erf};
