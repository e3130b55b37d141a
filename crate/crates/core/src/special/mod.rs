//! Special-function substrate: log-Gamma, Pochhammer symbols, generalized
//! hypergeometric series and modified Bessel functions.

mod bessel;
mod gamma;
mod hypergeometric;

pub use bessel::{bessel_i, bessel_k};
pub use gamma::{ln_gamma, log_pochhammer, pochhammer};
pub use hypergeometric::{pfq, pfq_real, HypergeometricParams, SeriesResult, DEFAULT_TOL};
