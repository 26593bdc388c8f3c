//! Special functions used by the scattering, angular and thermodynamic
//! modules. All operations are pure; NaN never leaves a public function.

mod double_double;
mod coulomb;
mod dawson;
mod gamma;
mod hyp1f1;
mod hyp2f1;

use num_complex::Complex64;

/// Complex number type used across the public API.
pub type ComplexValue = Complex64;

pub use coulomb::coulomb_f;
pub use dawson::{dawson, dawson_deficit, erfi, erfi_overflow_threshold, ln_erfi};
pub use gamma::{gamma, log_gamma, reciprocal_gamma, wrap_angle, POLE_TOLERANCE};
pub use hyp1f1::{
    asymptotic_branch, hyp1f1, hyp1f1_asymptotic, hyp1f1_series, series_branch,
    BranchEvaluation, ACCURACY as HYP1F1_ACCURACY, SWITCH_RADIUS,
};
pub use hyp2f1::hyp2f1_terminating;
