//! The Humbert function `Ψ₁[a, b; c, c'; x, y]` and its representations.

pub mod asym;
pub mod auto;
pub mod double_series;
pub mod integral;
pub mod kummer;
pub mod large_x;
pub mod near_unit;
pub mod params;
pub mod single_series;

pub use asym::psi1_leading_asym;
pub use auto::{candidate_methods, evaluate_with, psi1_auto, Psi1Config};
pub use double_series::psi1_double_series;
pub use integral::{psi1_integral, psi1_integral_with};
pub use kummer::psi1_kummer;
pub use large_x::{large_x_parts, psi1_large_x, LargeXParts};
pub use near_unit::psi1_near_unit;
pub use params::{AsymRegime, Psi1Params, Psi1Point};
pub use single_series::psi1_single_series;

use crate::error::{Error, Result};
use crate::eval::{EvalResult, SeriesControl};
use crate::hyp::pfq::pfq;
use crate::scaled::C64;

/// `2F2[a1, a2; b1, b2; z]`, reporting denominator poles as degenerate
/// parameter combinations of the enclosing representation.
pub(crate) fn f22(a1: C64, a2: C64, b1: C64, b2: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    pfq(&[a1, a2], &[b1, b2], z, ctrl).map_err(|e| match e {
        Error::DenominatorPole(s) => Error::DegenerateCase(format!("inner 2F2 denominator {s}")),
        other => other,
    })
}
