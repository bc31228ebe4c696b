//! The Kummer-type transformation of Ψ₁.

use crate::error::Result;
use crate::eval::{EvalResult, Method, Psi1Method};
use crate::psi1::auto::{evaluate_with, Psi1Config};
use crate::psi1::params::{Psi1Params, Psi1Point};
use crate::scaled::{LogScaled, C64};

/// `(1-x)^{-a} Ψ₁[a, c-b; c, c'; x/(x-1), y/(1-x)]`, with the transformed
/// function evaluated by `inner`.
pub fn psi1_kummer(p: &Psi1Params, pt: &Psi1Point, inner: Psi1Method, cfg: &Psi1Config) -> Result<EvalResult> {
    let q = p.kummer_image();
    let image = pt.kummer_image();
    let qt = Psi1Point::new(image.x, image.y)?;
    let r = evaluate_with(inner, &q, &qt, cfg)?;
    Ok(r.scaled(kummer_prefactor(p.a, pt)).with_method(Method::Kummer(inner)))
}

/// `(1-x)^{-a}` on the principal branch.
pub(crate) fn kummer_prefactor(a: C64, pt: &Psi1Point) -> LogScaled {
    LogScaled::exp(-a * pt.one_minus_x().ln())
}
