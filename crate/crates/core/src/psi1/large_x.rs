//! Representation of Ψ₁ for `|1 - x| > 1`.
//!
//! `Ψ₁ = f_c(b, a) (1-x)^{-a} V₁ + f_c(a, b) (1-x)^{-b} V₂` with
//! `f_γ(a, b) = Γ(γ)Γ(a-b)/(Γ(a)Γ(γ-b))` and `V₁`, `V₂` series in
//! `(1-x)^{-1}` whose coefficients are `2F2` functions.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, Psi1Method, SeriesControl};
use crate::gamma::{log_gamma, rgamma_ls};
use crate::psi1::near_unit::combine;
use crate::psi1::params::{Psi1Params, Psi1Point};
use crate::hyp::series::coefficient_series;
use crate::psi1::f22;
use crate::scaled::{LogScaled, C64};

/// The two series of the large-`x` representation.
#[derive(Debug, Clone, Copy)]
pub struct LargeXParts {
    /// `Σ (a)_n (c-b)_n / ((a-b+1)_n n!) (1-x)^{-n} 2F2[a-c+1, a+n; c', a-b+1+n; y/(1-x)]`.
    pub v1: EvalResult,
    /// `Σ (b)_n (c-a)_n / ((b-a+1)_n n!) (1-x)^{-n} 2F2[a-c+1, a-b-n; c', a-c+1-n; y]`.
    pub v2: EvalResult,
}

fn check(p: &Psi1Params, pt: &Psi1Point) -> Result<()> {
    if !p.large_x_ok() {
        return Err(Error::DegenerateCase(format!(
            "a - b = {} or a - c = {} is an integer",
            p.a - p.b,
            p.a - p.c
        )));
    }
    let w = pt.one_minus_x();
    if w.norm() <= 1.0 {
        return Err(Error::OutsideDomain(format!("large-x representation needs |1 - x| > 1, got {}", w.norm())));
    }
    Ok(())
}

pub fn large_x_parts(p: &Psi1Params, pt: &Psi1Point, ctrl: &SeriesControl) -> Result<LargeXParts> {
    ctrl.validate()?;
    check(p, pt)?;
    let (a, b, c, cp, y) = (p.a, p.b, p.c, p.c_prime, pt.y);
    let w = pt.one_minus_x();
    let inv = C64::new(1.0, 0.0) / w;
    let v1 = coefficient_series(
        ctrl,
        |k| (a + k) * (c - b + k) / ((a - b + 1.0 + k) * (k + 1.0)) * inv,
        |n| f22(a - c + 1.0, a + n, cp, a - b + 1.0 + n, y * inv, ctrl),
    )?;
    let v2 = coefficient_series(
        ctrl,
        |k| (b + k) * (c - a + k) / ((b - a + 1.0 + k) * (k + 1.0)) * inv,
        |n| f22(a - c + 1.0, a - b - n, cp, a - c + 1.0 - n, y, ctrl),
    )?;
    Ok(LargeXParts { v1, v2 })
}

/// `f_γ(a, b) = Γ(γ)Γ(a-b)/(Γ(a)Γ(γ-b))`.
pub fn connection_coefficient(gamma: C64, a: C64, b: C64) -> Result<LogScaled> {
    Ok(LogScaled::exp(log_gamma(gamma)? + log_gamma(a - b)?) * rgamma_ls(a) * rgamma_ls(gamma - b))
}

pub fn psi1_large_x(p: &Psi1Params, pt: &Psi1Point, ctrl: &SeriesControl) -> Result<EvalResult> {
    let parts = large_x_parts(p, pt, ctrl)?;
    let lw = pt.one_minus_x().ln();
    let k1 = connection_coefficient(p.c, p.b, p.a)? * LogScaled::exp(-p.a * lw);
    let k2 = connection_coefficient(p.c, p.a, p.b)? * LogScaled::exp(-p.b * lw);
    let total = combine(parts.v1.scaled(k1), parts.v2.scaled(k2));
    Ok(total.with_method(Method::Psi1(Psi1Method::LargeX)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi1::single_series::psi1_single_series;

    #[test]
    fn agrees_with_single_series() {
        let ctrl = SeriesControl::default();
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let pt = Psi1Point::real(-3.0, 0.5).unwrap();
        let l = psi1_large_x(&p, &pt, &ctrl).unwrap();
        let s = psi1_single_series(&p, &pt, &ctrl).unwrap();
        assert!((l.value.ratio(&s.value) - 1.0).norm() < 1e-9);
    }

    #[test]
    fn reference_value() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let v = psi1_large_x(&p, &Psi1Point::real(-9.0, 2.0).unwrap(), &SeriesControl::default()).unwrap();
        assert!((v.value.to_complex().re / 0.065_751_054_259_463_41 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn degenerate_parameters() {
        let p = Psi1Params::real(3.0, 1.0, 2.5, 3.0).unwrap();
        let r = psi1_large_x(&p, &Psi1Point::real(-3.0, 0.5).unwrap(), &SeriesControl::default());
        assert!(matches!(r, Err(Error::DegenerateCase(_))));
        let q = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let r = psi1_large_x(&q, &Psi1Point::real(0.5, 0.5).unwrap(), &SeriesControl::default());
        assert!(matches!(r, Err(Error::OutsideDomain(_))));
    }
}
