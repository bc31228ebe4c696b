//! Ψ₁ as a single series of Gauss functions, valid on the whole cut plane
//! in `x`.

use crate::error::Result;
use crate::eval::{EvalResult, Method, Psi1Method, SeriesControl};
use crate::hyp::f21::f21;
use crate::hyp::series::coefficient_series;
use crate::psi1::params::{Psi1Params, Psi1Point};

/// `Σ_n (a)_n / (c')_n · 2F1[a+n, b; c; x] · y^n / n!`.
pub fn psi1_single_series(p: &Psi1Params, pt: &Psi1Point, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let r = coefficient_series(
        ctrl,
        |k| (p.a + k) * pt.y / ((p.c_prime + k) * (k + 1.0)),
        |n| f21(p.a + n, p.b, p.c, pt.x, ctrl),
    )?;
    Ok(r.with_method(Method::Psi1(Psi1Method::SingleSeries)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi1::double_series::psi1_double_series;
    use crate::scaled::C64;

    #[test]
    fn x_zero_reduces_to_kummer_function() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let v = psi1_single_series(&p, &Psi1Point::real(0.0, 2.0).unwrap(), &SeriesControl::default()).unwrap();
        assert!((v.value.to_complex().re - 2f64.exp()).abs() < 1e-13);
    }

    #[test]
    fn agrees_with_double_series() {
        let ctrl = SeriesControl::default();
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let pt = Psi1Point::real(0.3, 0.7).unwrap();
        let s = psi1_single_series(&p, &pt, &ctrl).unwrap();
        let d = psi1_double_series(&p, &pt, &ctrl).unwrap();
        assert!((s.value.ratio(&d.value) - 1.0).norm() < 1e-10);
    }

    #[test]
    fn continuation_reference() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let v = psi1_single_series(&p, &Psi1Point::real(-3.0, 0.5).unwrap(), &SeriesControl::default()).unwrap();
        assert!((v.value.to_complex() - C64::new(0.122_828_923_771_953_87, 0.0)).norm() < 1e-12);
    }
}
