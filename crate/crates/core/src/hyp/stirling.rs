//! The generating function `Φ_a(x) = Σ_{k≥1} k^a x^k / k!`.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, SeriesControl};
use crate::hyp::series::sum_by_ratio;
use crate::scaled::{LogScaled, C64};

/// `Φ_a(x)` in log-scaled form.
pub fn phi_stirling_scaled(a: f64, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::OutsideDomain(format!("x must be positive, got {x}")));
    }
    sum_by_ratio(
        LogScaled::from_real(x),
        |i| {
            let k = i as f64 + 1.0;
            C64::new((1.0 + 1.0 / k).powf(a) * x / (k + 1.0), 0.0)
        },
        ctrl,
        Method::StirlingSeries,
    )
}

/// `Φ_a(x)` as a plain float; infinite once the value leaves `f64` range.
pub fn phi_stirling(a: f64, x: f64, ctrl: &SeriesControl) -> Result<f64> {
    Ok(phi_stirling_scaled(a, x, ctrl)?.value.to_complex().re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn closed_forms() {
        let ctrl = SeriesControl::default();
        assert!((phi_stirling(0.0, 1.0, &ctrl).unwrap() - (E - 1.0)).abs() < 1e-14);
        assert!((phi_stirling(1.0, 2.0, &ctrl).unwrap() - 2.0 * E * E).abs() < 1e-13);
        assert!((phi_stirling(2.0, 1.0, &ctrl).unwrap() - 2.0 * E).abs() < 1e-14);
    }

    #[test]
    fn large_argument_scaled() {
        let ctrl = SeriesControl::default();
        // Φ₁(x) = x e^x
        let v = phi_stirling_scaled(1.0, 900.0, &ctrl).unwrap();
        assert!((v.value.ln_abs() - (900.0 + 900f64.ln())).abs() < 1e-11);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(phi_stirling(1.0, 0.0, &SeriesControl::default()).is_err());
    }
}
