//! The defining double series of Ψ₁, summed along anti-diagonals.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, Psi1Method, SeriesControl};
use crate::hyp::series::LsSum;
use crate::psi1::params::{Psi1Params, Psi1Point};
use crate::scaled::{LogScaled, C64};

/// `Σ_{m,n} (a)_{m+n} (b)_m / ((c)_m (c')_n m! n!) x^m y^n` for `|x| < 1`.
///
/// The diagonal `m + n = s` is gathered as `(a)_s Σ_m P_m Q_{s-m}` with
/// `P_m = (b)_m x^m / ((c)_m m!)` and `Q_n = y^n / ((c')_n n!)`, each
/// diagonal summed relative to its own largest term.
pub fn psi1_double_series(p: &Psi1Params, pt: &Psi1Point, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let method = Method::Psi1(Psi1Method::DoubleSeries);
    let (x, y) = (pt.x, pt.y);
    if x.norm() >= 1.0 {
        return Err(Error::OutsideDomain(format!("double series needs |x| < 1, got |x| = {}", x.norm())));
    }
    let zero = C64::new(0.0, 0.0);
    if x == zero && y == zero {
        return Ok(EvalResult::exact(LogScaled::ONE, 1, method));
    }

    let mut pm: Vec<LogScaled> = vec![LogScaled::ONE];
    let mut qn: Vec<LogScaled> = vec![LogScaled::ONE];
    let mut a_s = LogScaled::ONE;
    let mut sum = LsSum::new(ctrl);
    let mut mantissas: Vec<(C64, f64)> = Vec::new();
    for s in 0..ctrl.max_terms {
        if s > 0 {
            let k = (s - 1) as f64;
            pm.push(pm[s - 1].scale((p.b + k) * x / ((p.c + k) * (k + 1.0))));
            qn.push(qn[s - 1].scale(y / ((p.c_prime + k) * (k + 1.0))));
            a_s = a_s.scale(p.a + k);
        }
        if a_s.is_zero() {
            return Ok(sum.finish_exact(method));
        }
        mantissas.clear();
        let mut top = f64::NEG_INFINITY;
        for m in 0..=s {
            let (u, v) = (pm[m], qn[s - m]);
            if u.is_zero() || v.is_zero() {
                continue;
            }
            let e = u.exponent() + v.exponent();
            top = top.max(e);
            mantissas.push((u.mantissa() * v.mantissa(), e));
        }
        let (diagonal, err) = if mantissas.is_empty() {
            (LogScaled::ZERO, LogScaled::ZERO)
        } else {
            let acc: C64 = mantissas.iter().map(|(m, e)| m * (e - top).exp()).sum();
            let mag: f64 = mantissas.iter().map(|(m, e)| m.norm() * (e - top).exp()).sum();
            // cancellation inside a diagonal shows up as rounding error
            let err = LogScaled::new(C64::new(mag * 4.0 * f64::EPSILON, 0.0), top) * a_s.abs();
            (LogScaled::new(acc, top) * a_s, err)
        };
        if sum.push(diagonal, err) {
            return Ok(sum.finish(ctrl.stagnation_window, method, true));
        }
    }
    Err(sum.no_convergence())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp::pfq::pfq;

    fn r(v: f64) -> C64 {
        C64::new(v, 0.0)
    }

    #[test]
    fn origin_is_one() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let v = psi1_double_series(&p, &Psi1Point::real(0.0, 0.0).unwrap(), &SeriesControl::default()).unwrap();
        assert_eq!(v.value.to_complex(), r(1.0));
    }

    #[test]
    fn y_zero_slice_is_gauss() {
        let ctrl = SeriesControl::default();
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let v = psi1_double_series(&p, &Psi1Point::real(0.4, 0.0).unwrap(), &ctrl).unwrap();
        let f = pfq(&[r(3.0), r(1.5)], &[r(2.5)], r(0.4), &ctrl).unwrap();
        assert!((v.value.ratio(&f.value) - 1.0).norm() < 1e-11);
    }

    #[test]
    fn reference_value() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let v = psi1_double_series(&p, &Psi1Point::real(0.3, 0.7).unwrap(), &SeriesControl::default()).unwrap();
        assert!((v.value.to_complex().re - 4.641_128_113_636_777_9).abs() < 1e-12);
    }

    #[test]
    fn outside_disk() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let r = psi1_double_series(&p, &Psi1Point::real(-1.5, 0.0).unwrap(), &SeriesControl::default());
        assert!(matches!(r, Err(Error::OutsideDomain(_))));
    }
}
