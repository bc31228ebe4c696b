//! Kummer's confluent function `1F1[a; c; z]` with regime switching.
//!
//! Arguments with negative real part go through Kummer's transformation
//! `1F1[a; c; z] = e^z 1F1[c-a; c; -z]`. Large arguments use the two-term
//! asymptotic expansion summed to its smallest term, with the exponential
//! factor carried in log-scaled form.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, SeriesControl};
use crate::gamma::{is_nonpositive_integer, log_gamma};
use crate::hyp::pfq::pfq_unchecked;
use crate::hyp::series::asymptotic_sum;
use crate::scaled::{LogScaled, C64};

/// Below this modulus the asymptotic expansion is never attempted.
const ASYMPTOTIC_MIN_ABS: f64 = 20.0;

/// Cancellation allowance `|z| - Re z` tolerated in the direct series before
/// the asymptotic expansion is tried instead.
const CANCELLATION_LIMIT: f64 = 5.0;

/// Second asymptotic contribution is dropped when this many e-folds smaller.
const NEGLIGIBLE_EFOLDS: f64 = 40.0;

pub fn f11(a: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    if is_nonpositive_integer(c) {
        return Err(Error::DenominatorPole(format!("{c}")));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(EvalResult::exact(LogScaled::ONE, 1, Method::F11Series));
    }
    if a == c {
        return Ok(EvalResult::exact(LogScaled::exp(z), 1, Method::F11Series));
    }
    if is_nonpositive_integer(a) {
        return direct(a, c, z, ctrl);
    }
    if z.re < 0.0 {
        let r = right_half(c - a, c, -z, ctrl)?;
        return Ok(r.scaled(LogScaled::exp(z)));
    }
    right_half(a, c, z, ctrl)
}

fn direct(a: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    Ok(pfq_unchecked(&[a], &[c], z, ctrl)?.with_method(Method::F11Series))
}

fn right_half(a: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    if is_nonpositive_integer(a) {
        return direct(a, c, z, ctrl);
    }
    let r = z.norm();
    if r > ctrl.z_direct {
        return f11_asymptotic(a, c, z, ctrl);
    }
    if r > ASYMPTOTIC_MIN_ABS && r - z.re > CANCELLATION_LIMIT {
        if let Ok(res) = f11_asymptotic(a, c, z, ctrl) {
            if res.converged {
                return Ok(res);
            }
        }
    }
    direct(a, c, z, ctrl)
}

/// Two-term large-`|z|` expansion, valid for `|arg z| < π/2` with a
/// uniform margin. `converged` is false when the smallest asymptotic term
/// is not below `rel_tol` relative to the value.
pub fn f11_asymptotic(a: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    if is_nonpositive_integer(c) {
        return Err(Error::DenominatorPole(format!("{c}")));
    }
    if is_nonpositive_integer(a) {
        return direct(a, c, z, ctrl);
    }
    let lz = z.ln();
    let lgc = log_gamma(c)?;
    let max_terms = ctrl.max_terms;

    let pref1 = LogScaled::exp(lgc - log_gamma(a)? + z + (a - c) * lz);
    let s1 = asymptotic_sum(|s| {
        let sf = s as f64;
        (c - a + sf) * (1.0 - a + sf) / ((sf + 1.0) * z)
    }, max_terms);
    let mut value = pref1.scale(s1.sum);
    let mut err = pref1.abs() * s1.first_omitted;
    let mut terms = s1.terms;

    if !is_nonpositive_integer(c - a) {
        let sign = if z.im >= 0.0 { 1.0 } else { -1.0 };
        let phase = C64::new(0.0, sign * PI) * a;
        let ln_pref2 = lgc - log_gamma(c - a)? + phase - a * lz;
        if ln_pref2.re > value.ln_abs() - NEGLIGIBLE_EFOLDS {
            let pref2 = LogScaled::exp(ln_pref2);
            let s2 = asymptotic_sum(|s| {
                let sf = s as f64;
                (a + sf) * (a - c + 1.0 + sf) / ((sf + 1.0) * -z)
            }, max_terms);
            value = value + pref2.scale(s2.sum);
            err = err + pref2.abs() * s2.first_omitted;
            terms += s2.terms;
        } else {
            err = err + LogScaled::exp(C64::new(ln_pref2.re, 0.0));
        }
    }
    err = err + value.abs() * (4.0 * f64::EPSILON);
    let converged = err.abs_ratio(&value) <= ctrl.rel_tol;
    Ok(EvalResult {
        value,
        abs_err: err,
        terms,
        method: Method::F11Asymptotic,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn closed_forms() {
        let v = f11(r(3.0), r(3.0), r(2.0), &ctrl()).unwrap();
        assert!((v.value.to_complex().re - 2f64.exp()).abs() < 1e-14);
        let v = f11(r(1.0), r(2.0), r(1.0), &ctrl()).unwrap();
        assert!((v.value.to_complex().re - (std::f64::consts::E - 1.0)).abs() < 1e-14);
        let v = f11(r(3.0), r(3.0), r(1001.0), &ctrl()).unwrap();
        assert_eq!(v.value.exponent(), 1001.0);
        assert!((v.value.mantissa().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn kummer_branch_matches_direct() {
        let a = C64::new(0.7, 0.2);
        let c = r(1.9);
        let z = r(-6.0);
        let viak = f11(a, c, z, &ctrl()).unwrap();
        let plain = direct(a, c, z, &ctrl()).unwrap();
        assert!((viak.value.ratio(&plain.value) - 1.0).norm() < 1e-12);
    }

    #[test]
    fn large_argument_closed_form() {
        // 1F1[1; 2; z] = (e^z - 1) / z
        for z in [350.0, 900.0, 3001.0] {
            let v = f11(r(1.0), r(2.0), r(z), &ctrl()).unwrap();
            assert_eq!(v.method, Method::F11Asymptotic);
            let expected = z - z.ln();
            assert!((v.value.ln_abs() - expected).abs() < 1e-12, "z = {z}");
        }
        let v = f11(r(1.0), r(2.0), r(-700.0), &ctrl()).unwrap();
        assert!((v.value.to_complex().re - 1.0 / 700.0).abs() < 1e-16);
    }

    #[test]
    fn regime_switch_is_continuous() {
        let a = C64::new(1.3, 0.4);
        let c = r(2.6);
        let below = f11(a, c, r(299.999), &ctrl()).unwrap();
        let above = f11(a, c, r(300.001), &ctrl()).unwrap();
        assert_eq!(below.method, Method::F11Series);
        assert_eq!(above.method, Method::F11Asymptotic);
        let z = r(300.0);
        let d = direct(a, c, z, &ctrl()).unwrap();
        let s = f11_asymptotic(a, c, z, &ctrl()).unwrap();
        assert!((d.value.ratio(&s.value) - 1.0).norm() < 1e-12);
    }

    #[test]
    fn pole_is_reported() {
        assert!(matches!(f11(r(1.0), r(-1.0), r(1.0), &ctrl()), Err(Error::DenominatorPole(_))));
    }
}
