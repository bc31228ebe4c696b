//! Expansion of Ψ₁ around `x = 1`.
//!
//! Applying the connection formula of the Gauss function termwise gives two
//! series in powers of `1 - x` whose coefficients involve `2F2` functions of
//! `y` and `y/(1-x)`. Both series converge for `|1 - x| < 1`.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, Psi1Method, SeriesControl};
use crate::gamma::{log_gamma, rgamma_ls};
use crate::psi1::params::{Psi1Params, Psi1Point};
use crate::hyp::series::coefficient_series;
use crate::psi1::f22;
use crate::scaled::{LogScaled, C64};

pub fn psi1_near_unit(p: &Psi1Params, pt: &Psi1Point, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    if !p.near_unit_ok() {
        return Err(Error::DegenerateCase(format!("a + b - c = {} is an integer", p.a + p.b - p.c)));
    }
    let w = pt.one_minus_x();
    if w.norm() >= 1.0 {
        return Err(Error::OutsideDomain(format!("near-unit expansion needs |1 - x| < 1, got {}", w.norm())));
    }
    let (a, b, c, cp, y) = (p.a, p.b, p.c, p.c_prime, pt.y);
    let s = c - a - b;
    let one = C64::new(1.0, 0.0);
    let lgc = log_gamma(c)?;
    let method = Method::Psi1(Psi1Method::NearUnit);

    let c1 = LogScaled::exp(lgc + log_gamma(s)?) * rgamma_ls(c - a) * rgamma_ls(c - b);
    let c2 = LogScaled::exp(lgc + log_gamma(-s)? + s * w.ln()) * rgamma_ls(a) * rgamma_ls(b);

    let mut total: Option<EvalResult> = None;
    if !c1.is_zero() {
        let s1 = coefficient_series(
            ctrl,
            |k| (a + k) * (b + k) / ((one - s + k) * (k + 1.0)) * w,
            |n| f22(a - c + 1.0, a + n, cp, one - s + n, y, ctrl),
        )?;
        total = Some(s1.scaled(c1));
    }
    if !c2.is_zero() {
        let s2 = coefficient_series(
            ctrl,
            |k| (c - a + k) * (c - b + k) / ((s + 1.0 + k) * (k + 1.0)) * w,
            |n| f22(a - c + 1.0, -s - n, cp, a - c + 1.0 - n, y / w, ctrl),
        )?
        .scaled(c2);
        total = Some(match total {
            Some(t) => combine(t, s2),
            None => s2,
        });
    }
    Ok(total
        .unwrap_or_else(|| EvalResult::exact(LogScaled::ZERO, 0, method))
        .with_method(method))
}

/// Sum of two results, keeping the combined error and term count.
pub(crate) fn combine(u: EvalResult, v: EvalResult) -> EvalResult {
    let value = u.value + v.value;
    let magnitude = u.value.abs() + v.value.abs();
    EvalResult {
        value,
        abs_err: u.abs_err + v.abs_err + magnitude * (4.0 * f64::EPSILON),
        terms: u.terms + v.terms,
        method: u.method,
        converged: u.converged && v.converged,
    }
}
