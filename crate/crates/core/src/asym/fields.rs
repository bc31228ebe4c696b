//! Exact rearrangements of `p+1Fq+1` into series of shifted `pFq` values.
//!
//! `p+1Fq+1[a, b; c, d; z] = Σ_k (a)_k (d-b)_k / ((c)_k (d)_k) (-z)^k/k!
//! · pFq[a+k; c+k; z]`, where `a` and `c` are parameter lists.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, SeriesControl};
use crate::gamma::is_nonpositive_integer;
use crate::hyp::f11::f11;
use crate::hyp::f21::f21;
use crate::hyp::pfq::pfq;
use crate::hyp::series::coefficient_series;
use crate::scaled::{LogScaled, C64};

fn check_denominator(name: &str, v: C64) -> Result<()> {
    if is_nonpositive_integer(v) {
        return Err(Error::DenominatorPole(format!("{name} = {v}")));
    }
    Ok(())
}

/// `2F2[a, b; c, d; z]` as a series of Kummer functions `1F1[a+k; c+k; z]`.
pub fn f22_fields_series(a: C64, b: C64, c: C64, d: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    check_denominator("c", c)?;
    check_denominator("d", d)?;
    let r = coefficient_series(
        ctrl,
        |k| (a + k) * (d - b + k) / ((c + k) * (d + k) * (k + 1.0)) * -z,
        |k| f11(a + k, c + k, z, ctrl),
    )?;
    Ok(r.with_method(Method::FieldsSeries))
}

/// `pFq[num; den; z]` for the inner values of the rearrangement, using
/// closed forms or the Gauss evaluator when `p = q + 1`.
pub(crate) fn inner_pfq(num: &[C64], den: &[C64], z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    match (num.len(), den.len()) {
        (1, 0) => {
            let v = LogScaled::exp(-num[0] * (C64::new(1.0, 0.0) - z).ln());
            Ok(EvalResult::exact(v, 1, Method::PfqSeries))
        }
        (1, 1) => f11(num[0], den[0], z, ctrl),
        (2, 1) => f21(num[0], num[1], den[0], z, ctrl),
        _ => pfq(num, den, z, ctrl),
    }
}

/// `p+1Fq+1[num, b; den, d; z]` rebuilt from shifted `pFq[num+k; den+k; z]`.
///
/// For `p = q + 1` the rearrangement is only used with `Re z < 1/2`.
pub fn pfp_luke_series(
    num: &[C64],
    den: &[C64],
    b: C64,
    d: C64,
    z: C64,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    ctrl.validate()?;
    let (p, q) = (num.len(), den.len());
    if p > q + 1 {
        return Err(Error::ShapeViolation(format!("p = {p} exceeds q + 1 = {}", q + 1)));
    }
    if p == q + 1 && z.re >= 0.5 {
        return Err(Error::DomainViolation(format!("p = q + 1 needs Re z < 1/2, got {}", z.re)));
    }
    for v in den {
        check_denominator("denominator", *v)?;
    }
    check_denominator("d", d)?;
    let r = coefficient_series(
        ctrl,
        |k| {
            let mut r = (d - b + k) / ((d + k) * (k + 1.0)) * -z;
            for a in num {
                r *= a + k;
            }
            for c in den {
                r /= c + k;
            }
            r
        },
        |k| {
            let shifted_num: Vec<C64> = num.iter().map(|a| a + k).collect();
            let shifted_den: Vec<C64> = den.iter().map(|c| c + k).collect();
            inner_pfq(&shifted_num, &shifted_den, z, ctrl)
        },
    )?;
    Ok(r.with_method(Method::LukeSeries))
}
