//! Gauss' function `2F1[a, b; c; z]`.
//!
//! The evaluator picks, among the direct series in `z`, the direct series in
//! the Pfaff variable `z/(z-1)`, the connection formula around `z = 1` in
//! either variable and the inversion formulas in `1/z` and `1/(1-z)`, the
//! representation whose series variable is smallest.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, SeriesControl};
use crate::gamma::{is_integer, is_nonpositive_integer, log_gamma, rgamma_ls};
use crate::hyp::pfq::pfq_unchecked;
use crate::scaled::{LogScaled, C64};

/// Preferred bound on the modulus of the series variable.
pub const F21_SERIES_RADIUS: f64 = 0.8;

/// Fallback bound used when no representation meets the preferred one.
const F21_RELAXED_RADIUS: f64 = 0.995;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Route {
    Direct,
    Pfaff,
    Connection,
    PfaffConnection,
    Reciprocal,
    ReciprocalComplement,
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// Direct series, for `|z| < 1` or terminating parameters.
pub fn f21_series(a: C64, b: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    if is_nonpositive_integer(c) {
        return Err(Error::DenominatorPole(format!("{c}")));
    }
    let poly = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if z.norm() >= 1.0 && !poly {
        return Err(Error::OutsideDisk(z.norm()));
    }
    Ok(pfq_unchecked(&[a, b], &[c], z, ctrl)?.with_method(Method::F21Series))
}

/// Two-term connection formula in `1 - z`, for `|1 - z| < 1`.
///
/// At `z = 1` this reduces to Gauss' sum when `Re(c - a - b) > 0`.
pub fn f21_connection(a: C64, b: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    if is_nonpositive_integer(c) {
        return Err(Error::DenominatorPole(format!("{c}")));
    }
    if z.im == 0.0 && (z.re > 1.0 || z.re <= 0.0) {
        return Err(Error::BranchCut(format!("z = {z}")));
    }
    if (one() - z).norm() >= 1.0 {
        return Err(Error::OutsideDomain(format!("|1 - z| = {} is not below 1", (one() - z).norm())));
    }
    connection(a, b, c, z, ctrl)
}

fn connection(a: C64, b: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let s = c - a - b;
    if is_integer(s) {
        return Err(Error::DegenerateConnection(format!("c - a - b = {s}")));
    }
    let w = one() - z;
    let lgc = log_gamma(c)?;

    let g1 = LogScaled::exp(lgc + log_gamma(s)?) * rgamma_ls(c - a) * rgamma_ls(c - b);
    let f1 = pfq_unchecked(&[a, b], &[one() - s], w, ctrl)?;
    let mut value = g1 * f1.value;
    let mut err = g1.abs() * f1.abs_err;
    let mut magnitude = value.abs();
    let mut terms = f1.terms;

    let at_one = w.re == 0.0 && w.im == 0.0;
    if at_one {
        if s.re <= 0.0 {
            return Err(Error::OutsideDomain(format!("Gauss sum needs Re(c - a - b) > 0, got {s}")));
        }
    } else {
        let g2 = LogScaled::exp(lgc + log_gamma(-s)? + s * w.ln()) * rgamma_ls(a) * rgamma_ls(b);
        if !g2.is_zero() {
            let f2 = pfq_unchecked(&[c - a, c - b], &[s + 1.0], w, ctrl)?;
            let t2 = g2 * f2.value;
            value = value + t2;
            err = err + g2.abs() * f2.abs_err;
            magnitude = magnitude + t2.abs();
            terms += f2.terms;
        }
    }
    err = err + magnitude * (16.0 * f64::EPSILON);
    Ok(EvalResult {
        value,
        abs_err: err,
        terms,
        method: Method::F21Connection,
        converged: true,
    })
}

/// `2F1[a, b; c; z]` anywhere in the cut plane except small neighbourhoods
/// of `e^{±iπ/3}`.
pub fn f21(a: C64, b: C64, c: C64, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    if is_nonpositive_integer(c) {
        return Err(Error::DenominatorPole(format!("{c}")));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(EvalResult::exact(LogScaled::ONE, 1, Method::F21Series));
    }
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return Ok(pfq_unchecked(&[a, b], &[c], z, ctrl)?.with_method(Method::F21Series));
    }
    if z.im == 0.0 && z.re > 1.0 {
        return Err(Error::BranchCut(format!("z = {z}")));
    }
    if z == one() {
        return connection(a, b, c, z, ctrl);
    }

    let (big, small) = if a.re >= b.re { (a, b) } else { (b, a) };
    let w = z / (z - 1.0);
    let mut candidates = vec![(z.norm(), Route::Direct), (w.norm(), Route::Pfaff)];
    if !is_integer(c - a - b) {
        candidates.push(((one() - z).norm(), Route::Connection));
    }
    if !is_integer(small - big) {
        candidates.push(((one() - w).norm(), Route::PfaffConnection));
        candidates.push(((one() / z).norm(), Route::Reciprocal));
        candidates.push(((one() / (one() - z)).norm(), Route::ReciprocalComplement));
    }
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (radius, route) = candidates[0];
    if radius > F21_RELAXED_RADIUS {
        if !is_integer(c - a - b) || (one() - z).norm() > F21_RELAXED_RADIUS {
            return Err(Error::OutsideDomain(format!("no convergent 2F1 representation at z = {z}")));
        }
        return Err(Error::DegenerateConnection(format!("c - a - b = {}", c - a - b)));
    }

    let pfaff_factor = || LogScaled::exp(-big * (one() - z).ln());
    match route {
        Route::Direct => Ok(pfq_unchecked(&[a, b], &[c], z, ctrl)?.with_method(Method::F21Series)),
        Route::Pfaff => Ok(pfq_unchecked(&[big, c - small], &[c], w, ctrl)?
            .with_method(Method::F21Series)
            .scaled(pfaff_factor())),
        Route::Connection => connection(a, b, c, z, ctrl),
        Route::PfaffConnection => Ok(connection(big, c - small, c, w, ctrl)?.scaled(pfaff_factor())),
        Route::Reciprocal => inversion(a, b, c, z, false, ctrl),
        Route::ReciprocalComplement => inversion(a, b, c, z, true, ctrl),
    }
}

/// Two-term inversion formula. With `u = 1/z` the series are
/// `(-z)^{-a} 2F1[a, a-c+1; a-b+1; u]` and the same with `a ↔ b`; with
/// `u = 1/(1-z)` they are `(1-z)^{-a} 2F1[a, c-b; a-b+1; u]` and the same
/// with `a ↔ b`.
fn inversion(a: C64, b: C64, c: C64, z: C64, complement: bool, ctrl: &SeriesControl) -> Result<EvalResult> {
    if is_integer(a - b) {
        return Err(Error::DegenerateConnection(format!("a - b = {}", a - b)));
    }
    let base = if complement { one() - z } else { -z };
    let u = if complement { one() / base } else { one() / z };
    let ln_base = base.ln();
    let lgc = log_gamma(c)?;
    let mut value = LogScaled::ZERO;
    let mut err = LogScaled::ZERO;
    let mut magnitude = LogScaled::ZERO;
    let mut terms = 0;
    for (p, q) in [(a, b), (b, a)] {
        let g = LogScaled::exp(lgc + log_gamma(q - p)? - p * ln_base) * rgamma_ls(q) * rgamma_ls(c - p);
        if g.is_zero() {
            continue;
        }
        let second = if complement { c - q } else { p - c + 1.0 };
        let f = pfq_unchecked(&[p, second], &[p - q + 1.0], u, ctrl)?;
        let t = g * f.value;
        value = value + t;
        err = err + g.abs() * f.abs_err;
        magnitude = magnitude + t.abs();
        terms += f.terms;
    }
    err = err + magnitude * (16.0 * f64::EPSILON);
    Ok(EvalResult {
        value,
        abs_err: err,
        terms,
        method: Method::F21Connection,
        converged: true,
    })
}
