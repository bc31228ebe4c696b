//! Euler-type integral representation of Ψ₁.
//!
//! `Ψ₁ = Γ(c)/(Γ(b)Γ(c-b)) ∫₀¹ t^{b-1} (1-t)^{c-b-1} (1-xt)^{-a}
//! 1F1[a; c'; y/(1-xt)] dt`, for `Re c > Re b > 0`.
//!
//! For large `|x y|` the integrand is concentrated in a layer of width
//! about `1/(|x|(1+|y|))` next to `t = 0`, so the interval is split at
//! geometrically growing breakpoints before tanh-sinh is applied.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, Psi1Method, SeriesControl};
use crate::gamma::log_gamma;
use crate::hyp::f11::f11;
use crate::hyp::quad::{tanh_sinh_against, tanh_sinh_interval, DEFAULT_MAX_LEVEL};
use crate::psi1::params::{Psi1Params, Psi1Point};
use crate::scaled::{LogScaled, C64};

/// Evaluates the integral representation with relative quadrature
/// tolerance `tol`.
pub fn psi1_integral(p: &Psi1Params, pt: &Psi1Point, tol: f64) -> Result<EvalResult> {
    psi1_integral_with(p, pt, tol, DEFAULT_MAX_LEVEL, &SeriesControl::default())
}

/// [`psi1_integral`] with explicit refinement depth and inner series
/// control.
pub fn psi1_integral_with(
    p: &Psi1Params,
    pt: &Psi1Point,
    tol: f64,
    max_level: u32,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    ctrl.validate()?;
    if !(p.c.re > p.b.re && p.b.re > 0.0) {
        return Err(Error::ConstraintViolation(format!(
            "integral needs Re c > Re b > 0, got b = {}, c = {}",
            p.b, p.c
        )));
    }
    if pt.x.im == 0.0 && pt.x.re >= 1.0 {
        return Err(Error::BranchCut(format!("x = {} lies on [1, ∞)", pt.x)));
    }
    let method = Method::Psi1(Psi1Method::Integral);
    let (x, y) = (pt.x, pt.y);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    if x == zero && y == zero {
        return Ok(EvalResult::exact(LogScaled::ONE, 1, method));
    }
    let e1 = p.b - 1.0;
    let e2 = p.c - p.b - 1.0;
    let worst_inner = Cell::new(0.0f64);

    // (1 - xt)^{-a} 1F1[a; c'; y/(1 - xt)], with 1 - xt kept accurate next
    // to t = 1
    let smooth = |t: f64, omt: f64| -> Result<LogScaled> {
        let w = if t <= 0.5 { one - x * t } else { (one - x) + x * omt };
        let inner = f11(p.a, p.c_prime, y / w, ctrl)?;
        worst_inner.set(worst_inner.get().max(inner.rel_err()));
        Ok(LogScaled::exp(-p.a * w.ln()) * inner.value)
    };
    // u^e, or None where it vanishes or is singular at u = 0
    let power = |e: C64, u: f64| -> Option<LogScaled> {
        if u > 0.0 {
            Some(LogScaled::exp(e * u.ln()))
        } else if e == zero {
            Some(LogScaled::ONE)
        } else {
            None
        }
    };

    let left_singular = p.b.re < SUBTRACT_BELOW;
    let right_singular = (p.c - p.b).re < SUBTRACT_BELOW;
    let pieces = breakpoints(x, y, left_singular || right_singular);
    let last = pieces.len() - 1;
    let mut total = LogScaled::ZERO;
    let mut err = LogScaled::ZERO;
    let mut nodes = 0;
    for (k, &(lo, hi)) in pieces.iter().enumerate() {
        let (known, r) = if k == 0 && left_singular {
            // t^{b-1} h(t) = t^{b-1} h(0) + t^{b-1} (h(t) - h(0))
            let h0 = smooth(0.0, 1.0)?;
            let known = h0 * LogScaled::exp(p.b * hi.ln()) / LogScaled::from(p.b);
            let f = |t: f64, omt: f64| -> Result<LogScaled> {
                match (power(e1, t), power(e2, omt)) {
                    (Some(u), Some(v)) => Ok(u * (v * smooth(t, omt)? - h0)),
                    _ => Ok(LogScaled::ZERO),
                }
            };
            (known, tanh_sinh_against(f, lo, hi, tol, max_level, known)?)
        } else if k == last && right_singular {
            // (1-t)^{c-b-1} g(t) = (1-t)^{c-b-1} g(1) + (1-t)^{c-b-1} (g(t) - g(1))
            let g1 = smooth(1.0, 0.0)?;
            let cb = p.c - p.b;
            let known = g1 * LogScaled::exp(cb * (1.0 - lo).ln()) / LogScaled::from(cb);
            let f = |t: f64, omt: f64| -> Result<LogScaled> {
                match (power(e1, t), power(e2, omt)) {
                    (Some(u), Some(v)) => Ok(v * (u * smooth(t, omt)? - g1)),
                    _ => Ok(LogScaled::ZERO),
                }
            };
            (known, tanh_sinh_against(f, lo, hi, tol, max_level, known)?)
        } else {
            let f = |t: f64, omt: f64| -> Result<LogScaled> {
                match (power(e1, t), power(e2, omt)) {
                    (Some(u), Some(v)) => Ok(u * v * smooth(t, omt)?),
                    _ => Ok(LogScaled::ZERO),
                }
            };
            (LogScaled::ZERO, tanh_sinh_interval(f, lo, hi, tol, max_level)?)
        };
        total = total + known + r.value;
        err = err + r.abs_err;
        nodes += r.terms;
    }

    let prefactor = LogScaled::exp(log_gamma(p.c)? - log_gamma(p.b)? - log_gamma(p.c - p.b)?);
    let value = total * prefactor;
    let abs_err = err * prefactor.abs() + value.abs() * (worst_inner.get() + 16.0 * f64::EPSILON);
    Ok(EvalResult {
        value,
        abs_err,
        terms: nodes,
        method,
        converged: true,
    })
}

/// For `Re b` or `Re(c - b)` below this, the endpoint value of the regular
/// factor is split off and its power integrated in closed form; otherwise
/// too much of the integral sits closer to the endpoint than a float can
/// resolve.
const SUBTRACT_BELOW: f64 = 0.5;

/// Subintervals `[0, s0], [s0, 2 s0], [2 s0, 4 s0], …, [·, 1]` with
/// `s0 = 1/(1 + |x|(1 + |y|))`. A single interval is halved when `split`
/// asks for separate end pieces.
fn breakpoints(x: C64, y: C64, split: bool) -> Vec<(f64, f64)> {
    let s0 = 1.0 / (1.0 + x.norm() * (1.0 + y.norm()));
    if s0 >= 0.25 {
        return if split { vec![(0.0, 0.5), (0.5, 1.0)] } else { vec![(0.0, 1.0)] };
    }
    let mut out = Vec::new();
    let mut lo = 0.0;
    let mut hi = s0;
    while hi < 0.5 {
        out.push((lo, hi));
        lo = hi;
        hi *= 2.0;
    }
    out.push((lo, 1.0));
    out
}
