//! Summation helpers shared by the series evaluators.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, SeriesControl};
use crate::scaled::{LogScaled, ScaledAccumulator, C64};

/// Tracks the stagnation stopping rule on log magnitudes.
#[derive(Debug, Clone)]
pub(crate) struct Stagnation {
    window: usize,
    ln_tol: f64,
    below: usize,
    prev_ln: f64,
}

impl Stagnation {
    pub fn new(ctrl: &SeriesControl) -> Self {
        Stagnation {
            window: ctrl.stagnation_window,
            ln_tol: ctrl.rel_tol.ln(),
            below: 0,
            prev_ln: f64::INFINITY,
        }
    }

    /// Feeds the latest term and partial sum magnitudes; true once the last
    /// `window` terms were all negligible and non-increasing.
    pub fn update(&mut self, ln_term: f64, ln_sum: f64) -> bool {
        let small = ln_term == f64::NEG_INFINITY || ln_term < self.ln_tol + ln_sum;
        if small && ln_term <= self.prev_ln {
            self.below += 1;
        } else {
            self.below = 0;
        }
        self.prev_ln = ln_term;
        self.below >= self.window
    }
}

/// Sums `1 + Σ t_k` where `t_{k+1} = t_k · ratio(k)`, with the stagnation rule.
///
/// A zero ratio means the series terminates and the result is exact.
pub(crate) fn sum_by_ratio(
    first: LogScaled,
    mut ratio: impl FnMut(usize) -> C64,
    ctrl: &SeriesControl,
    method: Method,
) -> Result<EvalResult> {
    let mut acc = ScaledAccumulator::new(first);
    if first.is_zero() {
        return Ok(EvalResult::exact(LogScaled::ZERO, 1, method));
    }
    let mut stag = Stagnation::new(ctrl);
    for k in 0..ctrl.max_terms {
        let r = ratio(k);
        if r.re == 0.0 && r.im == 0.0 {
            let mut res = EvalResult::exact(acc.value(), k + 1, method);
            res.abs_err = acc.error(0.0);
            return Ok(res);
        }
        if !(r.re.is_finite() && r.im.is_finite()) {
            return Err(Error::NonFinite(k as f64));
        }
        acc.push_ratio(r);
        // a slowly decaying tail is worth r/(1-r) times its first term
        let last_ratio = r.norm();
        let tail = if last_ratio < 0.999 {
            (last_ratio / (1.0 - last_ratio)).max(1.0)
        } else {
            ctrl.stagnation_window as f64
        };
        let ln_t = acc.term_abs().ln() + tail.ln();
        let ln_s = acc.sum_abs().ln();
        if stag.update(ln_t, ln_s) {
            return Ok(EvalResult {
                value: acc.value(),
                abs_err: acc.error(tail),
                terms: k + 2,
                method,
                converged: true,
            });
        }
    }
    Err(Error::NoConvergence {
        terms: ctrl.max_terms,
        last_rel_change: acc.term_abs() / acc.sum_abs(),
    })
}

/// Accumulates log-scaled terms whose values are produced one at a time,
/// typically each involving an inner function evaluation.
#[derive(Debug, Clone)]
pub(crate) struct LsSum {
    pub sum: LogScaled,
    abs_sum: LogScaled,
    inner_err: LogScaled,
    last: LogScaled,
    tail: f64,
    stag: Stagnation,
    pub terms: usize,
}

impl LsSum {
    pub fn new(ctrl: &SeriesControl) -> Self {
        LsSum {
            sum: LogScaled::ZERO,
            abs_sum: LogScaled::ZERO,
            inner_err: LogScaled::ZERO,
            last: LogScaled::ZERO,
            tail: 1.0,
            stag: Stagnation::new(ctrl),
            terms: 0,
        }
    }

    /// Adds a term with its own absolute error; true when the sum has
    /// stagnated.
    pub fn push(&mut self, term: LogScaled, err: LogScaled) -> bool {
        self.sum = self.sum + term;
        self.abs_sum = self.abs_sum + term.abs();
        self.inner_err = self.inner_err + err;
        let ratio = term.abs_ratio(&self.last);
        self.tail = if self.terms > 0 && ratio < 0.999 { (ratio / (1.0 - ratio)).max(1.0) } else { 1.0 };
        self.last = term.abs();
        self.terms += 1;
        self.stag.update(term.ln_abs() + self.tail.ln(), self.sum.ln_abs())
    }

    pub fn finish(&self, window: usize, method: Method, converged: bool) -> EvalResult {
        let rounding = self.abs_sum * (4.0 * f64::EPSILON);
        let tail = if converged { self.last * self.tail.max(window as f64) } else { self.last };
        EvalResult {
            value: self.sum,
            abs_err: tail + rounding + self.inner_err,
            terms: self.terms,
            method,
            converged,
        }
    }

    /// Finishes a series that terminated exactly.
    pub fn finish_exact(&self, method: Method) -> EvalResult {
        let rounding = self.abs_sum * (4.0 * f64::EPSILON);
        EvalResult {
            value: self.sum,
            abs_err: rounding + self.inner_err,
            terms: self.terms,
            method,
            converged: true,
        }
    }

    pub fn no_convergence(&self) -> Error {
        Error::NoConvergence {
            terms: self.terms,
            last_rel_change: self.last.abs_ratio(&self.sum),
        }
    }
}

/// Sums a divergent asymptotic series `Σ t_s`, `t_0 = 1`, up to its smallest
/// term.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AsymptoticSum {
    pub sum: C64,
    /// Magnitude of the first omitted term (zero when the series terminated).
    pub first_omitted: f64,
    pub terms: usize,
}

pub(crate) fn asymptotic_sum(mut ratio: impl FnMut(usize) -> C64, max_terms: usize) -> AsymptoticSum {
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    for s in 0..max_terms {
        let r = ratio(s);
        if r.re == 0.0 && r.im == 0.0 {
            return AsymptoticSum { sum, first_omitted: 0.0, terms: s + 1 };
        }
        let next = term * r;
        if next.norm() >= term.norm() || !next.norm().is_finite() {
            return AsymptoticSum { sum, first_omitted: next.norm(), terms: s + 1 };
        }
        if next.norm() <= 0.25 * f64::EPSILON * sum.norm() {
            sum += next;
            return AsymptoticSum { sum, first_omitted: next.norm(), terms: s + 2 };
        }
        sum += next;
        term = next;
    }
    AsymptoticSum { sum, first_omitted: term.norm(), terms: max_terms }
}

/// `Σ_n κ_n F_n` with `κ_0 = 1`, `κ_{n+1} = κ_n · ratio(n)` and `F_n` an
/// inner evaluation.
pub(crate) fn coefficient_series(
    ctrl: &SeriesControl,
    mut ratio: impl FnMut(f64) -> C64,
    mut inner: impl FnMut(f64) -> Result<EvalResult>,
) -> Result<EvalResult> {
    let mut coeff = LogScaled::ONE;
    let mut sum = LsSum::new(ctrl);
    for n in 0..ctrl.max_terms {
        if n > 0 {
            coeff = coeff.scale(ratio((n - 1) as f64));
        }
        if coeff.is_zero() {
            return Ok(sum.finish_exact(Method::PfqSeries));
        }
        let f = inner(n as f64)?;
        if sum.push(coeff * f.value, coeff.abs() * f.abs_err) {
            return Ok(sum.finish(ctrl.stagnation_window, Method::PfqSeries, true));
        }
    }
    Err(sum.no_convergence())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_series() {
        let ctrl = SeriesControl::default();
        let r = sum_by_ratio(LogScaled::ONE, |k| C64::new(1.0 / (k as f64 + 1.0), 0.0), &ctrl, Method::PfqSeries)
            .unwrap();
        assert!((r.value.to_complex().re - std::f64::consts::E).abs() < 1e-15);
        assert!(r.converged);
        assert!(r.rel_err() < 1e-13);
    }

    #[test]
    fn terminating_series_is_exact() {
        let ctrl = SeriesControl::default();
        // (1 + 1)^3 via binomial ratios
        let r = sum_by_ratio(
            LogScaled::ONE,
            |k| C64::new((3.0 - k as f64) / (k as f64 + 1.0), 0.0),
            &ctrl,
            Method::PfqSeries,
        )
        .unwrap();
        assert_eq!(r.value.to_complex().re, 8.0);
    }

    #[test]
    fn max_terms_reported() {
        let ctrl = SeriesControl { max_terms: 10, ..Default::default() };
        let r = sum_by_ratio(LogScaled::ONE, |_| C64::new(0.999, 0.0), &ctrl, Method::PfqSeries);
        assert!(matches!(r, Err(Error::NoConvergence { terms: 10, .. })));
    }

    #[test]
    fn asymptotic_stops_at_smallest_term() {
        // Σ s! / z^s at z = 10: smallest term near s = 10
        let z = 10.0;
        let a = asymptotic_sum(|s| C64::new((s as f64 + 1.0) / z, 0.0), 1000);
        assert!(a.first_omitted > 0.0);
        assert!(a.terms >= 9 && a.terms <= 12);
        assert!(a.first_omitted < 1e-3);
    }
}
