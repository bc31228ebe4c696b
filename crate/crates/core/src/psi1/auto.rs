//! Region-aware choice among the Ψ₁ representations.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Psi1Method, SeriesControl};
use crate::hyp::quad::DEFAULT_MAX_LEVEL;
use crate::psi1::double_series::psi1_double_series;
use crate::psi1::integral::psi1_integral_with;
use crate::psi1::large_x::psi1_large_x;
use crate::psi1::near_unit::psi1_near_unit;
use crate::psi1::params::{Psi1Params, Psi1Point};
use crate::psi1::single_series::psi1_single_series;

/// Numerical settings for Ψ₁ evaluation and the dispatch thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Psi1Config {
    pub series: SeriesControl,
    /// Relative tolerance between successive quadrature levels.
    pub quad_tol: f64,
    pub quad_max_level: u32,
    /// The double series is used for `|x|` below this.
    pub double_radius: f64,
    /// The near-unit expansion is used for `|x - 1|` below this.
    pub near_unit_radius: f64,
    /// The large-`x` representation is used for `|x - 1|` above this ...
    pub large_x_radius: f64,
    /// ... provided `|y|` does not exceed this.
    pub moderate_y: f64,
}

impl Default for Psi1Config {
    fn default() -> Self {
        Psi1Config {
            series: SeriesControl::default(),
            quad_tol: 1e-12,
            quad_max_level: DEFAULT_MAX_LEVEL,
            double_radius: 0.75,
            near_unit_radius: 0.75,
            large_x_radius: 1.5,
            moderate_y: 10.0,
        }
    }
}

/// Evaluates Ψ₁ with an explicitly chosen representation.
pub fn evaluate_with(method: Psi1Method, p: &Psi1Params, pt: &Psi1Point, cfg: &Psi1Config) -> Result<EvalResult> {
    match method {
        Psi1Method::DoubleSeries => psi1_double_series(p, pt, &cfg.series),
        Psi1Method::SingleSeries => psi1_single_series(p, pt, &cfg.series),
        Psi1Method::Integral => psi1_integral_with(p, pt, cfg.quad_tol, cfg.quad_max_level, &cfg.series),
        Psi1Method::NearUnit => psi1_near_unit(p, pt, &cfg.series),
        Psi1Method::LargeX => psi1_large_x(p, pt, &cfg.series),
    }
}

/// Representations whose preconditions hold at `pt`, in dispatch order.
pub fn candidate_methods(p: &Psi1Params, pt: &Psi1Point, cfg: &Psi1Config) -> Vec<Psi1Method> {
    let dist = pt.one_minus_x().norm();
    let mut out = Vec::new();
    if pt.x.norm() < cfg.double_radius {
        out.push(Psi1Method::DoubleSeries);
    }
    if dist < cfg.near_unit_radius && p.near_unit_ok() {
        out.push(Psi1Method::NearUnit);
    }
    if dist > cfg.large_x_radius && p.large_x_ok() && pt.y.norm() <= cfg.moderate_y {
        out.push(Psi1Method::LargeX);
    }
    if p.integral_ok() {
        out.push(Psi1Method::Integral);
    }
    out.push(Psi1Method::SingleSeries);
    out
}

/// A result whose own error estimate exceeds this multiple of the requested
/// tolerance sends dispatch on to the next representation.
pub const ACCURACY_SLACK: f64 = 1e3;

/// Evaluates Ψ₁ with the first applicable representation, falling back to
/// the next one when an evaluator fails or reports an error estimate above
/// `ACCURACY_SLACK` times the tolerance. If no representation is accurate
/// enough, the most accurate result is returned.
pub fn psi1_auto(p: &Psi1Params, pt: &Psi1Point, cfg: &Psi1Config) -> Result<EvalResult> {
    let target = ACCURACY_SLACK * cfg.series.rel_tol.max(cfg.quad_tol);
    let mut failures = Vec::new();
    let mut best: Option<EvalResult> = None;
    for method in candidate_methods(p, pt, cfg) {
        match evaluate_with(method, p, pt, cfg) {
            Ok(r) if r.rel_err() <= target => return Ok(r),
            Ok(r) => {
                if best.as_ref().is_none_or(|b| r.rel_err() < b.rel_err()) {
                    best = Some(r);
                }
            }
            Err(e) => failures.push(format!("{}: {e}", method.tag())),
        }
    }
    best.ok_or_else(|| Error::NoApplicableMethod(failures.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::Method;

    #[test]
    fn routing() {
        let cfg = Psi1Config::default();
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let r = psi1_auto(&p, &Psi1Point::real(0.3, 0.7).unwrap(), &cfg).unwrap();
        assert_eq!(r.method, Method::Psi1(Psi1Method::DoubleSeries));
        let r = psi1_auto(&p, &Psi1Point::real(-10.0, 11.0).unwrap(), &cfg).unwrap();
        assert_eq!(r.method, Method::Psi1(Psi1Method::Integral));
        let r = psi1_auto(&p, &Psi1Point::real(-10.0, 2.0).unwrap(), &cfg).unwrap();
        assert_eq!(r.method, Method::Psi1(Psi1Method::LargeX));
    }

    #[test]
    fn falls_back_to_single_series() {
        let cfg = Psi1Config::default();
        let p = Psi1Params::real(3.0, 2.0, 2.0, 3.0).unwrap();
        let r = psi1_auto(&p, &Psi1Point::real(-4.0, 0.5).unwrap(), &cfg).unwrap();
        assert_eq!(r.method, Method::Psi1(Psi1Method::SingleSeries));
    }

    #[test]
    fn skips_inaccurate_double_series() {
        let cfg = Psi1Config::default();
        let p = Psi1Params::real(3.093_098_452_531_057, 2.617_231_272_187_602_5, 0.475_698_602_895_327_6, 2.308_928_621_812_779_4).unwrap();
        let pt = Psi1Point::real(-0.728_117_448_677_293_7, 4.872_836_555_593_587).unwrap();
        let d = evaluate_with(Psi1Method::DoubleSeries, &p, &pt, &cfg).unwrap();
        assert!(d.rel_err() > 1e-6);
        let r = psi1_auto(&p, &pt, &cfg).unwrap();
        assert_ne!(r.method, Method::Psi1(Psi1Method::DoubleSeries));
        assert!(r.rel_err() < 1e-12);
        assert!((r.value.to_complex().re / 15.141_439_400_803_277 - 1.0).abs() < 1e-12);
    }
}
