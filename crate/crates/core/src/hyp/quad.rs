//! Tanh-sinh quadrature on finite intervals.
//!
//! Nodes cluster double-exponentially at both endpoints, so integrable
//! algebraic endpoint singularities need no special treatment. Integrands
//! receive both `t` and `1 - t` so factors like `(1-t)^{β}` can be formed
//! without cancellation next to `t = 1`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};
use crate::scaled::LogScaled;

/// Deepest level held in the node table; level `L` uses step `2^-L`.
pub const TABLE_MAX_LEVEL: u32 = 12;

pub const DEFAULT_MAX_LEVEL: u32 = 10;

/// Levels computed before the convergence test may stop the refinement.
const MIN_LEVEL: u32 = 3;

/// Largest `π sinh u` kept, so nodes stay representable next to 0.
const MAX_PI_SINH: f64 = 690.0;

#[derive(Debug, Clone, Copy)]
struct Node {
    /// Distance of the node from the nearer endpoint of `(0, 1)`.
    s: f64,
    weight: f64,
    /// The centre node is not mirrored.
    centre: bool,
}

fn node_table() -> &'static [Vec<Node>] {
    static TABLE: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let u_max = (MAX_PI_SINH / PI).asinh();
        (0..=TABLE_MAX_LEVEL)
            .map(|level| {
                let h = 0.5f64.powi(level as i32);
                let (start, step) = if level == 0 { (0usize, 1usize) } else { (1, 2) };
                let mut nodes = Vec::new();
                let mut j = start;
                loop {
                    let u = j as f64 * h;
                    if u > u_max {
                        break;
                    }
                    let e = (-PI * u.sinh()).exp();
                    let s = e / (1.0 + e);
                    let weight = PI * u.cosh() * e / ((1.0 + e) * (1.0 + e));
                    nodes.push(Node { s, weight, centre: j == 0 });
                    j += step;
                }
                nodes
            })
            .collect()
    })
}

/// `∫₀¹ f(t) dt` where `f` is called as `f(t, 1 - t)`.
///
/// Refines until two successive levels agree to `tol` relative to the
/// current estimate.
pub fn tanh_sinh_integrate<F>(f: F, tol: f64, max_level: u32) -> Result<EvalResult>
where
    F: FnMut(f64, f64) -> Result<LogScaled>,
{
    tanh_sinh_interval(f, 0.0, 1.0, tol, max_level)
}

/// `∫_lo^hi f(t) dt` with `f` called as `f(t, 1 - t)`; the complement is
/// formed from the distance to the nearer endpoint so it keeps full
/// relative accuracy for `t` close to 1.
pub fn tanh_sinh_interval<F>(f: F, lo: f64, hi: f64, tol: f64, max_level: u32) -> Result<EvalResult>
where
    F: FnMut(f64, f64) -> Result<LogScaled>,
{
    tanh_sinh_against(f, lo, hi, tol, max_level, LogScaled::ZERO)
}

/// [`tanh_sinh_interval`] with the level-to-level change measured against
/// `max(|estimate|, |reference|)`, for integrals that are a small
/// correction to a known quantity.
pub(crate) fn tanh_sinh_against<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_level: u32,
    reference: LogScaled,
) -> Result<EvalResult>
where
    F: FnMut(f64, f64) -> Result<LogScaled>,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidControl(format!("quadrature tolerance must be positive, got {tol}")));
    }
    if max_level > TABLE_MAX_LEVEL {
        return Err(Error::InvalidControl(format!(
            "max_level {max_level} exceeds the node table depth {TABLE_MAX_LEVEL}"
        )));
    }
    if !(hi > lo) {
        return Err(Error::InvalidControl(format!("empty interval [{lo}, {hi}]")));
    }
    let width = hi - lo;
    let mut eval = |s: f64, near_lo: bool| -> Result<LogScaled> {
        let (t, omt) = if near_lo {
            (lo + width * s, (1.0 - hi) + width * (1.0 - s))
        } else {
            (hi - width * s, (1.0 - hi) + width * s)
        };
        let v = f(t, omt)?;
        if !v.is_finite() {
            return Err(Error::NonFinite(t));
        }
        Ok(v)
    };

    let table = node_table();
    let mut raw = LogScaled::ZERO;
    let mut previous: Option<LogScaled> = None;
    let mut nodes_used = 0usize;
    let mut last_change = f64::INFINITY;
    for level in 0..=max_level {
        for node in &table[level as usize] {
            let mut contrib = eval(node.s, true)?;
            nodes_used += 1;
            if !node.centre {
                contrib = contrib + eval(node.s, false)?;
                nodes_used += 1;
            }
            raw = raw + contrib * node.weight;
        }
        let h = 0.5f64.powi(level as i32);
        let estimate = raw * (h * width);
        if let Some(prev) = previous {
            let diff = estimate - prev;
            let size = if estimate.abs_ratio(&reference) >= 1.0 { estimate } else { reference };
            last_change = if size.is_zero() {
                if diff.is_zero() { 0.0 } else { f64::INFINITY }
            } else {
                diff.abs_ratio(&size)
            };
            if level >= MIN_LEVEL && last_change <= tol {
                return Ok(EvalResult {
                    value: estimate,
                    abs_err: diff.abs() + estimate.abs() * (8.0 * f64::EPSILON),
                    terms: nodes_used,
                    method: Method::Quadrature,
                    converged: true,
                });
            }
        }
        previous = Some(estimate);
    }
    Err(Error::MaxLevelExceeded { levels: max_level, rel_change: last_change })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scaled::C64;

    fn real(x: f64) -> LogScaled {
        LogScaled::from_real(x)
    }

    #[test]
    fn constant() {
        let r = tanh_sinh_integrate(|_, _| Ok(real(1.0)), 1e-12, DEFAULT_MAX_LEVEL).unwrap();
        assert!((r.value.to_complex().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn endpoint_singularity() {
        let r = tanh_sinh_integrate(|t, _| Ok(real(t.powf(-0.5))), 1e-12, DEFAULT_MAX_LEVEL).unwrap();
        assert!((r.value.to_complex().re - 2.0).abs() < 1e-12);
        let r = tanh_sinh_integrate(|t, _| Ok(real(t.sqrt())), 1e-12, DEFAULT_MAX_LEVEL).unwrap();
        assert!((r.value.to_complex().re - 2.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn singularity_at_one_uses_complement() {
        // ∫ (1-t)^{-0.9} dt = 10
        let r = tanh_sinh_integrate(|_, omt| Ok(real(omt.powf(-0.9))), 1e-11, DEFAULT_MAX_LEVEL).unwrap();
        assert!((r.value.to_complex().re - 10.0).abs() < 1e-9);
    }

    #[test]
    fn subinterval() {
        let r = tanh_sinh_interval(|t, omt| {
            assert!((t + omt - 1.0).abs() < 1e-15);
            Ok(real(t * t))
        }, 0.25, 0.5, 1e-12, DEFAULT_MAX_LEVEL)
        .unwrap();
        let exact = (0.125 - 0.25f64.powi(3)) / 3.0;
        assert!((r.value.to_complex().re - exact).abs() < 1e-15);
    }

    #[test]
    fn log_scaled_integrand() {
        // ∫ e^{1000 t} dt = (e^{1000} - 1) / 1000
        let r = tanh_sinh_integrate(|t, _| Ok(LogScaled::exp(C64::new(1000.0 * t, 0.0))), 1e-10, 12).unwrap();
        assert!((r.value.ln_abs() - (1000.0 - 1000f64.ln())).abs() < 1e-8);
    }

    #[test]
    fn reports_non_finite() {
        let r = tanh_sinh_integrate(|_, _| Ok(real(f64::NAN)), 1e-12, 4);
        assert!(matches!(r, Err(Error::NonFinite(_))));
    }

    #[test]
    fn reports_max_level() {
        let r = tanh_sinh_integrate(|t, _| Ok(real((200.0 * t).sin())), 1e-14, 3);
        assert!(matches!(r, Err(Error::MaxLevelExceeded { .. })));
    }
}
